#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cameral/errors.hpp"
#include "cameral/exact/rational.hpp"

namespace cameral {

namespace detail {
template <class T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in ascending degree.
///
/// T may be any commutative ring from the scalar tower (Rational, QuadExt,
/// Dual<...>) or another Poly, which gives bivariate polynomials. Division,
/// gcd and the square-free part need inverse(T), so they only instantiate for
/// fields. The zero polynomial has an empty coefficient list.
///
/// Variable names must agree for two non-constant operands; a constant takes
/// the name of the other operand.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(T(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(T c, std::string var = "z") : var_(std::move(var)) {
        coeffs_.push_back(std::move(c));
        trim();
    }
    Poly(std::vector<T> coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) { trim(); }

    static Poly monomial(T c, int degree, std::string var = "z") {
        std::vector<T> cs(static_cast<std::size_t>(degree) + 1);
        cs.back() = std::move(c);
        return Poly(std::move(cs), std::move(var));
    }
    static Poly variable(std::string var = "z") { return monomial(T(1), 1, std::move(var)); }

    const std::vector<T>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    Poly with_var(std::string var) const { return Poly(coeffs_, std::move(var)); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : T{};
    }
    T lead() const { return coeffs_.empty() ? T{} : coeffs_.back(); }

    Poly& operator+=(const Poly& o) {
        var_ = merged_var(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        var_ = merged_var(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& r) {
        for (auto& c : coeffs_) c *= r;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        std::string var = a.merged_var(b);
        if (a.is_zero() || b.is_zero()) return Poly(std::vector<T>{}, std::move(var));
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out), std::move(var));
    }
    friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Formal derivative.
    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly(std::vector<T>{}, var_);
        std::vector<T> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Poly(std::move(out), var_);
    }

    /// Horner evaluation at x in any ring X that is constructible from T.
    template <class X>
    X evaluate(const X& x) const {
        if (coeffs_.empty()) return X(T{});
        X acc(coeffs_.back());
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + X(coeffs_[i]);
        return acc;
    }
    T operator()(const T& x) const { return evaluate<T>(x); }

    /// p(q(var)), keeping q's variable name.
    Poly compose(const Poly& q) const {
        if (coeffs_.empty()) return Poly(std::vector<T>{}, q.var_);
        Poly acc(coeffs_.back(), q.var_);
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * q + Poly(coeffs_[i], q.var_);
        return acc;
    }

    /// p(var + a).
    Poly shift(const T& a) const {
        return compose(Poly(std::vector<T>{a, T(1)}, var_));
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (detail::coeff_is_zero(coeffs_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << coeffs_[i] << ')';
            if (i >= 1) os << '*' << var_;
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::string merged_var(const Poly& o) const {
        if (is_constant()) return o.is_constant() ? var_ : o.var_;
        if (!o.is_constant() && o.var_ != var_)
            throw MathError("polynomials in different variables: " + var_ + " and " + o.var_);
        return var_;
    }

    std::vector<T> coeffs_;
    std::string var_ = "z";
};

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero();
}

template <class T>
struct DivMod {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Euclidean division over a field; throws MathError for a zero divisor.
template <class T>
DivMod<T> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    const T inv_lead = inverse(b.lead());
    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    std::vector<T> quot(static_cast<std::size_t>(std::max(da - db + 1, 0)));
    for (int k = da - db; k >= 0; --k) {
        const T c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (is_zero(c)) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(std::max(std::min(da + 1, db), 0)));
    const std::string var = a.is_constant() ? b.var() : a.var();
    return {Poly<T>(std::move(quot), var), Poly<T>(std::move(rem), var)};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).quotient;
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
    return divmod(a, b).remainder;
}

/// Quotient a/b, asserting that b divides a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("polynomial division is not exact");
    return q;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
    if (p.is_zero()) return p;
    const T inv = inverse(p.lead());
    std::vector<T> cs = p.coeffs();
    for (auto& c : cs) c = c * inv;
    return Poly<T>(std::move(cs), p.var());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Product of the distinct irreducible factors, monic.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
    if (p.is_constant()) return monic(p);
    return monic(exact_div(p, gcd(p, p.derivative())));
}

/// Yun's square-free decomposition: p = lead * prod_i factors[i]^(i+1), each
/// factor monic and square-free, pairwise coprime (possibly constant 1).
template <class T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& p) {
    if (p.is_zero()) throw MathError("square-free decomposition of the zero polynomial");
    std::vector<Poly<T>> out;
    if (p.is_constant()) return out;
    const Poly<T> dp = p.derivative();
    const Poly<T> g = gcd(p, dp);
    Poly<T> c = exact_div(p, g);
    Poly<T> d = exact_div(dp, g) - c.derivative();
    while (!c.is_constant()) {
        Poly<T> a = gcd(c, d);
        out.push_back(a);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
    }
    return out;
}

}  // namespace cameral
