#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cameral/errors.hpp"
#include "cameral/exact/poly.hpp"
#include "cameral/exact/quadext.hpp"
#include "cameral/exact/rational.hpp"

namespace cameral {

/// Precision value of a series that is an exact Laurent polynomial.
inline constexpr int kExact = std::numeric_limits<int>::max();

namespace detail {
inline int sat_add(int a, int b) { return (a == kExact || b == kExact) ? kExact : a + b; }
inline int sat_mul(int a, int b) { return (a == kExact || b == kExact) ? kExact : a * b; }
}  // namespace detail

/// Truncated Laurent series in one local coordinate t.
///
/// The series is known modulo t^precision(): every coefficient of an exponent
/// below the precision is exact, everything at or above it is unknown.
/// Arithmetic tracks the guaranteed precision pessimistically, and reading a
/// coefficient outside the window throws TruncationError.
///
/// Storage is normalized: the first stored coefficient is nonzero and sits at
/// exponent start_, trailing zeros are dropped.
template <class T>
class Series {
public:
    /// Exact zero.
    Series() = default;
    explicit Series(T c) : start_(0), prec_(kExact) {
        coeffs_.push_back(std::move(c));
        normalize();
    }
    template <class U>
        requires(!std::same_as<U, T> && std::constructible_from<T, const U&>)
    explicit Series(const U& c) : Series(T(c)) {}
    Series(int start, std::vector<T> coeffs, int precision)
        : start_(start), coeffs_(std::move(coeffs)), prec_(precision) {
        normalize();
    }

    static Series monomial(T c, int exponent) { return Series(exponent, {std::move(c)}, kExact); }
    static Series variable() { return monomial(T(1), 1); }
    /// Exact series from a polynomial whose coefficients convert to T.
    template <class U>
    static Series from_poly(const Poly<U>& p) {
        std::vector<T> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) cs.push_back(T(c));
        return Series(0, std::move(cs), kExact);
    }

    int precision() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    /// Every known coefficient is zero.
    bool is_known_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient, or the precision when none is known.
    int val() const { return coeffs_.empty() ? prec_ : start_; }
    /// Highest exponent with a stored nonzero coefficient (start - 1 when empty).
    int last_exponent() const { return start_ + static_cast<int>(coeffs_.size()) - 1; }

    T coeff(int e) const {
        if (e >= prec_)
            throw TruncationError("coefficient of t^" + std::to_string(e) + " requested from a series known mod t^" +
                                  std::to_string(prec_));
        if (coeffs_.empty() || e < start_ || e > last_exponent()) return T{};
        return coeffs_[static_cast<std::size_t>(e - start_)];
    }
    T lead() const {
        if (coeffs_.empty()) throw TruncationError("leading coefficient of a series with no known nonzero term");
        return coeffs_.front();
    }

    /// Forget every coefficient at or above t^n.
    Series truncated(int n) const {
        if (n >= prec_) return *this;
        std::vector<T> cs;
        for (int e = start_; e < n && e <= last_exponent(); ++e) cs.push_back(coeffs_[static_cast<std::size_t>(e - start_)]);
        return Series(std::min(start_, n), std::move(cs), n);
    }
    /// Multiply by t^k.
    Series shifted(int k) const { return Series(start_ + k, coeffs_, detail::sat_add(prec_, k)); }
    /// Same coefficients, declared exact (used to restart an iteration).
    Series as_exact() const { return Series(start_, coeffs_, kExact); }

    Series& operator+=(const Series& o) { return *this = combine(*this, o, false); }
    Series& operator-=(const Series& o) { return *this = combine(*this, o, true); }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
    friend Series operator*(const Series& a, const Series& b) {
        const int prec = std::min(detail::sat_add(a.prec_, b.val()), detail::sat_add(b.prec_, a.val()));
        if (a.coeffs_.empty() || b.coeffs_.empty()) return Series(prec, {}, prec);
        const int start = a.start_ + b.start_;
        const int top = prec == kExact ? a.last_exponent() + b.last_exponent() : std::min(prec - 1, a.last_exponent() + b.last_exponent());
        if (top < start) return Series(std::min(start, prec), {}, prec);
        std::vector<T> out(static_cast<std::size_t>(top - start + 1));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            const int ei = a.start_ + static_cast<int>(i);
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const int e = ei + b.start_ + static_cast<int>(j);
                if (e > top) break;
                out[static_cast<std::size_t>(e - start)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Series(start, std::move(out), prec);
    }
    friend Series operator*(Series a, const T& c) {
        for (auto& x : a.coeffs_) x = x * c;
        a.normalize();
        return a;
    }
    friend Series operator*(const T& c, Series a) { return std::move(a) * c; }
    Series operator-() const {
        Series out = *this;
        for (auto& x : out.coeffs_) x = -x;
        return out;
    }

    /// Identical precision and coefficients.
    friend bool operator==(const Series& a, const Series& b) {
        return a.prec_ == b.prec_ && a.val() == b.val() && a.coeffs_ == b.coeffs_;
    }

    /// d/dt.
    Series derivative() const {
        std::vector<T> cs;
        cs.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            cs.push_back(coeffs_[i] * T(start_ + static_cast<int>(i)));
        return Series(start_ - 1, std::move(cs), detail::sat_add(prec_, -1));
    }
    /// t -> -t.
    Series negate_variable() const {
        Series out = *this;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
            if ((start_ + static_cast<int>(i)) % 2 != 0) out.coeffs_[i] = -out.coeffs_[i];
        return out;
    }
    /// t -> t^k for k >= 1.
    Series stretch(int k) const {
        std::vector<T> cs;
        if (!coeffs_.empty()) cs.resize((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i * static_cast<std::size_t>(k)] = coeffs_[i];
        return Series(start_ * k, std::move(cs), detail::sat_mul(prec_, k));
    }
    /// Coefficient-wise conversion into another ring.
    template <class U>
    Series<U> cast() const {
        std::vector<U> cs;
        cs.reserve(coeffs_.size());
        for (const auto& c : coeffs_) cs.push_back(U(c));
        return Series<U>(start_, std::move(cs), prec_);
    }
    /// Coefficient-wise map.
    template <class F>
    auto map(F&& f) const -> Series<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> cs;
        cs.reserve(coeffs_.size());
        for (const auto& c : coeffs_) cs.push_back(f(c));
        return Series<U>(start_, std::move(cs), prec_);
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero(coeffs_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << coeffs_[i] << ")*t^" << start_ + static_cast<int>(i);
        }
        if (first) os << '0';
        if (prec_ != kExact) os << " + O(t^" << prec_ << ')';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

private:
    template <class>
    friend class Series;

    static Series combine(const Series& a, const Series& b, bool subtract) {
        const int prec = std::min(a.prec_, b.prec_);
        if (a.coeffs_.empty() && b.coeffs_.empty()) return Series(prec, {}, prec);
        int lo = kExact;
        int hi = std::numeric_limits<int>::min();
        for (const Series* s : {&a, &b}) {
            if (s->coeffs_.empty()) continue;
            lo = std::min(lo, s->start_);
            hi = std::max(hi, s->last_exponent());
        }
        if (prec != kExact) hi = std::min(hi, prec - 1);
        if (hi < lo) return Series(std::min(lo, prec), {}, prec);
        std::vector<T> out(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const int e = a.start_ + static_cast<int>(i);
            if (e <= hi) out[static_cast<std::size_t>(e - lo)] += a.coeffs_[i];
        }
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            const int e = b.start_ + static_cast<int>(i);
            if (e > hi) continue;
            if (subtract)
                out[static_cast<std::size_t>(e - lo)] -= b.coeffs_[i];
            else
                out[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
        }
        return Series(lo, std::move(out), prec);
    }

    void normalize() {
        if (prec_ != kExact) {
            const int keep = prec_ - start_;
            if (keep <= 0)
                coeffs_.clear();
            else if (static_cast<int>(coeffs_.size()) > keep)
                coeffs_.resize(static_cast<std::size_t>(keep));
        }
        std::size_t lead = 0;
        while (lead < coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            start_ += static_cast<int>(lead);
        }
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) start_ = prec_;
    }

    int start_ = kExact;
    std::vector<T> coeffs_;
    int prec_ = kExact;
};

template <class T>
bool is_zero(const Series<T>& s) {
    return s.is_known_zero();
}

/// Difference of a and b vanishes in the common window.
template <class T>
bool agree(const Series<T>& a, const Series<T>& b) {
    return (a - b).is_known_zero();
}

/// 1/s. Needs an invertible leading coefficient. An exact series only inverts
/// exactly when it is a monomial; otherwise truncate it first.
template <class T>
Series<T> inverse(const Series<T>& s) {
    if (s.is_known_zero()) throw MathError("inverse of a series with no known nonzero coefficient");
    const int v = s.val();
    if (s.is_exact()) {
        if (s.last_exponent() != v)
            throw MathError("inverse of an exact non-monomial series needs a truncation order");
        return Series<T>::monomial(inverse(s.lead()), -v);
    }
    const int terms = s.precision() - v;
    const T inv0 = inverse(s.lead());
    std::vector<T> out(static_cast<std::size_t>(terms));
    out[0] = inv0;
    for (int k = 1; k < terms; ++k) {
        T acc{};
        for (int i = 1; i <= k; ++i) acc += s.coeff(v + i) * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return Series<T>(-v, std::move(out), s.precision() - 2 * v);
}

template <class T>
Series<T> operator/(const Series<T>& a, const Series<T>& b) {
    return a * inverse(b);
}

template <class T>
Series<T> pow(const Series<T>& s, int e) {
    if (e < 0) return pow(inverse(s), -e);
    Series<T> out(T(1));
    Series<T> base = s;
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

/// f(g(t)).
///
/// g must have positive valuation unless f is an exact polynomial (no
/// negative exponents), in which case any g is allowed.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
    if (f.is_known_zero()) {
        const int prec = f.is_exact() ? kExact : detail::sat_mul(f.precision(), std::max(g.val(), 1));
        return Series<T>(prec, {}, prec);
    }
    const bool polynomial = f.is_exact() && f.val() >= 0;
    const int vg = g.val();
    if (!polynomial && (g.is_known_zero() || vg < 1))
        throw MathError("composition needs an inner series of positive valuation");
    const int bound = f.is_exact() ? kExact : detail::sat_mul(f.precision(), vg);
    Series<T> out(bound, {}, bound);
    if (polynomial) {
        // Horner over the nonnegative exponents.
        out = Series<T>();
        for (int e = f.last_exponent(); e >= 0; --e) out = out * g + Series<T>(f.coeff(e));
        return out;
    }
    const int top = f.last_exponent();
    Series<T> power = pow(g, f.val());
    for (int e = f.val(); e <= top; ++e) {
        if (bound != kExact && e * vg >= bound) break;
        const T c = f.coeff(e);
        if (!is_zero(c)) out = out + power * c;
        if (e < top) power = power * g;
    }
    return out;
}

/// Compositional inverse r of s (s(r(t)) = t) for s = a t + ..., a invertible.
template <class T>
Series<T> reversion(const Series<T>& s) {
    if (s.is_known_zero() || s.val() != 1) throw MathError("reversion needs a series of valuation exactly 1");
    const T inv_a = inverse(s.lead());
    if (s.is_exact() && s.last_exponent() == 1) return Series<T>::monomial(inv_a, 1);
    if (s.is_exact()) throw MathError("reversion of an exact non-linear series needs a truncation order");
    const int n = s.precision();
    std::vector<T> r(static_cast<std::size_t>(std::max(n - 1, 1)));
    r[0] = inv_a;
    for (int k = 2; k < n; ++k) {
        const Series<T> approx(1, r, kExact);
        const T c = compose(s, approx).coeff(k);
        r[static_cast<std::size_t>(k - 1)] = -(c * inv_a);
    }
    return Series<T>(1, std::move(r), n);
}

/// Square root of a rational series with even leading exponent and nonzero
/// leading coefficient c. The principal branch takes +sqrt(c), so the result
/// has coefficients in Q(sqrt c).
Series<QuadExt> series_sqrt(const Series<Rational>& s);

}  // namespace cameral
