#include "cameral/exact/roots.hpp"

#include <algorithm>

#include "cameral/errors.hpp"

namespace cameral {

namespace {

std::vector<Poly<Rational>> sturm_sequence(const Poly<Rational>& p) {
    std::vector<Poly<Rational>> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Poly<Rational> r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(std::move(r));
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

int sign_variations(const std::vector<Poly<Rational>>& seq, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
        const int sg = s(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

/// Integer clearing factor: returns the leading coefficient of the primitive
/// integer multiple of p (up to sign).
mpz_class integer_lead(const Poly<Rational>& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        const mpz_class ic = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic.get_mpz_t());
    }
    const Rational lead = p.lead();
    mpz_class out = lead.num() * (lcm_den / lead.den()) / content;
    return out < 0 ? mpz_class(-out) : out;
}

Rational cauchy_bound(const Poly<Rational>& p) {
    Rational bound(0);
    const Rational inv_lead = inverse(p.lead());
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, abs(p.coeff(i) * inv_lead));
    return bound + 1;
}

class Isolator {
public:
    explicit Isolator(const Poly<Rational>& p) : p_(p), seq_(sturm_sequence(p)) {
        const mpz_class lead = integer_lead(p);
        const Rational l(lead);
        spacing_ = inverse(l * l);
    }

    std::vector<Rational> run() {
        const Rational b = cauchy_bound(p_);
        const Rational lo = -b - 1;
        split(lo, b, count(lo, b));
        std::sort(found_.begin(), found_.end());
        return found_;
    }

private:
    int count(const Rational& lo, const Rational& hi) const {
        return sign_variations(seq_, lo) - sign_variations(seq_, hi);
    }

    void split(const Rational& lo, const Rational& hi, int n) {
        if (n == 0) return;
        if (n == 1) {
            refine(lo, hi);
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        const int left = count(lo, mid);
        split(lo, mid, left);
        split(mid, hi, n - left);
    }

    // Exactly one root in (lo, hi].
    void refine(Rational lo, Rational hi) {
        if (p_(hi).is_zero()) {
            found_.push_back(hi);
            return;
        }
        while (hi - lo >= spacing_) {
            const Rational mid = (lo + hi) / Rational(2);
            if (p_(mid).is_zero()) {
                found_.push_back(mid);
                return;
            }
            if (count(lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
        const Rational candidate = simplest_between(lo, hi);
        if (candidate != lo && p_(candidate).is_zero()) found_.push_back(candidate);
    }

    const Poly<Rational>& p_;
    std::vector<Poly<Rational>> seq_;
    Rational spacing_;
    std::vector<Rational> found_;
};

}  // namespace

int count_real_roots(const Poly<Rational>& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw MathError("count_real_roots of the zero polynomial");
    const Poly<Rational> sf = squarefree_part(p);
    if (sf.is_constant()) return 0;
    const auto seq = sturm_sequence(sf);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

RationalRoots rational_roots(const Poly<Rational>& p) {
    if (p.is_zero()) throw MathError("rational_roots of the zero polynomial");
    RationalRoots out;
    int found_degree = 0;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly<Rational>& f = factors[i];
        if (f.is_constant()) continue;
        const int mult = static_cast<int>(i) + 1;
        for (const auto& r : Isolator(f).run()) {
            out.roots.push_back({r, mult});
            found_degree += mult;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    out.remaining_degree = p.degree() - found_degree;
    return out;
}

}  // namespace cameral
