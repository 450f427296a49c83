#include "cameral/exact/rational.hpp"

#include <cctype>

#include "cameral/errors.hpp"

namespace cameral {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;
    mpz_class num(std::string(num_text), 10);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) return std::nullopt;
    if (negative) num = -num;
    return Rational(num, den);
}

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, int e) {
    if (e < 0) return pow(inverse(x), -e);
    Rational out(1);
    Rational base = x;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

mpz_class floor(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

bool is_square(const Rational& x) {
    if (x.sign() < 0) return false;
    return mpz_perfect_square_p(x.num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.den().get_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& x) {
    if (!is_square(x)) throw MathError("exact_sqrt of a non-square rational " + x.str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
    return Rational(n, d);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) return simplest_between(hi, lo);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_between(-hi, -lo);
    const Rational fl(floor(lo));
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    return fl + inverse(simplest_between(inverse(hi - fl), inverse(lo - fl)));
}

}  // namespace cameral
