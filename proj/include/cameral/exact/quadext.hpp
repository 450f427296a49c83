#pragma once

#include <ostream>
#include <string>

#include "cameral/exact/rational.hpp"

namespace cameral {

/// a + b * sqrt(m) with a, b, m rational.
///
/// A value with b == 0 is a plain rational and combines with any radicand.
/// Two values with nonzero radical parts must share m; anything else throws
/// MathError. When m is a rational square the radical part is folded into a
/// on construction, so b != 0 implies sqrt(m) is irrational.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, Rational m);

    /// sqrt(m) itself.
    static QuadExt sqrt_of(const Rational& m) { return QuadExt(Rational(0), Rational(1), m); }

    const Rational& base() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Rational& radicand() const { return m_; }

    bool is_rational() const { return b_.is_zero(); }
    /// The rational value; throws InternalAssertion when the radical part is nonzero.
    const Rational& to_rational() const;

    /// Galois conjugate a - b sqrt(m).
    QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }
    /// a^2 - m b^2.
    Rational norm() const { return a_ * a_ - m_ * b_ * b_; }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }

    friend bool operator==(const QuadExt& x, const QuadExt& y);

    /// Human-readable "a + b*sqrt(m)".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

private:
    Rational common_radicand(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    Rational m_;
};

inline bool is_zero(const QuadExt& x) { return x.base().is_zero() && x.radical_coeff().is_zero(); }
QuadExt inverse(const QuadExt& x);

}  // namespace cameral
