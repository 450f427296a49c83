#pragma once

#include <ostream>

#include "cameral/errors.hpp"
#include "cameral/exact/rational.hpp"

namespace cameral {

/// value + eps * slope with eps^2 = 0.
///
/// First-order deformations are carried through every ring operation by
/// this type, so a resultant over Dual<R> yields a discriminant together with
/// its derivative in the deformation direction.
template <class T>
class Dual {
public:
    Dual() = default;
    Dual(T value) : value_(std::move(value)), slope_() {}  // NOLINT(google-explicit-constructor)
    Dual(int value) : value_(value), slope_() {}  // NOLINT(google-explicit-constructor)
    Dual(T value, T slope) : value_(std::move(value)), slope_(std::move(slope)) {}

    const T& value() const { return value_; }
    const T& slope() const { return slope_; }

    Dual& operator+=(const Dual& o) { value_ += o.value_; slope_ += o.slope_; return *this; }
    Dual& operator-=(const Dual& o) { value_ -= o.value_; slope_ -= o.slope_; return *this; }
    Dual& operator*=(const Dual& o) {
        slope_ = value_ * o.slope_ + slope_ * o.value_;
        value_ *= o.value_;
        return *this;
    }
    Dual& operator*=(const Rational& r) { value_ *= r; slope_ *= r; return *this; }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator*(Dual a, const Rational& r) { return a *= r; }
    Dual operator-() const { return Dual(-value_, -slope_); }

    friend bool operator==(const Dual& a, const Dual& b) {
        return a.value_ == b.value_ && a.slope_ == b.slope_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
        return os << '(' << d.value_ << " + eps*" << d.slope_ << ')';
    }

private:
    T value_{};
    T slope_{};
};

using DualNumber = Dual<Rational>;

template <class T>
bool is_zero(const Dual<T>& d) {
    return is_zero(d.value()) && is_zero(d.slope());
}

/// 1/(a + eps b) = 1/a - eps b/a^2; defined when a is invertible.
template <class T>
Dual<T> inverse(const Dual<T>& d) {
    if (is_zero(d.value())) throw MathError("dual number with zero value part is not invertible");
    T inv = inverse(d.value());
    T slope = -(d.slope() * inv * inv);
    return Dual<T>(std::move(inv), std::move(slope));
}

template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    return a * inverse(b);
}

}  // namespace cameral
