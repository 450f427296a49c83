#include "cameral/exact/quadext.hpp"

#include "cameral/errors.hpp"

namespace cameral {

QuadExt::QuadExt(Rational a, Rational b, Rational m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
    if (!b_.is_zero() && is_square(m_)) {
        a_ += b_ * exact_sqrt(m_);
        b_ = Rational(0);
    }
}

const Rational& QuadExt::to_rational() const {
    if (!is_rational())
        throw InternalAssertion("expected a rational value, found " + str());
    return a_;
}

Rational QuadExt::common_radicand(const QuadExt& o) const {
    if (o.b_.is_zero()) return b_.is_zero() ? (m_.is_zero() ? o.m_ : m_) : m_;
    if (b_.is_zero()) return o.m_;
    if (m_ != o.m_)
        throw MathError("mixed radicands sqrt(" + m_.str() + ") and sqrt(" + o.m_.str() + ")");
    return m_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    m_ = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    m_ = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const Rational m = common_radicand(o);
    Rational a = a_ * o.a_ + m * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    m_ = m;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= inverse(o); }

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_.is_zero() || x.m_ == y.m_;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str() + " + ";
    return out + b_.str() + "*sqrt(" + m_.str() + ")";
}

QuadExt inverse(const QuadExt& x) {
    if (is_zero(x)) throw MathError("division by zero in Q(sqrt m)");
    const Rational n = x.norm();
    const QuadExt c = x.conjugate();
    return QuadExt(c.base() / n, c.radical_coeff() / n, x.radicand());
}

}  // namespace cameral
