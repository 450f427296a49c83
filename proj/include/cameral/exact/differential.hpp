#pragma once

#include <string>

#include "cameral/errors.hpp"
#include "cameral/exact/series.hpp"

namespace cameral {

/// series(t) * (dt)^weight: a function (0), one-form (1) or quadratic
/// differential (2) in a local coordinate t.
template <class T>
class LocalDifferential {
public:
    LocalDifferential(Series<T> series, int weight) : series_(std::move(series)), weight_(weight) {
        if (weight < 0 || weight > 2) throw MathError("differential weight must be 0, 1 or 2");
    }

    const Series<T>& series() const { return series_; }
    int weight() const { return weight_; }
    int pole_order() const { return std::max(0, -series_.val()); }

    friend LocalDifferential operator+(const LocalDifferential& a, const LocalDifferential& b) {
        require_same_weight(a, b);
        return LocalDifferential(a.series_ + b.series_, a.weight_);
    }
    friend LocalDifferential operator-(const LocalDifferential& a, const LocalDifferential& b) {
        require_same_weight(a, b);
        return LocalDifferential(a.series_ - b.series_, a.weight_);
    }
    /// Weights add.
    friend LocalDifferential operator*(const LocalDifferential& a, const LocalDifferential& b) {
        return LocalDifferential(a.series_ * b.series_, a.weight_ + b.weight_);
    }
    /// Multiply by a function.
    friend LocalDifferential operator*(const Series<T>& f, const LocalDifferential& w) {
        return LocalDifferential(f * w.series_, w.weight_);
    }

    /// Contraction with the vector field v(t) d/dt; lowers the weight by one.
    LocalDifferential contract(const Series<T>& vector_field) const {
        if (weight_ == 0) throw MathError("cannot contract a function with a vector field");
        return LocalDifferential(vector_field * series_, weight_ - 1);
    }

    /// Pullback along t = phi(w): series(phi(w)) * phi'(w)^weight (dw)^weight.
    LocalDifferential pullback(const Series<T>& phi) const {
        Series<T> out = compose(series_, phi);
        const Series<T> dphi = phi.derivative();
        for (int i = 0; i < weight_; ++i) out = out * dphi;
        return LocalDifferential(std::move(out), weight_);
    }

private:
    static void require_same_weight(const LocalDifferential& a, const LocalDifferential& b) {
        if (a.weight_ != b.weight_)
            throw MathError("adding differentials of weights " + std::to_string(a.weight_) + " and " +
                            std::to_string(b.weight_));
    }

    Series<T> series_;
    int weight_;
};

/// Coefficient of dt/t of a one-form.
template <class T>
T residue(const LocalDifferential<T>& w) {
    if (w.weight() != 1) throw MathError("residue needs a one-form, got weight " + std::to_string(w.weight()));
    if (w.series().precision() <= -1)
        throw TruncationError("residue: the t^-1 coefficient lies outside the computed window");
    return w.series().coeff(-1);
}

/// Coefficient of (dt)^2/t^2 of a quadratic differential with pole order at
/// most two (the range where it does not depend on the coordinate).
template <class T>
T quadratic_residue(const LocalDifferential<T>& w) {
    if (w.weight() != 2)
        throw MathError("quadratic residue needs a quadratic differential, got weight " + std::to_string(w.weight()));
    if (w.series().precision() <= -2)
        throw TruncationError("quadratic residue: the t^-2 coefficient lies outside the computed window");
    if (w.series().val() < -2)
        throw NonSimpleBranch("quadratic residue of a differential with a pole of order " +
                              std::to_string(-w.series().val()));
    return w.series().coeff(-2);
}

}  // namespace cameral
