#pragma once

#include <string>
#include <vector>

#include "cameral/errors.hpp"
#include "cameral/exact/rational.hpp"

namespace cameral {

enum class LieType { A, B, C, D, G };

std::string to_string(LieType t);
/// "A".."D", "G"; throws InputError otherwise.
LieType parse_lie_type(const std::string& text);

using Root = std::vector<int>;

/// Root system in its standard integer realization.
///
/// A_r lives in the zero-sum hyperplane of Q^(r+1); B_r, C_r and D_r in Q^r;
/// G_2 in the zero-sum plane of Q^3. Pairings and reflections use the
/// Euclidean form of the ambient space.
struct RootSystem {
    LieType lie_type = LieType::A;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<Root> roots;
    std::vector<std::size_t> simple_roots;  // indices into roots

    std::size_t size() const { return roots.size(); }
    /// Index of a root, or npos.
    std::size_t find(const Root& r) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Throws InputError for rank < 1, D_1, or G with rank != 2.
RootSystem build_root_system(LieType type, int rank);

/// Classical |roots|: A_r r(r+1), B_r and C_r 2r^2, D_r 2r(r-1), G_2 12.
int classical_root_count(LieType type, int rank);

/// Index of e_i - e_j in a type-A system.
std::size_t type_a_root_index(const RootSystem& rs, int i, int j);

/// Element of the Cartan subalgebra (or a Cartan-valued section) in ambient
/// coordinates. T is any ring that supports +, -, * and scaling by Rational.
template <class T>
struct CartanVector {
    std::vector<T> coords;

    std::size_t dim() const { return coords.size(); }
};

namespace detail {
inline void require_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw MathError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}
}  // namespace detail

/// <x, nu> = sum_i x_i nu_i.
template <class T>
T pairing(const CartanVector<T>& x, const Root& nu) {
    detail::require_dim(x.dim(), nu.size());
    T acc{};
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (nu[i] == 0) continue;
        if (nu[i] == 1)
            acc += x.coords[i];
        else if (nu[i] == -1)
            acc -= x.coords[i];
        else
            acc += x.coords[i] * Rational(nu[i]);
    }
    return acc;
}

/// sum_i x_i y_i: the trace form of the standard representation. For A_(n-1)
/// the Killing form is 2n times this.
template <class T>
T trace_form(const CartanVector<T>& x, const CartanVector<T>& y) {
    detail::require_dim(x.dim(), y.dim());
    T acc{};
    for (std::size_t i = 0; i < x.dim(); ++i) acc += x.coords[i] * y.coords[i];
    return acc;
}

/// x - 2 (x, nu)/(nu, nu) nu.
template <class T>
CartanVector<T> weyl_reflect(const Root& nu, const CartanVector<T>& x) {
    detail::require_dim(x.dim(), nu.size());
    int norm = 0;
    for (int c : nu) norm += c * c;
    const T k = pairing(x, nu) * Rational(2, norm);
    CartanVector<T> out = x;
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] != 0) out.coords[i] -= k * Rational(nu[i]);
    return out;
}

/// Reflection of a root in a root (integer result).
Root weyl_reflect(const Root& nu, const Root& x);

/// prod over all roots of <x, nu>.
template <class T>
T discriminant_h(const RootSystem& rs, const CartanVector<T>& x) {
    if (rs.roots.empty()) throw MathError("empty root system");
    T prod = pairing(x, rs.roots.front());
    for (std::size_t i = 1; i < rs.roots.size(); ++i) prod = prod * pairing(x, rs.roots[i]);
    return prod;
}

}  // namespace cameral
