#include "cameral/rootsys.hpp"

#include <algorithm>

namespace cameral {

std::string to_string(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::G: return "G";
    }
    return "?";
}

LieType parse_lie_type(const std::string& text) {
    if (text == "A") return LieType::A;
    if (text == "B") return LieType::B;
    if (text == "C") return LieType::C;
    if (text == "D") return LieType::D;
    if (text == "G") return LieType::G;
    throw InputError("unsupported lie_type '" + text + "' (expected one of A, B, C, D, G)");
}

std::size_t RootSystem::find(const Root& r) const {
    const auto it = std::find(roots.begin(), roots.end(), r);
    return it == roots.end() ? npos : static_cast<std::size_t>(it - roots.begin());
}

int classical_root_count(LieType type, int rank) {
    switch (type) {
        case LieType::A: return rank * (rank + 1);
        case LieType::B:
        case LieType::C: return 2 * rank * rank;
        case LieType::D: return 2 * rank * (rank - 1);
        case LieType::G: return 12;
    }
    return 0;
}

namespace {

Root unit(int dim, int i, int c = 1) {
    Root r(static_cast<std::size_t>(dim), 0);
    r[static_cast<std::size_t>(i)] = c;
    return r;
}

Root combo(int dim, int i, int ci, int j, int cj) {
    Root r(static_cast<std::size_t>(dim), 0);
    r[static_cast<std::size_t>(i)] += ci;
    r[static_cast<std::size_t>(j)] += cj;
    return r;
}

// e_i - e_j for all i != j, plus +-(e_i + e_j) when sums is set.
void add_pairs(std::vector<Root>& out, int dim, bool sums) {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            out.push_back(combo(dim, i, 1, j, -1));
            out.push_back(combo(dim, i, -1, j, 1));
            if (sums) {
                out.push_back(combo(dim, i, 1, j, 1));
                out.push_back(combo(dim, i, -1, j, -1));
            }
        }
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
    if (rank < 1) throw InputError("root system rank must be at least 1");
    if (type == LieType::D && rank < 2) throw InputError("D_r needs rank >= 2");
    if (type == LieType::G && rank != 2) throw InputError("G only exists in rank 2");

    RootSystem rs;
    rs.lie_type = type;
    rs.rank = rank;
    std::vector<Root> simple;
    switch (type) {
        case LieType::A: {
            const int dim = rank + 1;
            rs.ambient_dim = dim;
            add_pairs(rs.roots, dim, false);
            for (int i = 0; i < rank; ++i) simple.push_back(combo(dim, i, 1, i + 1, -1));
            break;
        }
        case LieType::B:
        case LieType::C: {
            const int dim = rank;
            rs.ambient_dim = dim;
            add_pairs(rs.roots, dim, true);
            const int c = type == LieType::B ? 1 : 2;
            for (int i = 0; i < dim; ++i) {
                rs.roots.push_back(unit(dim, i, c));
                rs.roots.push_back(unit(dim, i, -c));
            }
            for (int i = 0; i + 1 < rank; ++i) simple.push_back(combo(dim, i, 1, i + 1, -1));
            simple.push_back(unit(dim, rank - 1, c));
            break;
        }
        case LieType::D: {
            const int dim = rank;
            rs.ambient_dim = dim;
            add_pairs(rs.roots, dim, true);
            for (int i = 0; i + 1 < rank; ++i) simple.push_back(combo(dim, i, 1, i + 1, -1));
            simple.push_back(combo(dim, rank - 2, 1, rank - 1, 1));
            break;
        }
        case LieType::G: {
            const int dim = 3;
            rs.ambient_dim = dim;
            add_pairs(rs.roots, dim, false);  // short roots e_i - e_j
            for (int i = 0; i < 3; ++i) {
                Root r{-1, -1, -1};
                r[static_cast<std::size_t>(i)] = 2;
                rs.roots.push_back(r);
                for (int& x : r) x = -x;
                rs.roots.push_back(r);
            }
            simple.push_back(Root{1, -1, 0});
            simple.push_back(Root{-2, 1, 1});
            break;
        }
    }
    for (const auto& s : simple) rs.simple_roots.push_back(rs.find(s));
    return rs;
}

std::size_t type_a_root_index(const RootSystem& rs, int i, int j) {
    const std::size_t idx = rs.find(combo(rs.ambient_dim, i, 1, j, -1));
    if (idx == RootSystem::npos) throw MathError("not a type-A root index pair");
    return idx;
}

Root weyl_reflect(const Root& nu, const Root& x) {
    detail::require_dim(x.size(), nu.size());
    int norm = 0;
    int dot = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        norm += nu[i] * nu[i];
        dot += nu[i] * x[i];
    }
    if ((2 * dot) % norm != 0) throw MathError("reflection leaves the integer lattice");
    const int k = 2 * dot / norm;
    Root out = x;
    for (std::size_t i = 0; i < nu.size(); ++i) out[i] -= k * nu[i];
    return out;
}

}  // namespace cameral
