#pragma once

#include <vector>

#include "w3/linalg.hpp"

namespace w3 {

// Kernel of the stacked system {L(1)v = L(2)v = J(1)v = 0} at one weight.
// Every reported vector is an exact singular vector: the two conditions
// L(1)v = L(2)v = 0 force L(n)v = 0 for all n >= 1, and J(1)v = 0 then forces
// J(n)v = 0 for all n >= 1.
struct SingularReport {
    int weight = 0;
    std::size_t kernel_dimension = 0;
    std::vector<StateVector> vectors;  // normalized
    StateVector j0_action;             // J(0) applied to vectors[0]
};

// Normalization anchor: coefficient of J(-3)^{h/3}|0> set to 1 when that
// monomial exists and carries a nonzero coefficient; otherwise the first
// basis monomial with nonzero coefficient gets coefficient 1.
inline StateVector normalize_singular(const std::vector<Rat>& coords,
                                      const std::vector<NormalMonomial>& basis, int h) {
    Rat anchor(0);
    if (h % 3 == 0 && h > 0) {
        NormalMonomial pure_j{{}, std::vector<int>(h / 3, 3)};
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == pure_j) anchor = coords[i];
    }
    if (anchor == 0) {
        for (const auto& c : coords)
            if (c != 0) {
                anchor = c;
                break;
            }
    }
    StateVector v;
    if (anchor == 0) return v;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0) v.add_term(basis[i], coords[i] / anchor);
    return v;
}

inline ExactMatrix singular_system(int h) {
    return vstack({mode_matrix(L(1), h), mode_matrix(L(2), h), mode_matrix(J(1), h)});
}

inline SingularReport find_singular(int h) {
    SingularReport rep;
    rep.weight = h;
    ExactMatrix M = singular_system(h);
    auto ker = kernel(M);
    rep.kernel_dimension = ker.size();
    for (const auto& coords : ker) rep.vectors.push_back(normalize_singular(coords, M.col_basis, h));
    if (!rep.vectors.empty()) rep.j0_action = apply_mode(J(0), rep.vectors.front());
    return rep;
}

struct V12Family {
    StateVector v12;
    StateVector j1_v12;
    StateVector j2_v12;
    StateVector j1j1_v12;
};

// The weight-12 singular vector and its three J-descendants, all in normal
// form.
inline V12Family descendants_of_v12() {
    V12Family fam;
    SingularReport rep = find_singular(12);
    if (rep.kernel_dimension != 1)
        throw std::runtime_error("descendants_of_v12: weight-12 kernel is not one-dimensional");
    fam.v12 = rep.vectors.front();
    fam.j1_v12 = apply_mode(J(-1), fam.v12);
    fam.j2_v12 = apply_mode(J(-2), fam.v12);
    fam.j1j1_v12 = apply_mode(J(-1), fam.j1_v12);
    return fam;
}

}  // namespace w3
