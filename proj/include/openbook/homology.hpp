#pragma once

#include <string>
#include <vector>

#include "openbook/intmat.hpp"
#include "openbook/mapclass.hpp"

namespace openbook {

// First homology of the closed 3-manifold associated to an open book
// (S, phi), where S has rank-m free fundamental group and b boundary
// components.  The mapping torus identifies each surface class v with
// A v (A = homology action of phi); filling the binding kills, for each
// component c >= 2, the class of phi's defect word u_c (component 1 carries
// the base point; its filling contributes no further relation, and the
// z-classes take care of the binding meridians).  Hence
//   H_1(M) = coker [ (A - I) | [u_2] ... [u_b] ]   (m x (m + b - 1)).
struct ManifoldInvariants {
    int page_betti = 0;                // m = rank of H_1 of the page
    int manifold_betti = 0;            // b_1 of the closed manifold
    std::vector<long long> torsion;    // invariant factors > 1, divisibility order
    int literal_fixed_dim = 0;         // dim of the fixed space of A over Q

    bool operator==(const ManifoldInvariants& o) const {
        return page_betti == o.page_betti && manifold_betti == o.manifold_betti &&
               torsion == o.torsion && literal_fixed_dim == o.literal_fixed_dim;
    }
    bool operator!=(const ManifoldInvariants& o) const { return !(*this == o); }
};

inline Matrix h1_presentation(const MappingClass& f) {
    const int m = f.surface().rank();
    const int b = f.surface().boundary_components();
    Matrix a = f.homology_action();
    Matrix p(m, m + b - 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            p.at(i, j) = checked_sub(a.at(i, j), i == j ? 1 : 0);
        for (int c = 2; c <= b; ++c) {
            auto u = f.defect(c).abelianized(m);
            p.at(i, m + c - 2) = u[static_cast<std::size_t>(i)];
        }
    }
    return p;
}

inline ManifoldInvariants manifold_invariants(const MappingClass& f) {
    const int m = f.surface().rank();
    ManifoldInvariants inv;
    inv.page_betti = m;
    Matrix p = h1_presentation(f);
    SmithResult snf = smith_normal_form(p);
    inv.manifold_betti = m - snf.rank;
    inv.torsion = snf.torsion;
    Matrix ami = mat_sub(f.homology_action(), Matrix::identity(m));
    inv.literal_fixed_dim = m - mat_rank(ami);
    return inv;
}

inline int literal_fixed_dim(const MappingClass& f) {
    const int m = f.surface().rank();
    return m - mat_rank(mat_sub(f.homology_action(), Matrix::identity(m)));
}

inline std::string torsion_str(const std::vector<long long>& torsion) {
    if (torsion.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) s += " + ";
        s += "Z/" + std::to_string(torsion[i]);
    }
    return s;
}

}  // namespace openbook
