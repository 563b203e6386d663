#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/intmat.hpp"
#include "openbook/openbook.hpp"

namespace openbook {

// A word in the braid group B_n: letter +i (1 <= i < n) is the Artin
// generator sigma_i, letter -i its inverse.  A word sigma_{i1} sigma_{i2}
// ... denotes the composition with the rightmost factor applied first,
// matching the mapping class conventions elsewhere in the library.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
        if (n < 2) throw SemanticError("a braid needs at least 2 strands");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= n)
                throw SemanticError("braid letter out of range for " + std::to_string(n) +
                                    " strands");
    }

    BraidWord inverse() const {
        BraidWord r;
        r.strands = strands;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
        return r;
    }

    std::string str() const {
        if (letters.empty()) return "1";
        std::string s;
        for (int l : letters) {
            if (!s.empty()) s += ' ';
            s += "s" + std::to_string(std::abs(l));
            if (l < 0) s += "^-1";
        }
        return s;
    }
};

// --- Artin action on the free group F_n -------------------------------------
//
// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, the standard action on
// the fundamental group of the n-punctured disk.  It is faithful, so a braid
// word is trivial in B_n exactly when its action is the identity.

inline std::vector<Word> artin_letter(int n, int letter) {
    std::vector<Word> im = identity_images(n);
    int i = std::abs(letter);
    Word xi = Word::generator(i), xj = Word::generator(i + 1);
    if (letter > 0) {
        im[static_cast<std::size_t>(i - 1)] = xi * xj * xi.inverse();
        im[static_cast<std::size_t>(i)] = xi;
    } else {
        im[static_cast<std::size_t>(i - 1)] = xj;
        im[static_cast<std::size_t>(i)] = xj.inverse() * xi * xj;
    }
    return im;
}

inline std::vector<Word> artin_images(const BraidWord& w,
                                      std::size_t budget = kDefaultWordBudget) {
    std::vector<Word> r = identity_images(w.strands);
    for (int l : w.letters) r = compose_images(r, artin_letter(w.strands, l), budget);
    return r;
}

inline bool artin_trivial(const BraidWord& w, std::size_t budget = kDefaultWordBudget) {
    return artin_images(w, budget) == identity_images(w.strands);
}

// The full twist boundary word x_1 x_2 ... x_n is fixed by every braid.
inline Word artin_boundary_word(int n) {
    Word w;
    for (int i = 1; i <= n; ++i) w.append(Word::generator(i));
    return w;
}

// Permutation of the strands (image of strand position i at index i-1).
inline std::vector<int> braid_permutation(const BraidWord& w) {
    std::vector<int> p(static_cast<std::size_t>(w.strands));
    std::iota(p.begin(), p.end(), 1);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        int i = std::abs(*it);
        std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    }
    return p;
}

inline int closure_components(const BraidWord& w) {
    std::vector<int> p = braid_permutation(w);
    std::vector<bool> seen(p.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j] - 1);
        }
    }
    return cycles;
}

// --- lift to the double branched cover --------------------------------------
//
// The double cover of the disk branched over the n marked points is the
// surface of genus (n-1)/2 with one boundary circle (n odd) or genus
// (n-2)/2 with two (n even); its chain curve c_i covers the segment between
// marked points i and i+1, and the half-twist sigma_i lifts to the Dehn
// twist about c_i.  The resulting open book carries the double cover of the
// braid closure in S^3, branched over the closed braid.

inline Surface braid_cover_page(int n) {
    if (n < 2) throw SemanticError("a braid needs at least 2 strands");
    return n % 2 == 1 ? Surface((n - 1) / 2, 1) : Surface((n - 2) / 2, 2);
}

inline OpenBook lift_to_cover(const BraidWord& w, std::size_t budget = kDefaultWordBudget) {
    Surface page = braid_cover_page(w.strands);
    MappingClass m = MappingClass::identity(page);
    for (int l : w.letters)
        m = compose(m, MappingClass::twist(page, Surface::chain_name(std::abs(l)), l > 0 ? 1 : -1),
                    budget);
    return OpenBook(page, m, "double cover of the closure of " + w.str());
}

// --- reduced Burau representation at t = -1 ---------------------------------
//
// Independent cross-check for the homology action of the lift.  The
// unreduced Burau matrix of sigma_i at t = -1 is the identity except for the
// 2x2 block [[2, 1], [-1, 0]] at rows/columns (i, i+1); every column sums to
// 1, so the zero-sum subspace spanned by f_k = e_k - e_{k+1} is invariant,
// and the reduced representation is the restriction to that basis.

inline Matrix burau_unreduced_letter_m1(int n, int letter) {
    Matrix b = Matrix::identity(n);
    int i = std::abs(letter);
    if (letter > 0) {
        b.at(i - 1, i - 1) = 2;
        b.at(i - 1, i) = 1;
        b.at(i, i - 1) = -1;
        b.at(i, i) = 0;
    } else {
        b.at(i - 1, i - 1) = 0;
        b.at(i - 1, i) = -1;
        b.at(i, i - 1) = 1;
        b.at(i, i) = 2;
    }
    return b;
}

inline Matrix burau_reduced_letter_m1(int n, int letter) {
    Matrix b = burau_unreduced_letter_m1(n, letter);
    Matrix r(n - 1, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        // v = B (e_k - e_{k+1})
        std::vector<long long> v(static_cast<std::size_t>(n));
        for (int row = 0; row < n; ++row)
            v[static_cast<std::size_t>(row)] = checked_sub(b.at(row, k), b.at(row, k + 1));
        // coordinates in the f-basis are the prefix sums
        long long acc = 0;
        for (int j = 0; j < n - 1; ++j) {
            acc = checked_add(acc, v[static_cast<std::size_t>(j)]);
            r.at(j, k) = acc;
        }
        acc = checked_add(acc, v[static_cast<std::size_t>(n - 1)]);
        detail::ensure(acc == 0, "Burau column is not zero-sum");
    }
    return r;
}

inline Matrix burau_reduced_m1(const BraidWord& w) {
    Matrix r = Matrix::identity(w.strands - 1);
    for (int l : w.letters) r = mat_mul(r, burau_reduced_letter_m1(w.strands, l));
    return r;
}

// --- unlink obstruction ------------------------------------------------------

struct UnlinkReport {
    bool may_be_unlink = false;
    ManifoldInvariants cover;
    std::string verdict;
    std::string certificate;
};

inline UnlinkReport unlink_obstruction(const BraidWord& w,
                                       std::size_t budget = kDefaultWordBudget) {
    UnlinkReport r;
    OpenBook cover = lift_to_cover(w, budget);
    r.cover = invariants(cover);
    const int n = w.strands;
    r.may_be_unlink = cover.monodromy.is_trivial();
    r.verdict = r.may_be_unlink ? "CLOSURE_MAY_BE_UNLINK" : "CLOSURE_NOT_UNLINK";
    if (r.may_be_unlink) {
        r.certificate = "the lifted monodromy is trivial, so the double branched cover is the "
                        "connected sum of " + std::to_string(n - 1) +
                        " copies of S^2 x S^1 and the closure is the " + std::to_string(n) +
                        "-component unlink";
    } else if (r.cover.manifold_betti < n - 1) {
        r.certificate = "b_1 of the double branched cover is " +
                        std::to_string(r.cover.manifold_betti) + " < " + std::to_string(n - 1) +
                        ", which rules out the " + std::to_string(n) + "-component unlink";
    } else {
        FactorReport fr = factor_report(cover);
        r.certificate = "the double branched cover has the full first Betti number but its "
                        "monodromy is nontrivial: " + fr.certificate;
    }
    return r;
}

}  // namespace openbook
