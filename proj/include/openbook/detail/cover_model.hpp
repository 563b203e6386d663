#pragma once

#include <cassert>
#include <cstdlib>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/word.hpp"

namespace openbook::detail {

inline void ensure(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

// Model of the surface S_{g,b} as the double cover of a disk with n marked
// points (branch points of a hyperelliptic-style involution) and h unmarked
// holes, branched over the marked points:
//
//   n = 2g + 1, h = (b-1)/2   when b is odd,
//   n = 2g + 2, h = (b-2)/2   when b is even.
//
// Downstairs the relevant group is the orbifold group of the marked disk,
//   O = (Z/2 * ... * Z/2) * F(e_1..e_h),
// with one order-two letter d_i per marked point and one free letter e_j per
// hole; the disk boundary reads d_1 d_2 ... d_n e_1 ... e_h.  The fundamental
// group of the cover is the index-two subgroup of even words, which is free
// of rank n-1+2h on
//   g_k = d_1 d_{k+1}   (k = 1..n-1),
//   U_j = e_j,          (the lift of the j-th hole loop on sheet 0)
//   V_j = d_1 e_j d_1   (its lift on sheet 1).
//
// Half-twists about adjacent marked points act downstairs by the standard
// Artin substitution and fix the disk boundary word; rewriting their action
// on the even subgroup yields exact Dehn twist automorphisms on the cover
// about the chain of simple closed curves c_1..c_{n-1} (c_k covers the
// segment between marked points k and k+1).  All curve data shipped with a
// Surface is generated through this model, so every formula in the library
// traces back to the one classical substitution below.
class CoverModel {
  public:
    // Downstairs word; letter i in 1..n is d_i (kept positive: order two),
    // letter +-(n+j) is e_j^{+-1}.
    using DWord = std::vector<int>;

    CoverModel() = default;

    CoverModel(int genus, int boundary) : genus_(genus), boundary_(boundary) {
        ensure(genus >= 0 && boundary >= 1, "surface needs g >= 0 and b >= 1");
        const int r = boundary % 2 == 1 ? 1 : 2;
        n_ = 2 * genus + r;
        h_ = (boundary - r) / 2;
        rank_ = n_ - 1 + 2 * h_;
        build_dictionary();
        verify_dictionary();
    }

    int genus() const { return genus_; }
    int boundary() const { return boundary_; }
    int branch_points() const { return n_; }
    int holes() const { return h_; }
    int rank() const { return rank_; }
    int chain_length() const { return n_ - 1; }

    // Model-basis letter values (1-based, usable in Word letters).
    int g_letter(int k) const { return k; }                // k = 1..n-1
    int U_letter(int j) const { return n_ - 1 + j; }       // j = 1..h
    int V_letter(int j) const { return n_ - 1 + h_ + j; }

    // --- downstairs word algebra -------------------------------------------

    void push_down(DWord& w, int letter) const {
        int l = letter;
        if (std::abs(l) <= n_) l = std::abs(l);  // d-letters are involutions
        if (!w.empty()) {
            int b = w.back();
            bool cancels = (l <= n_ && b == l) || (l > n_ || l < -n_ ? b == -l : false);
            if (cancels) {
                w.pop_back();
                return;
            }
        }
        w.push_back(l);
    }

    DWord dreduce(const DWord& w) const {
        DWord r;
        for (int l : w) push_down(r, l);
        return r;
    }

    DWord dconcat(const DWord& a, const DWord& b) const {
        DWord r = a;
        for (int l : b) push_down(r, l);
        return r;
    }

    DWord dinverse(const DWord& w) const {
        DWord r;
        for (auto it = w.rbegin(); it != w.rend(); ++it) push_down(r, -*it);
        return r;
    }

    bool is_even(const DWord& w) const {
        int parity = 0;
        for (int l : w)
            if (std::abs(l) <= n_) parity ^= 1;
        return parity == 0;
    }

    // Rewrites an even downstairs word in the free basis of the cover.
    // Reading left to right while tracking the sheet of the partial lift:
    // d_i contributes g_{i-1}^{-1} from sheet 0 and g_{i-1} from sheet 1
    // (nothing for d_1), e_j^{+-1} contributes U_j^{+-1} from sheet 0 and
    // V_j^{+-1} from sheet 1.
    Word rewrite_even(const DWord& w) const {
        DWord rw = dreduce(w);
        ensure(is_even(rw), "cannot rewrite an odd word in the cover");
        Word out;
        int sheet = 0;
        for (int l : rw) {
            if (std::abs(l) <= n_) {
                int i = std::abs(l);
                if (i != 1) out.push_reduce(sheet == 0 ? -g_letter(i - 1) : g_letter(i - 1));
                sheet ^= 1;
            } else {
                int j = std::abs(l) - n_;
                int base = sheet == 0 ? U_letter(j) : V_letter(j);
                out.push_reduce(l > 0 ? base : -base);
            }
        }
        assert(sheet == 0);
        return out;
    }

    // Downstairs representative of a model-basis letter.
    DWord lower_letter(int letter) const {
        int v = std::abs(letter);
        DWord w;
        if (v <= n_ - 1) {
            w = letter > 0 ? DWord{1, v + 1} : DWord{v + 1, 1};
        } else if (v <= n_ - 1 + h_) {
            int e = n_ + (v - (n_ - 1));
            w = DWord{letter > 0 ? e : -e};
        } else {
            int e = n_ + (v - (n_ - 1 + h_));
            w = DWord{1, letter > 0 ? e : -e, 1};
        }
        return w;
    }

    DWord lower(const Word& model_word) const {
        DWord r;
        for (int l : model_word.letters())
            for (int dl : lower_letter(l)) push_down(r, dl);
        return r;
    }

    // --- downstairs mapping classes ----------------------------------------

    // Images of the downstairs letters 1..n+h under a substitution.
    using DownAuto = std::vector<DWord>;

    DownAuto down_identity() const {
        DownAuto im(static_cast<std::size_t>(n_ + h_));
        for (int i = 1; i <= n_ + h_; ++i) im[static_cast<std::size_t>(i - 1)] = DWord{i};
        return im;
    }

    // Artin half-twist about marked points k, k+1 (sign +1) or its inverse:
    //   sigma_k:      d_k -> d_k d_{k+1} d_k,  d_{k+1} -> d_k
    //   sigma_k^-1:   d_k -> d_{k+1},          d_{k+1} -> d_{k+1} d_k d_{k+1}
    // (involution letters, so conjugation reads this way), everything else
    // fixed.  Fixes the disk boundary word.
    DownAuto sigma(int k, int sign) const {
        ensure(k >= 1 && k + 1 <= n_, "chain index out of range");
        DownAuto im = down_identity();
        if (sign >= 0) {
            im[static_cast<std::size_t>(k - 1)] = DWord{k, k + 1, k};
            im[static_cast<std::size_t>(k)] = DWord{k};
        } else {
            im[static_cast<std::size_t>(k - 1)] = DWord{k + 1};
            im[static_cast<std::size_t>(k)] = DWord{k + 1, k, k + 1};
        }
        return im;
    }

    DWord apply_down(const DownAuto& im, const DWord& w) const {
        DWord r;
        for (int l : w) {
            int v = std::abs(l);
            const DWord& img = im[static_cast<std::size_t>(v - 1)];
            if (l > 0 || v <= n_) {
                for (int dl : img) push_down(r, dl);
            } else {
                for (int dl : dinverse(img)) push_down(r, dl);
            }
        }
        return r;
    }

    // --- canonical downstairs/model words ----------------------------------

    DWord delta_down() const {
        DWord w;
        for (int i = 1; i <= n_; ++i) w.push_back(i);
        for (int j = 1; j <= h_; ++j) w.push_back(n_ + j);
        return w;
    }

    // Based word of the boundary circle through the base point (the lift of
    // the disk boundary), in model letters.
    Word comp1_model() const {
        DWord d = delta_down();
        return rewrite_even(n_ % 2 == 1 ? dconcat(d, d) : d);
    }

    // Loop used when a handle is attached to the single base boundary
    // component (n odd): the reference path to the second preimage of the
    // base point, closed up along the boundary circle.
    Word lambda_model() const {
        ensure(n_ % 2 == 1, "lambda is defined for an odd number of marked points");
        return rewrite_even(dconcat(DWord{1}, delta_down()));
    }

    // Closures of the travel paths to a marked point inserted between the
    // marked-point row and the holes, used when extending a mapping class
    // over an added branch point.  The path from the base point closes over
    // the holes to the loop U_1...U_h; its far-sheet mate closes to
    // V_1...V_h; the far-sheet approach arc on a one-circle base (n odd)
    // closes around the boundary to rewrite(d_1 e_1..e_h delta_down).
    Word hole_word_U() const {
        Word w;
        for (int j = 1; j <= h_; ++j) w.append(Word::generator(U_letter(j)));
        return w;
    }

    Word hole_word_V() const {
        Word w;
        for (int j = 1; j <= h_; ++j) w.append(Word::generator(V_letter(j)));
        return w;
    }

    Word lambda_far_model() const {
        ensure(n_ % 2 == 1, "the far-sheet closure needs an odd number of marked points");
        DWord w{1};
        for (int j = 1; j <= h_; ++j) w.push_back(n_ + j);
        return rewrite_even(dconcat(w, delta_down()));
    }

    // --- boundary components ------------------------------------------------
    //
    // Component order (matches the z-letters of the standard boundary word):
    //   b odd:  1 = base circle; 1+j = hole j, sheet-1 lift (j = 1..h);
    //           1+h+j = hole j, sheet-0 lift.
    //   b even: 1, 2 = the two lifts of the disk boundary; 2+j = hole j,
    //           sheet-1 lift; 2+h+j = hole j, sheet-0 lift.

    enum class CompKind { Base, DBound, HoleB, HoleA };
    struct Comp {
        CompKind kind;
        int hole = 0;
    };

    Comp comp_info(int c) const {
        ensure(c >= 1 && c <= boundary_, "boundary component out of range");
        const int base = n_ % 2 == 1 ? 1 : 2;
        if (c == 1) return {CompKind::Base, 0};
        if (c == 2 && base == 2) return {CompKind::DBound, 0};
        int idx = c - base;
        if (idx <= h_) return {CompKind::HoleB, idx};
        return {CompKind::HoleA, idx - h_};
    }

    // Based word of boundary component c in model letters, traversed with the
    // boundary orientation (the same direction as comp1_model on component 1;
    // hole circles then read against their counterclockwise loops).
    Word comp_word_model(int c) const {
        Comp info = comp_info(c);
        switch (info.kind) {
            case CompKind::Base:
                return comp1_model();
            case CompKind::DBound: {
                DWord w{1};
                w = dconcat(w, delta_down());
                w = dconcat(w, DWord{1});
                return rewrite_even(w);
            }
            case CompKind::HoleB:
                return Word::generator(-V_letter(info.hole));
            case CompKind::HoleA:
                return Word::generator(-U_letter(info.hole));
        }
        return Word();
    }

    // --- lifted mapping classes --------------------------------------------

    // A mapping class of the cover in model coordinates: images of the model
    // basis letters plus one defect word per boundary component 2..b (the
    // loop phi(arc) arc^-1 for the pinned reference arc of that component).
    struct ModelAuto {
        std::vector<Word> images;
        std::vector<Word> defects;
    };

    // Lift of a downstairs mapping class that fixes each hole pointwise.
    // `hole_defects[j-1]` is the downstairs defect of the reference arc to
    // hole j (empty for the half-twists sigma_k, whose support misses every
    // hole arc).
    ModelAuto lift_down(const DownAuto& im, const std::vector<DWord>& hole_defects) const {
        ModelAuto out;
        out.images.reserve(static_cast<std::size_t>(rank_));
        for (int l = 1; l <= rank_; ++l)
            out.images.push_back(rewrite_even(apply_down(im, lower_letter(l))));
        // Defect of the arc to the second base-point lift: the arc is the lift
        // of the d_1 loop, so its defect is the even loop psi(d_1) d_1^-1.
        DWord psi_d1 = apply_down(im, DWord{1});
        for (int c = 2; c <= boundary_; ++c) {
            Comp info = comp_info(c);
            DWord w;
            switch (info.kind) {
                case CompKind::Base:
                    break;
                case CompKind::DBound:
                    w = dconcat(psi_d1, DWord{1});
                    break;
                case CompKind::HoleB:
                    // arc = lift of d_1 . alpha_hole: defect psi(d_1) w_hole d_1
                    w = dconcat(dconcat(psi_d1, hole_defects[static_cast<std::size_t>(
                                                    info.hole - 1)]),
                                DWord{1});
                    break;
                case CompKind::HoleA:
                    w = hole_defects[static_cast<std::size_t>(info.hole - 1)];
                    break;
            }
            out.defects.push_back(rewrite_even(w));
        }
        return out;
    }

    ModelAuto lift_sigma(int k, int sign) const {
        return lift_down(sigma(k, sign), std::vector<DWord>(static_cast<std::size_t>(h_)));
    }

    // --- dictionary between the model basis and the standard basis ---------
    //
    // Standard letters: x_i = 2i-1, y_i = 2i (i = 1..g), z_j = 2g+j
    // (j = 1..b-1), chosen so that the component-1 boundary word equals
    //   [x_1,y_1]...[x_g,y_g] z_1...z_{b-1}
    // exactly.  The change of basis peels commutators off comp1_model():
    // with kappa_0 = 1 and kappa_i = g_{2i}^-1 g_{2i-1} kappa_{i-1},
    //   x_i = kappa_{i-1} g_{2i-1},   y_i = g_{2i}^-1 kappa_{i-1}^-1,
    // and the z-letters absorb the leftover tail (see build_dictionary).

    int x_letter(int i) const { return 2 * i - 1; }
    int y_letter(int i) const { return 2 * i; }
    int z_letter(int j) const { return 2 * genus_ + j; }

    const std::vector<Word>& std_in_model() const { return std_in_model_; }
    const std::vector<Word>& model_in_std() const { return model_in_std_; }

    Word to_std(const Word& model_word, std::size_t budget = kDefaultWordBudget) const {
        return substitute(model_word, model_in_std_, budget);
    }
    Word to_model(const Word& std_word, std::size_t budget = kDefaultWordBudget) const {
        return substitute(std_word, std_in_model_, budget);
    }

    // Standard-basis boundary word of component 1.
    Word delta1_std() const {
        Word w;
        for (int i = 1; i <= genus_; ++i) {
            w.append(Word::generator(x_letter(i)));
            w.append(Word::generator(y_letter(i)));
            w.append(Word::generator(-x_letter(i)));
            w.append(Word::generator(-y_letter(i)));
        }
        for (int j = 1; j <= boundary_ - 1; ++j) w.append(Word::generator(z_letter(j)));
        return w;
    }

  private:
    void build_dictionary() {
        const int g = genus_;
        std::vector<Word> kappa(static_cast<std::size_t>(g) + 1);  // model letters
        for (int i = 1; i <= g; ++i)
            kappa[static_cast<std::size_t>(i)] =
                Word::generator(-g_letter(2 * i)) * Word::generator(g_letter(2 * i - 1)) *
                kappa[static_cast<std::size_t>(i - 1)];
        const Word& kg = kappa[static_cast<std::size_t>(g)];

        std_in_model_.assign(static_cast<std::size_t>(rank_), Word());
        auto set_std = [&](int letter, const Word& w) {
            std_in_model_[static_cast<std::size_t>(letter - 1)] = w;
        };
        for (int i = 1; i <= g; ++i) {
            const Word& km = kappa[static_cast<std::size_t>(i - 1)];
            set_std(x_letter(i), km * Word::generator(g_letter(2 * i - 1)));
            set_std(y_letter(i), Word::generator(-g_letter(2 * i)) * km.inverse());
        }
        if (boundary_ % 2 == 1) {
            for (int j = 1; j <= h_; ++j)
                set_std(z_letter(j), Word::generator(V_letter(j)).conjugated_by(kg));
            for (int j = 1; j <= h_; ++j)
                set_std(z_letter(h_ + j), Word::generator(U_letter(j)));
        } else {
            Word vprod;
            for (int j = 1; j <= h_; ++j) vprod.append(Word::generator(V_letter(j)));
            // z_1 = kg g_{n-1} kg vprod^-1 kg^-1, conjugate to the inverse of
            // the second base boundary circle.
            set_std(z_letter(1), kg * Word::generator(g_letter(n_ - 1)) * kg *
                                     vprod.inverse() * kg.inverse());
            for (int j = 1; j <= h_; ++j)
                set_std(z_letter(1 + j), Word::generator(V_letter(j)).conjugated_by(kg));
            for (int j = 1; j <= h_; ++j)
                set_std(z_letter(1 + h_ + j), Word::generator(U_letter(j)));
        }

        // Inverse direction.  kappa in standard letters: ks_i = y_i x_i ks_{i-1}.
        std::vector<Word> ks(static_cast<std::size_t>(g) + 1);
        for (int i = 1; i <= g; ++i)
            ks[static_cast<std::size_t>(i)] = Word::generator(y_letter(i)) *
                                              Word::generator(x_letter(i)) *
                                              ks[static_cast<std::size_t>(i - 1)];
        const Word& ksg = ks[static_cast<std::size_t>(g)];

        model_in_std_.assign(static_cast<std::size_t>(rank_), Word());
        auto set_model = [&](int letter, const Word& w) {
            model_in_std_[static_cast<std::size_t>(letter - 1)] = w;
        };
        for (int i = 1; i <= g; ++i) {
            const Word& km = ks[static_cast<std::size_t>(i - 1)];
            set_model(g_letter(2 * i - 1), km.inverse() * Word::generator(x_letter(i)));
            set_model(g_letter(2 * i), km.inverse() * Word::generator(-y_letter(i)));
        }
        if (boundary_ % 2 == 1) {
            for (int j = 1; j <= h_; ++j) {
                set_model(V_letter(j), Word::generator(z_letter(j)).conjugated_by(ksg.inverse()));
                set_model(U_letter(j), Word::generator(z_letter(h_ + j)));
            }
        } else {
            Word ztail;  // z_1 ... z_{h+1}
            for (int j = 1; j <= h_ + 1; ++j) ztail.append(Word::generator(z_letter(j)));
            set_model(g_letter(n_ - 1), ksg.inverse() * ztail);
            for (int j = 1; j <= h_; ++j) {
                set_model(V_letter(j),
                          Word::generator(z_letter(1 + j)).conjugated_by(ksg.inverse()));
                set_model(U_letter(j), Word::generator(z_letter(1 + h_ + j)));
            }
        }
    }

    void verify_dictionary() const {
        for (int l = 1; l <= rank_; ++l) {
            Word letter = Word::generator(l);
            ensure(to_std(to_model(letter)) == letter, "dictionary is not a change of basis");
            ensure(to_model(to_std(letter)) == letter, "dictionary is not a change of basis");
        }
        ensure(to_std(comp1_model()) == delta1_std(),
               "dictionary does not carry the boundary word to standard form");
    }

    int genus_ = 0;
    int boundary_ = 1;
    int n_ = 1;
    int h_ = 0;
    int rank_ = 0;
    std::vector<Word> std_in_model_;
    std::vector<Word> model_in_std_;
};

}  // namespace openbook::detail
