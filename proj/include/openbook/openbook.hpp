#pragma once

#include <string>
#include <utility>
#include <vector>

#include "openbook/homology.hpp"
#include "openbook/mapclass.hpp"
#include "openbook/surface.hpp"

namespace openbook {

// An abstract open book: a page together with a boundary-fixing monodromy.
struct OpenBook {
    Surface page;
    MappingClass monodromy;
    std::string label;

    OpenBook() = default;
    OpenBook(Surface p, MappingClass m, std::string l = "")
        : page(std::move(p)), monodromy(std::move(m)), label(std::move(l)) {
        if (page != monodromy.surface())
            throw SemanticError("monodromy lives on a different surface than the page");
    }
};

inline ManifoldInvariants invariants(const OpenBook& ob) {
    return manifold_invariants(ob.monodromy);
}

// Is the associated closed 3-manifold the connected sum of as many copies of
// S^2 x S^1 as the page's first Betti number allows?  That holds exactly
// when the monodromy is the identity mapping class; any nontrivial monodromy
// forces strictly fewer such summands.
enum class Verdict { FullConnectedSum, StrictlyFewer };

inline const char* verdict_str(Verdict v) {
    return v == Verdict::FullConnectedSum ? "FULL_CONNECTED_SUM" : "STRICTLY_FEWER";
}

struct FactorReport {
    ManifoldInvariants inv;
    bool trivial = false;
    // Largest k with M = #^k (S^2 x S^1) # M'; equals b_1(M), and the verdict
    // says whether it reaches the page rank m.
    int s2s1_upper_bound = 0;
    Verdict verdict = Verdict::StrictlyFewer;
    std::string certificate;
};

inline FactorReport factor_report(const OpenBook& ob) {
    FactorReport r;
    r.inv = manifold_invariants(ob.monodromy);
    r.s2s1_upper_bound = r.inv.manifold_betti;
    r.trivial = ob.monodromy.is_trivial();
    const Surface& s = ob.page;
    const int m = s.rank();
    if (r.trivial) {
        r.verdict = Verdict::FullConnectedSum;
        if (m == 0)
            r.certificate = "the monodromy is the identity mapping class of the disk; "
                            "the manifold is the 3-sphere";
        else
            r.certificate = "the monodromy is the identity mapping class; the manifold is "
                            "the connected sum of " + std::to_string(m) +
                            " copies of S^2 x S^1";
    } else {
        r.verdict = Verdict::StrictlyFewer;
        std::string witness;
        for (int l = 1; l <= m && witness.empty(); ++l) {
            const Word& img = ob.monodromy.images()[static_cast<std::size_t>(l - 1)];
            if (img != Word::generator(l))
                witness = "the monodromy moves " +
                          s.generator_names()[static_cast<std::size_t>(l - 1)] + " to " +
                          s.word_str(img);
        }
        for (int c = 2; c <= s.boundary_components() && witness.empty(); ++c)
            if (!ob.monodromy.defect(c).empty())
                witness = "the monodromy carries the nonempty defect " +
                          s.word_str(ob.monodromy.defect(c)) + " at boundary component " +
                          std::to_string(c);
        r.certificate = witness;
        if (r.inv.manifold_betti < m)
            r.certificate += "; homology gap: b_1 of the manifold is " +
                             std::to_string(r.inv.manifold_betti) + " < " + std::to_string(m);
    }
    return r;
}

// --- Hopf plumbing -----------------------------------------------------------
//
// Plumbing a Hopf band onto the page along an arc that meets the binding in
// boundary component(s) of the page.  In the branched double cover model the
// operation is exact: add one more branch point to the disk; the page gains
// one chain curve c_n, and the new monodromy is tau_{c_n}^{sign} composed
// with the inclusion-extended original monodromy.  Supported attachments:
//   - self(1):     both feet of the band on component 1 (pages with odd b);
//                  the component splits, so the result has b + 1 components.
//   - merge(1,2):  one foot on each of components 1 and 2 (pages with even
//                  b); the two merge, so the result has b - 1 components.
// The associated closed 3-manifold is unchanged either way.

struct PlumbAttach {
    // Default-constructed: pick the supported attachment for the page parity.
    bool self = true;
    int c1 = 0, c2 = 0;

    bool automatic() const { return c1 == 0; }
    static PlumbAttach self_at(int c) { return PlumbAttach{true, c, c}; }
    static PlumbAttach merge_at(int c1, int c2) { return PlumbAttach{false, c1, c2}; }
};

namespace detail {

// Old-model letter values inside the model with one more branch point.
inline std::vector<Word> plumb_letter_embedding(const CoverModel& oldm, const CoverModel& newm) {
    std::vector<Word> emb;
    emb.reserve(static_cast<std::size_t>(oldm.rank()));
    for (int k = 1; k <= oldm.chain_length(); ++k)
        emb.push_back(Word::generator(newm.g_letter(k)));
    for (int j = 1; j <= oldm.holes(); ++j) emb.push_back(Word::generator(newm.U_letter(j)));
    for (int j = 1; j <= oldm.holes(); ++j) emb.push_back(Word::generator(newm.V_letter(j)));
    return emb;
}

}  // namespace detail

inline OpenBook hopf_plumb(const OpenBook& ob, int sign, PlumbAttach attach = PlumbAttach{},
                           std::size_t budget = kDefaultWordBudget) {
    if (sign != 1 && sign != -1) throw SemanticError("plumbing sign must be +1 or -1");
    const Surface& s = ob.page;
    const detail::CoverModel& om = s.model();
    const int b = s.boundary_components();

    if (attach.automatic())
        attach = b % 2 == 1 ? PlumbAttach::self_at(1) : PlumbAttach::merge_at(1, 2);
    if (b % 2 == 1) {
        if (!(attach.self && attach.c1 == 1))
            throw SemanticError("on a page with an odd number of boundary components the "
                                "supported attachment is self(1)");
    } else {
        if (!(!attach.self && ((attach.c1 == 1 && attach.c2 == 2) ||
                               (attach.c1 == 2 && attach.c2 == 1))))
            throw SemanticError("on a page with an even number of boundary components the "
                                "supported attachment is merge(1,2)");
    }

    const bool self = b % 2 == 1;
    Surface ns(self ? s.genus() : s.genus() + 1, self ? b + 1 : b - 1);
    const detail::CoverModel& nm = ns.model();
    detail::ensure(nm.branch_points() == om.branch_points() + 1 && nm.holes() == om.holes(),
                   "plumbed page model mismatch");

    const std::vector<Word> emb = detail::plumb_letter_embedding(om, nm);
    const int h = om.holes();

    // Original monodromy in old model coordinates, both directions.
    auto model_images = [&](bool forward) {
        std::vector<Word> out;
        for (int l = 1; l <= om.rank(); ++l) {
            Word w = om.to_std(Word::generator(l), budget);
            w = forward ? ob.monodromy.apply(w, budget) : ob.monodromy.apply_inverse(w, budget);
            out.push_back(om.to_model(w, budget));
        }
        return out;
    };
    std::vector<Word> fwd_m = model_images(true);
    std::vector<Word> inv_m = model_images(false);

    // The new chain letter g_n maps to d_a g_n d_b^-1: the two travel arcs
    // from the base point lifts to the new branch point cross the old page,
    // so each contributes the defect of its boundary closure.  d_b closes
    // over the holes to U_1..U_h; d_a closes to V_1..V_h followed by the old
    // component-2 defect (merge) or around the one base circle (self).
    auto gn_sides = [&](const std::vector<Word>& imgs, const Word& def2_model) {
        Word ub = om.hole_word_U();
        Word d_b = substitute(ub, imgs, budget) * ub.inverse();
        Word d_a;
        if (self) {
            Word lam = om.lambda_far_model();
            d_a = substitute(lam, imgs, budget) * lam.inverse();
        } else {
            Word vb = om.hole_word_V();
            d_a = substitute(vb, imgs, budget) * def2_model * vb.inverse();
        }
        return std::make_pair(d_a, d_b);
    };
    auto [da_fwd, db_fwd] =
        gn_sides(fwd_m, b >= 2 ? om.to_model(ob.monodromy.defect(2), budget) : Word());
    auto [da_inv, db_inv] = gn_sides(
        inv_m, b >= 2 ? om.to_model(ob.monodromy.inverse_defects()[0], budget) : Word());

    // The reference arc to the far base point lift closes around the base
    // circle; its defect becomes the new component-2 defect (self case).
    auto eta_defect = [&](const std::vector<Word>& imgs) {
        if (!self) return Word();
        Word lam = om.lambda_model();
        return substitute(lam, imgs, budget) * lam.inverse();
    };
    Word eta_fwd = eta_defect(fwd_m);
    Word eta_inv = eta_defect(inv_m);

    auto extend = [&](const std::vector<Word>& imgs, const Word& d_a, const Word& d_b) {
        std::vector<Word> out(static_cast<std::size_t>(nm.rank()));
        for (int l = 1; l <= om.rank(); ++l)
            out[static_cast<std::size_t>(emb[static_cast<std::size_t>(l - 1)].letters()[0] - 1)] =
                substitute(imgs[static_cast<std::size_t>(l - 1)], emb, budget);
        out[static_cast<std::size_t>(nm.g_letter(nm.chain_length()) - 1)] =
            substitute(d_a, emb, budget) * Word::generator(nm.g_letter(nm.chain_length())) *
            substitute(d_b.inverse(), emb, budget);
        return out;
    };
    std::vector<Word> ext_fwd = extend(fwd_m, da_fwd, db_fwd);
    std::vector<Word> ext_inv = extend(inv_m, da_inv, db_inv);

    // Defects of the extended class, per new component 2..b', in new model
    // coordinates; transplanted from the old page by matching hole labels.
    auto old_defect_model = [&](int old_c, bool forward) {
        const Word& u = forward
                            ? ob.monodromy.defect(old_c)
                            : ob.monodromy.inverse_defects()[static_cast<std::size_t>(old_c - 2)];
        return substitute(om.to_model(u, budget), emb, budget);
    };
    auto extended_defects = [&](bool forward, const Word& eta) {
        std::vector<Word> out;
        for (int c = 2; c <= ns.boundary_components(); ++c) {
            auto info = nm.comp_info(c);
            using CK = detail::CoverModel::CompKind;
            switch (info.kind) {
                case CK::DBound:
                    out.push_back(substitute(eta, emb, budget));
                    break;
                case CK::HoleB:
                    out.push_back(old_defect_model(
                        (self ? 1 : 2) + info.hole, forward));
                    break;
                case CK::HoleA:
                    out.push_back(old_defect_model((self ? 1 : 2) + h + info.hole, forward));
                    break;
                case CK::Base:
                    break;
            }
        }
        return out;
    };
    std::vector<Word> def_fwd = extended_defects(true, eta_fwd);
    std::vector<Word> def_inv = extended_defects(false, eta_inv);

    // Convert the extended class to the standard basis of the new page.
    auto to_std_images = [&](const std::vector<Word>& model_imgs) {
        std::vector<Word> out;
        for (int l = 1; l <= nm.rank(); ++l)
            out.push_back(nm.to_std(
                substitute(nm.to_model(Word::generator(l), budget), model_imgs, budget), budget));
        return out;
    };
    std::vector<Word> E_fwd = to_std_images(ext_fwd);
    std::vector<Word> E_inv = to_std_images(ext_inv);
    auto to_std_words = [&](const std::vector<Word>& ws) {
        std::vector<Word> out;
        for (const Word& w : ws) out.push_back(nm.to_std(w, budget));
        return out;
    };
    MappingClass extended = MappingClass::from_data(ns, E_fwd, E_inv, to_std_words(def_fwd),
                                                    to_std_words(def_inv), budget);

    MappingClass nmono = compose(
        MappingClass::twist(ns, Surface::chain_name(nm.chain_length()), sign), extended, budget);
    std::string nl = ob.label.empty() ? "" : ob.label + " + hopf(" +
                                                 std::string(sign > 0 ? "+1" : "-1") + ")";
    return OpenBook(ns, nmono, nl);
}

// --- boundary connected sum --------------------------------------------------
//
// Joins two open books by a band connecting boundary component 1 of each
// page; the new page is the boundary connected sum, and the monodromies act
// blockwise.  Generators map as follows: the handle letters of the first
// page keep their positions, the second page's handle letters follow, then
// the second page's z-letters, then the first page's.  The band sits on
// component 1 of the first page between its handle run and its z run, which
// makes the combined component-1 boundary word standard on the nose.  The
// associated closed 3-manifold is the connected sum.

inline OpenBook boundary_connected_sum(const OpenBook& ob1, const OpenBook& ob2,
                                       std::size_t budget = kDefaultWordBudget) {
    const Surface& s1 = ob1.page;
    const Surface& s2 = ob2.page;
    const int g1 = s1.genus(), g2 = s2.genus();
    const int b1 = s1.boundary_components(), b2 = s2.boundary_components();
    Surface ns(g1 + g2, b1 + b2 - 1);

    // Letter maps into the combined page: page 1's handle letters keep their
    // values, page 2's letters all shift by 2 g1 (which lands its z-letters
    // right after the combined handle block), and page 1's z-letters move to
    // the end.
    auto map1 = [&](int l) { return l <= 2 * g1 ? l : 2 * g2 + (b2 - 1) + l; };
    auto map2 = [&](int l) { return 2 * g1 + l; };
    auto remap = [&](const Word& w, bool from_first) {
        std::vector<int> out;
        out.reserve(w.size());
        for (int l : w.letters()) {
            int v = std::abs(l);
            int nv = from_first ? map1(v) : map2(v);
            out.push_back(l > 0 ? nv : -nv);
        }
        return Word::from_letters(out);
    };

    // In the intermediate basis where the band path conjugates all of page
    // 2's letters next to the base point, the combined component-1 word reads
    // delta1(page2) delta1(page1) and the monodromy acts blockwise.  The
    // final standard basis conjugates page 1's handle letters by
    // Q = delta1(page2); apply that change of basis at the end.
    const int m = ns.rank();
    std::vector<Word> fwd(static_cast<std::size_t>(m)), inv(static_cast<std::size_t>(m));
    for (int l = 1; l <= s1.rank(); ++l) {
        fwd[static_cast<std::size_t>(map1(l) - 1)] =
            remap(ob1.monodromy.images()[static_cast<std::size_t>(l - 1)], true);
        inv[static_cast<std::size_t>(map1(l) - 1)] =
            remap(ob1.monodromy.inverse_images()[static_cast<std::size_t>(l - 1)], true);
    }
    for (int l = 1; l <= s2.rank(); ++l) {
        fwd[static_cast<std::size_t>(map2(l) - 1)] =
            remap(ob2.monodromy.images()[static_cast<std::size_t>(l - 1)], false);
        inv[static_cast<std::size_t>(map2(l) - 1)] =
            remap(ob2.monodromy.inverse_images()[static_cast<std::size_t>(l - 1)], false);
    }

    const Word qf = remap(s2.delta1(), false);
    std::vector<Word> cb = identity_images(m), cbi = identity_images(m);
    for (int l = 1; l <= 2 * g1; ++l) {
        cb[static_cast<std::size_t>(map1(l) - 1)] =
            Word::generator(map1(l)).conjugated_by(qf.inverse());
        cbi[static_cast<std::size_t>(map1(l) - 1)] = Word::generator(map1(l)).conjugated_by(qf);
    }
    detail::ensure(substitute(qf * remap(s1.delta1(), true), cb) == ns.delta1(),
                   "combined boundary word is not standard");
    fwd = compose_images(cb, compose_images(fwd, cbi, budget), budget);
    inv = compose_images(cb, compose_images(inv, cbi, budget), budget);

    // Defects: new component 1+j is page 2's component 1+j for j < b2, and
    // page 1's component 1+(j-(b2-1)) beyond.  Transplanted defects refer to
    // the transported reference arcs, so rebase them to the combined page's
    // pinned boundary words via an explicit conjugator.
    std::vector<Word> fwd_def, inv_def;
    for (int c = 2; c <= ns.boundary_components(); ++c) {
        bool from_second = c <= b2;
        const OpenBook& src = from_second ? ob2 : ob1;
        int oc = from_second ? c : c - (b2 - 1);
        Word u = substitute(remap(src.monodromy.defect(oc), !from_second), cb, budget);
        Word dgeo = substitute(remap(src.page.boundary_word(oc), !from_second), cb, budget);
        const Word& dpin = ns.boundary_word(c);
        auto gamma = conjugator(dgeo, dpin);
        detail::ensure(gamma.has_value(), "combined boundary word is in the wrong class");
        // Rebasing the arc by the loop gamma turns the defect u into
        // phi(gamma) u gamma^-1.
        fwd_def.push_back(substitute(*gamma, fwd, budget) * u * gamma->inverse());
    }
    for (std::size_t j = 0; j < fwd_def.size(); ++j)
        inv_def.push_back(substitute(fwd_def[j].inverse(), inv, budget));

    MappingClass nmono = MappingClass::from_data(ns, fwd, inv, fwd_def, inv_def, budget);
    std::string nl;
    if (!ob1.label.empty() || !ob2.label.empty())
        nl = (ob1.label.empty() ? "?" : ob1.label) + " # " +
             (ob2.label.empty() ? "?" : ob2.label);
    return OpenBook(ns, nmono, nl);
}

}  // namespace openbook
