#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/intmat.hpp"
#include "openbook/surface.hpp"
#include "openbook/word.hpp"

namespace openbook {

// A boundary-fixing mapping class of a Surface, stored exactly: the induced
// automorphism of the fundamental group (generator images, in both
// directions) together with one defect word per boundary component 2..b.
// The defect u_c records how the class moves the pinned reference arc from
// the base point to component c: u_c = phi(arc_c) arc_c^-1, a based loop.
// A class is the identity mapping class precisely when every generator is
// fixed and every defect is empty.
class MappingClass {
  public:
    MappingClass() = default;

    static MappingClass identity(const Surface& s) {
        MappingClass f;
        f.surface_ = s;
        f.fwd_ = identity_images(s.rank());
        f.inv_ = f.fwd_;
        f.fwd_def_.assign(static_cast<std::size_t>(s.boundary_components() - 1), Word());
        f.inv_def_ = f.fwd_def_;
        return f;
    }

    // Dehn twist about a library curve; sign +1 is the right-handed twist.
    static MappingClass twist(const Surface& s, const std::string& curve_name, int sign = +1) {
        if (sign != 1 && sign != -1) throw SemanticError("twist sign must be +1 or -1");
        const Curve& cu = s.curve(curve_name);
        MappingClass f;
        f.surface_ = s;
        f.fwd_ = sign > 0 ? cu.images_pos : cu.images_neg;
        f.inv_ = sign > 0 ? cu.images_neg : cu.images_pos;
        f.fwd_def_ = sign > 0 ? cu.defects_pos : cu.defects_neg;
        f.inv_def_ = sign > 0 ? cu.defects_neg : cu.defects_pos;
        f.declared_twist_ = std::make_pair(cu.name, sign);
        return f;
    }

    // Builds a class from explicit data; throws SemanticError unless the data
    // passes validate().
    static MappingClass from_data(const Surface& s, std::vector<Word> fwd, std::vector<Word> inv,
                                  std::vector<Word> fwd_defects, std::vector<Word> inv_defects,
                                  std::size_t budget = kDefaultWordBudget) {
        MappingClass f;
        f.surface_ = s;
        f.fwd_ = std::move(fwd);
        f.inv_ = std::move(inv);
        f.fwd_def_ = std::move(fwd_defects);
        f.inv_def_ = std::move(inv_defects);
        auto violations = f.validate(budget);
        if (!violations.empty()) {
            std::string msg = "mapping class data rejected:";
            for (const auto& v : violations) msg += "\n  - " + v;
            throw SemanticError(msg);
        }
        return f;
    }

    const Surface& surface() const { return surface_; }
    const std::vector<Word>& images() const { return fwd_; }
    const std::vector<Word>& inverse_images() const { return inv_; }
    const std::vector<Word>& defects() const { return fwd_def_; }
    const std::vector<Word>& inverse_defects() const { return inv_def_; }

    // Defect word of boundary component c (2..b).
    const Word& defect(int c) const {
        if (c < 2 || c > surface_.boundary_components())
            throw SemanticError("defect index out of range");
        return fwd_def_[static_cast<std::size_t>(c - 2)];
    }

    Word apply(const Word& w, std::size_t budget = kDefaultWordBudget) const {
        return substitute(w, fwd_, budget);
    }

    Word apply_inverse(const Word& w, std::size_t budget = kDefaultWordBudget) const {
        return substitute(w, inv_, budget);
    }

    bool is_identity_on_pi1() const {
        for (int l = 1; l <= surface_.rank(); ++l)
            if (fwd_[static_cast<std::size_t>(l - 1)] != Word::generator(l)) return false;
        return true;
    }

    bool is_trivial() const {
        if (!is_identity_on_pi1()) return false;
        for (const Word& u : fwd_def_)
            if (!u.empty()) return false;
        return true;
    }

    bool operator==(const MappingClass& o) const {
        return surface_ == o.surface_ && fwd_ == o.fwd_ && fwd_def_ == o.fwd_def_;
    }
    bool operator!=(const MappingClass& o) const { return !(*this == o); }

    // Abelianized action on H_1 of the surface (column j = class of the image
    // of generator j).
    Matrix homology_action() const {
        const int m = surface_.rank();
        Matrix a(m, m);
        for (int j = 0; j < m; ++j) {
            auto col = fwd_[static_cast<std::size_t>(j)].abelianized(m);
            for (int i = 0; i < m; ++i) a.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        return a;
    }

    // Diagnostic check of the stored data.  Returns human-readable violation
    // messages; empty means the data is a legitimate mapping class
    // presentation.
    std::vector<std::string> validate(std::size_t budget = kDefaultWordBudget) const {
        std::vector<std::string> out;
        const int m = surface_.rank();
        const int b = surface_.boundary_components();
        if (static_cast<int>(fwd_.size()) != m || static_cast<int>(inv_.size()) != m) {
            out.push_back("wrong number of generator images");
            return out;
        }
        if (static_cast<int>(fwd_def_.size()) != b - 1 ||
            static_cast<int>(inv_def_.size()) != b - 1) {
            out.push_back("wrong number of defect words");
            return out;
        }
        for (const Word& w : fwd_)
            if (w.max_generator() > m) out.push_back("image uses an unknown generator");
        for (const Word& w : inv_)
            if (w.max_generator() > m) out.push_back("inverse image uses an unknown generator");
        if (!out.empty()) return out;

        try {
            auto fi = compose_images(fwd_, inv_, budget);
            auto if_ = compose_images(inv_, fwd_, budget);
            for (int l = 1; l <= m; ++l) {
                if (fi[static_cast<std::size_t>(l - 1)] != Word::generator(l) ||
                    if_[static_cast<std::size_t>(l - 1)] != Word::generator(l)) {
                    out.push_back("images and inverse images are not mutually inverse");
                    break;
                }
            }
            if (!out.empty()) return out;

            Matrix a = homology_action();
            long long det = mat_det(a);
            if (det != 1 && det != -1)
                out.push_back("homology action is not unimodular (determinant " +
                              std::to_string(det) + ")");

            if (substitute(surface_.delta1(), fwd_, budget) != surface_.delta1())
                out.push_back("does not fix the based boundary word of component 1");
            for (int c = 2; c <= b; ++c) {
                const Word& dc = surface_.boundary_word(c);
                const Word& u = fwd_def_[static_cast<std::size_t>(c - 2)];
                if (substitute(dc, fwd_, budget) * u != u * dc)
                    out.push_back("defect of component " + std::to_string(c) +
                                  " does not intertwine its boundary word");
                const Word& ui = inv_def_[static_cast<std::size_t>(c - 2)];
                // u^{f^-1} = f^-1(u^-1) forces this compatibility:
                if (substitute(u.inverse(), inv_, budget) != ui)
                    out.push_back("inverse defect of component " + std::to_string(c) +
                                  " is inconsistent");
            }

            if (declared_twist_) {
                const Curve& cu = surface_.curve(declared_twist_->first);
                Matrix expected = Matrix::identity(m);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        long long otc = 0;
                        for (int k = 0; k < m; ++k)
                            otc = checked_add(otc,
                                              checked_mul(surface_.omega().at(j, k),
                                                          cu.h_class[static_cast<std::size_t>(k)]));
                        expected.at(i, j) = checked_add(
                            expected.at(i, j),
                            checked_mul(static_cast<long long>(declared_twist_->second),
                                        checked_mul(cu.h_class[static_cast<std::size_t>(i)], otc)));
                    }
                if (a != expected)
                    out.push_back("declared twist about '" + declared_twist_->first +
                                  "' does not act by the expected transvection");
            }
        } catch (const BudgetError& e) {
            out.push_back(std::string("validation aborted: ") + e.what());
        }
        return out;
    }

    friend MappingClass compose(const MappingClass& f, const MappingClass& g, std::size_t budget);
    friend MappingClass invert(const MappingClass& f);

  private:
    Surface surface_;
    std::vector<Word> fwd_, inv_;
    std::vector<Word> fwd_def_, inv_def_;
    std::optional<std::pair<std::string, int>> declared_twist_;
};

// Composition f o g (g applied first).  Defects compose by the crossed rule
// u^{fg}_c = f(u^g_c) u^f_c: the moved arc picks up g's defect, transported
// through f, before f's own defect.
inline MappingClass compose(const MappingClass& f, const MappingClass& g,
                            std::size_t budget = kDefaultWordBudget) {
    if (f.surface_ != g.surface_)
        throw SemanticError("cannot compose mapping classes on different surfaces");
    MappingClass r;
    r.surface_ = f.surface_;
    r.fwd_ = compose_images(f.fwd_, g.fwd_, budget);
    r.inv_ = compose_images(g.inv_, f.inv_, budget);
    const std::size_t nd = f.fwd_def_.size();
    r.fwd_def_.reserve(nd);
    r.inv_def_.reserve(nd);
    for (std::size_t j = 0; j < nd; ++j) {
        r.fwd_def_.push_back(substitute(g.fwd_def_[j], f.fwd_, budget) * f.fwd_def_[j]);
        r.inv_def_.push_back(substitute(f.inv_def_[j], g.inv_, budget) * g.inv_def_[j]);
    }
    return r;
}

inline MappingClass invert(const MappingClass& f) {
    MappingClass r;
    r.surface_ = f.surface_;
    r.fwd_ = f.inv_;
    r.inv_ = f.fwd_;
    r.fwd_def_ = f.inv_def_;
    r.inv_def_ = f.fwd_def_;
    return r;
}

// Builds the composition of a word of library twists, leftmost factor
// applied last (function order): twist_word(s, {{"c1",+1},{"c2",-1}}) is
// tau_{c1} o tau_{c2}^-1.
inline MappingClass twist_word(const Surface& s,
                               const std::vector<std::pair<std::string, int>>& letters,
                               std::size_t budget = kDefaultWordBudget) {
    MappingClass r = MappingClass::identity(s);
    for (const auto& [name, sign] : letters)
        r = compose(r, MappingClass::twist(s, name, sign), budget);
    return r;
}

}  // namespace openbook
