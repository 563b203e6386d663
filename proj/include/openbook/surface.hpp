#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "openbook/detail/cover_model.hpp"
#include "openbook/errors.hpp"
#include "openbook/intmat.hpp"
#include "openbook/word.hpp"

namespace openbook {

// A simple closed curve shipped with a Surface, together with the exact
// automorphism data of the right- and left-handed Dehn twists about it.
struct Curve {
    std::string name;
    std::vector<std::string> aliases;
    std::vector<long long> h_class;  // homology class in the standard basis
    bool boundary_parallel = false;
    int chain_index = 0;    // k for the chain curve c_k, else 0
    int bd_component = 0;   // c for the boundary-parallel curve bd_c, else 0
    std::vector<Word> images_pos, images_neg;    // generator images, sign +-1
    std::vector<Word> defects_pos, defects_neg;  // defect words, components 2..b
};

// The compact oriented surface S_{g,b} with a fixed free basis
// x_1,y_1,...,x_g,y_g,z_1,...,z_{b-1} of its fundamental group (based on
// boundary component 1), pinned so that the based boundary word of
// component 1 is exactly [x_1,y_1]...[x_g,y_g] z_1...z_{b-1}.  Boundary
// component 1+j is the one whose based boundary word is a conjugate of
// z_j^-1.  Ships a validated curve library: the chain c_1..c_{2g+r-1}
// (r = 1 for odd b, r = 2 for even b) coming from the branched double cover
// model, and one boundary-parallel curve bd_c per component.
class Surface {
  public:
    Surface() : Surface(0, 1) {}

    Surface(int genus, int boundary) : d_(nullptr) {
        if (genus < 0 || boundary < 1)
            throw SemanticError("a surface needs genus >= 0 and at least one boundary component");
        // Construction validates the whole curve library, so share one
        // immutable payload per (g, b).
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::shared_ptr<const Data>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[{genus, boundary}];
        if (!slot) slot = std::make_shared<Data>(genus, boundary);
        d_ = slot;
    }

    int genus() const { return d_->model.genus(); }
    int boundary_components() const { return d_->model.boundary(); }
    int rank() const { return d_->model.rank(); }
    const detail::CoverModel& model() const { return d_->model; }

    const std::vector<std::string>& generator_names() const { return d_->names; }

    std::string word_str(const Word& w) const { return w.str(d_->names); }

    // Based boundary word of component c (1..b), boundary oriented.
    const Word& boundary_word(int c) const {
        if (c < 1 || c > boundary_components())
            throw SemanticError("boundary component out of range");
        return d_->boundary_words[static_cast<std::size_t>(c - 1)];
    }

    const Word& delta1() const { return d_->boundary_words[0]; }

    // Intersection form on H_1 in the standard basis: <x_i, y_i> = +1,
    // z-classes pair trivially with everything.
    const Matrix& omega() const { return d_->omega; }

    long long pairing(const std::vector<long long>& a, const std::vector<long long>& b) const {
        long long total = 0;
        const int m = rank();
        for (int i = 0; i < m; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < m; ++j) {
                long long w = d_->omega.at(i, j);
                if (w == 0 || b[static_cast<std::size_t>(j)] == 0) continue;
                total = checked_add(total,
                                    checked_mul(checked_mul(a[static_cast<std::size_t>(i)], w),
                                                b[static_cast<std::size_t>(j)]));
            }
        }
        return total;
    }

    bool has_curve(const std::string& name) const {
        return d_->curve_index.count(name) != 0;
    }

    const Curve& curve(const std::string& name) const {
        auto it = d_->curve_index.find(name);
        if (it == d_->curve_index.end())
            throw SemanticError("unknown curve '" + name + "' on a surface of genus " +
                                std::to_string(genus()) + " with " +
                                std::to_string(boundary_components()) + " boundary components");
        return d_->curves[it->second];
    }

    std::vector<std::string> curve_names() const {
        std::vector<std::string> out;
        for (const Curve& c : d_->curves) out.push_back(c.name);
        return out;
    }

    // Pairs of library curves that are disjoint (their twists commute).
    std::vector<std::pair<std::string, std::string>> disjoint_pairs() const {
        std::vector<std::pair<std::string, std::string>> out;
        const int L = d_->model.chain_length();
        for (int i = 1; i <= L; ++i)
            for (int j = i + 2; j <= L; ++j)
                out.emplace_back(chain_name(i), chain_name(j));
        for (int c = 1; c <= boundary_components(); ++c) {
            for (int i = 1; i <= L; ++i) out.emplace_back(bd_name(c), chain_name(i));
            for (int c2 = c + 1; c2 <= boundary_components(); ++c2)
                out.emplace_back(bd_name(c), bd_name(c2));
        }
        return out;
    }

    // Pairs of library curves meeting transversely in one point (their twists
    // satisfy the braid relation).
    std::vector<std::pair<std::string, std::string>> braid_pairs() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (int i = 1; i + 1 <= d_->model.chain_length(); ++i)
            out.emplace_back(chain_name(i), chain_name(i + 1));
        return out;
    }

    bool operator==(const Surface& o) const {
        return genus() == o.genus() && boundary_components() == o.boundary_components();
    }
    bool operator!=(const Surface& o) const { return !(*this == o); }

    static std::string chain_name(int k) { return "c" + std::to_string(k); }
    static std::string bd_name(int c) { return "bd" + std::to_string(c); }

  private:
    struct Data {
        detail::CoverModel model;
        std::vector<std::string> names;
        std::vector<Word> boundary_words;
        Matrix omega;
        std::vector<Curve> curves;
        std::map<std::string, std::size_t> curve_index;

        Data(int genus, int boundary) : model(genus, boundary) {
            const int m = model.rank();
            const int b = model.boundary();
            for (int i = 1; i <= genus; ++i) {
                names.push_back("x" + std::to_string(i));
                names.push_back("y" + std::to_string(i));
            }
            for (int j = 1; j <= b - 1; ++j) names.push_back("z" + std::to_string(j));

            for (int c = 1; c <= b; ++c)
                boundary_words.push_back(model.to_std(model.comp_word_model(c)));
            detail::ensure(boundary_words[0] == model.delta1_std(),
                           "component-1 boundary word is not in standard form");

            omega = Matrix(m, m);
            for (int i = 1; i <= genus; ++i) {
                omega.at(2 * i - 2, 2 * i - 1) = 1;   // <x_i, y_i> = +1
                omega.at(2 * i - 1, 2 * i - 2) = -1;  // <y_i, x_i> = -1
            }

            build_chain_curves();
            build_boundary_curves();
            for (const Curve& cu : curves) verify_curve(cu);
            index_curves();
        }

        // Images of the standard letters under a model-coordinate class.
        std::vector<Word> to_std_images(const std::vector<Word>& model_images) const {
            std::vector<Word> out;
            const int m = model.rank();
            out.reserve(static_cast<std::size_t>(m));
            for (int l = 1; l <= m; ++l)
                out.push_back(model.to_std(
                    substitute(model.to_model(Word::generator(l)), model_images)));
            return out;
        }

        std::vector<Word> to_std_words(const std::vector<Word>& model_words) const {
            std::vector<Word> out;
            out.reserve(model_words.size());
            for (const Word& w : model_words) out.push_back(model.to_std(w));
            return out;
        }

        void build_chain_curves() {
            for (int k = 1; k <= model.chain_length(); ++k) {
                Curve cu;
                cu.name = chain_name(k);
                cu.chain_index = k;
                int pair = k % 2 == 1 ? (k + 1) / 2 : k / 2;
                if (pair <= model.genus())
                    cu.aliases.push_back((k % 2 == 1 ? "a" : "b") + std::to_string(pair));
                if (model.genus() == 0 && model.boundary() == 2) cu.aliases.push_back("core");
                // Free homotopy class of the curve: the lift of the loop
                // d_k d_{k+1} around the two branch points it covers.
                Word cls = model.rewrite_even({k, k + 1});
                cu.h_class = model.to_std(cls).abelianized(model.rank());
                auto pos = model.lift_sigma(k, +1);
                auto neg = model.lift_sigma(k, -1);
                cu.images_pos = to_std_images(pos.images);
                cu.images_neg = to_std_images(neg.images);
                cu.defects_pos = to_std_words(pos.defects);
                cu.defects_neg = to_std_words(neg.defects);
                curves.push_back(std::move(cu));
            }
        }

        void build_boundary_curves() {
            const int m = model.rank();
            const int b = model.boundary();
            for (int c = 1; c <= b; ++c) {
                Curve cu;
                cu.name = bd_name(c);
                cu.boundary_parallel = true;
                cu.bd_component = c;
                const Word& dc = boundary_words[static_cast<std::size_t>(c - 1)];
                cu.h_class = dc.abelianized(m);
                if (c == 1) {
                    // Twist about a curve parallel to component 1: conjugation
                    // by the full boundary word; every reference arc to another
                    // component crosses the twisting annulus once.
                    const Word& d1 = boundary_words[0];
                    for (int l = 1; l <= m; ++l) {
                        cu.images_pos.push_back(Word::generator(l).conjugated_by(d1));
                        cu.images_neg.push_back(Word::generator(l).conjugated_by(d1.inverse()));
                    }
                    cu.defects_pos.assign(static_cast<std::size_t>(b - 1), d1);
                    cu.defects_neg.assign(static_cast<std::size_t>(b - 1), d1.inverse());
                } else {
                    // The annulus misses the base point and every reference
                    // arc except the one to component c.
                    cu.images_pos = identity_images(m);
                    cu.images_neg = identity_images(m);
                    cu.defects_pos.assign(static_cast<std::size_t>(b - 1), Word());
                    cu.defects_neg.assign(static_cast<std::size_t>(b - 1), Word());
                    cu.defects_pos[static_cast<std::size_t>(c - 2)] = dc.inverse();
                    cu.defects_neg[static_cast<std::size_t>(c - 2)] = dc;
                }
                curves.push_back(std::move(cu));
            }
        }

        // Construction-time validation of a library curve's twist data:
        // mutually inverse automorphisms, peripheral exactness, and the
        // homological transvection law v -> v + <v,[c]>[c].
        void verify_curve(const Curve& cu) const {
            const int m = model.rank();
            const int b = model.boundary();
            auto check_id = [&](const std::vector<Word>& imgs) {
                for (int l = 1; l <= m; ++l)
                    detail::ensure(imgs[static_cast<std::size_t>(l - 1)] == Word::generator(l),
                                   "twist data: inverse composition is not the identity");
            };
            check_id(compose_images(cu.images_pos, cu.images_neg));
            check_id(compose_images(cu.images_neg, cu.images_pos));

            for (int s = 0; s < 2; ++s) {
                const auto& imgs = s == 0 ? cu.images_pos : cu.images_neg;
                const auto& defs = s == 0 ? cu.defects_pos : cu.defects_neg;
                detail::ensure(substitute(boundary_words[0], imgs) == boundary_words[0],
                               "twist data: component-1 boundary word not fixed");
                for (int c = 2; c <= b; ++c) {
                    const Word& dc = boundary_words[static_cast<std::size_t>(c - 1)];
                    const Word& u = defs[static_cast<std::size_t>(c - 2)];
                    detail::ensure(substitute(dc, imgs) * u == u * dc,
                                   "twist data: boundary word not respected");
                }
                // Transvection on homology.
                int sign = s == 0 ? 1 : -1;
                for (int l = 1; l <= m; ++l) {
                    auto v = Word::generator(l).abelianized(m);
                    auto img = imgs[static_cast<std::size_t>(l - 1)].abelianized(m);
                    long long coef = 0;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j)
                            coef = checked_add(
                                coef, checked_mul(checked_mul(v[static_cast<std::size_t>(i)],
                                                              omega.at(i, j)),
                                                  cu.h_class[static_cast<std::size_t>(j)]));
                    for (int i = 0; i < m; ++i)
                        detail::ensure(
                            img[static_cast<std::size_t>(i)] ==
                                v[static_cast<std::size_t>(i)] +
                                    sign * coef * cu.h_class[static_cast<std::size_t>(i)],
                            "twist data: homology action is not the expected transvection");
                }
            }
        }

        void index_curves() {
            for (std::size_t i = 0; i < curves.size(); ++i) {
                detail::ensure(curve_index.emplace(curves[i].name, i).second,
                               "duplicate curve name");
                for (const std::string& a : curves[i].aliases)
                    detail::ensure(curve_index.emplace(a, i).second, "duplicate curve alias");
            }
        }
    };

    std::shared_ptr<const Data> d_;
};

}  // namespace openbook
