#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "openbook/openbook.hpp"

using namespace openbook;

namespace {

OpenBook random_book(std::mt19937_64& rng, int max_g, int max_b, int max_len) {
    int g = static_cast<int>(rng() % static_cast<unsigned>(max_g + 1));
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_b));
    if (g == 0 && b == 1) b = 2;
    Surface s(g, b);
    const auto& names = s.curve_names();
    std::vector<std::pair<std::string, int>> w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i)
        w.emplace_back(names[rng() % names.size()], rng() % 2 ? 1 : -1);
    return OpenBook(s, twist_word(s, w));
}

std::vector<long long> merged_torsion(std::vector<long long> a,
                                      const std::vector<long long>& b) {
    a.insert(a.end(), b.begin(), b.end());
    Matrix d(static_cast<int>(a.size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = a[i];
    return smith_normal_form(d).torsion;
}

}  // namespace

TEST_CASE("verdict strings and certificates") {
    CHECK(std::string(verdict_str(Verdict::FullConnectedSum)) == "FULL_CONNECTED_SUM");
    CHECK(std::string(verdict_str(Verdict::StrictlyFewer)) == "STRICTLY_FEWER");

    Surface disk(0, 1);
    auto fr = factor_report(OpenBook(disk, MappingClass::identity(disk)));
    CHECK(fr.trivial);
    CHECK(fr.verdict == Verdict::FullConnectedSum);
    CHECK_THAT(fr.certificate, Catch::Matchers::ContainsSubstring("3-sphere"));

    Surface s(2, 1);
    auto fr2 = factor_report(OpenBook(s, MappingClass::identity(s)));
    CHECK(fr2.verdict == Verdict::FullConnectedSum);
    CHECK(fr2.s2s1_upper_bound == 4);
    CHECK_THAT(fr2.certificate, Catch::Matchers::ContainsSubstring("4 copies of S^2 x S^1"));

    Surface t(1, 1);
    auto fr3 = factor_report(OpenBook(t, MappingClass::twist(t, "a1")));
    CHECK(fr3.verdict == Verdict::StrictlyFewer);
    CHECK(!fr3.trivial);
    CHECK_THAT(fr3.certificate, Catch::Matchers::ContainsSubstring("moves"));

    Surface a(0, 2);
    auto fr4 = factor_report(OpenBook(a, MappingClass::twist(a, "bd2")));
    CHECK(fr4.verdict == Verdict::StrictlyFewer);
    CHECK_THAT(fr4.certificate, Catch::Matchers::ContainsSubstring("defect"));
}

TEST_CASE("open books demand matching surfaces") {
    Surface a(0, 2), t(1, 1);
    CHECK_THROWS_AS(OpenBook(a, MappingClass::twist(t, "a1")), SemanticError);
}

TEST_CASE("plumbing the disk builds Hopf bands") {
    Surface disk(0, 1);
    OpenBook d(disk, MappingClass::identity(disk));
    OpenBook hopf = hopf_plumb(d, 1);
    CHECK(hopf.page.genus() == 0);
    CHECK(hopf.page.boundary_components() == 2);
    auto inv = invariants(hopf);
    CHECK(inv.manifold_betti == 0);
    CHECK(inv.torsion.empty());
    CHECK(!hopf.monodromy.is_trivial());
    // plumb again: a genus-1 page, still the 3-sphere
    OpenBook two = hopf_plumb(hopf, 1);
    CHECK(two.page.genus() == 1);
    CHECK(two.page.boundary_components() == 1);
    auto inv2 = invariants(two);
    CHECK(inv2.manifold_betti == 0);
    CHECK(inv2.torsion.empty());
    // the negative band also carries the 3-sphere
    auto inv3 = invariants(hopf_plumb(d, -1));
    CHECK(inv3.manifold_betti == 0);
    CHECK(inv3.torsion.empty());
}

TEST_CASE("plumbing invariance, both signs") {
    std::mt19937_64 rng(51);
    for (int round = 0; round < 40; ++round) {
        OpenBook ob = random_book(rng, 2, 4, 5);
        auto before = invariants(ob);
        int sign = round % 2 == 0 ? 1 : -1;
        OpenBook after = hopf_plumb(ob, sign);
        auto now = invariants(after);
        INFO("g=" << ob.page.genus() << " b=" << ob.page.boundary_components()
                  << " sign=" << sign);
        CHECK(now.page_betti == before.page_betti + 1);
        CHECK(now.manifold_betti == before.manifold_betti);
        CHECK(now.torsion == before.torsion);
        CHECK(after.monodromy.validate().empty());
    }
}

TEST_CASE("plumbing attachment validation") {
    Surface a(0, 2);
    OpenBook ob(a, MappingClass::identity(a));
    CHECK_THROWS_AS(hopf_plumb(ob, 1, PlumbAttach::self_at(1)), SemanticError);
    CHECK_THROWS_AS(hopf_plumb(ob, 1, PlumbAttach::merge_at(1, 3)), SemanticError);
    CHECK_THROWS_AS(hopf_plumb(ob, 2), SemanticError);
    Surface t(1, 1);
    OpenBook tb(t, MappingClass::identity(t));
    CHECK_THROWS_AS(hopf_plumb(tb, 1, PlumbAttach::merge_at(1, 2)), SemanticError);
    CHECK_NOTHROW(hopf_plumb(tb, 1, PlumbAttach::self_at(1)));
}

TEST_CASE("boundary connected sum adds invariants") {
    Surface t(1, 1);
    OpenBook trefoil(t, twist_word(t, {{"a1", 1}, {"b1", 1}}), "trefoil");
    Surface a(0, 2);
    OpenBook lens3(a, twist_word(a, {{"core", 1}, {"core", 1}, {"core", 1}}), "L(3)");

    OpenBook sum = boundary_connected_sum(trefoil, lens3);
    CHECK(sum.page.genus() == 1);
    CHECK(sum.page.boundary_components() == 2);
    auto inv = invariants(sum);
    CHECK(inv.manifold_betti == 0);
    CHECK(inv.torsion == std::vector<long long>{3});
    CHECK_THAT(sum.label, Catch::Matchers::ContainsSubstring("trefoil"));

    OpenBook swapped = boundary_connected_sum(lens3, trefoil);
    auto inv2 = invariants(swapped);
    CHECK(inv2.manifold_betti == 0);
    CHECK(inv2.torsion == std::vector<long long>{3});

    std::mt19937_64 rng(52);
    for (int round = 0; round < 25; ++round) {
        OpenBook x = random_book(rng, 1, 3, 4);
        OpenBook y = random_book(rng, 1, 3, 4);
        OpenBook s = boundary_connected_sum(x, y);
        auto ix = invariants(x), iy = invariants(y), is = invariants(s);
        CHECK(is.page_betti == ix.page_betti + iy.page_betti);
        CHECK(is.manifold_betti == ix.manifold_betti + iy.manifold_betti);
        CHECK(is.torsion == merged_torsion(ix.torsion, iy.torsion));
        CHECK(s.monodromy.is_trivial() ==
              (x.monodromy.is_trivial() && y.monodromy.is_trivial()));
        CHECK(s.monodromy.validate().empty());
    }
}

TEST_CASE("nontrivial monodromy never reports the full connected sum") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 60; ++round) {
        OpenBook ob = random_book(rng, 2, 3, 6);
        auto fr = factor_report(ob);
        if (!fr.trivial) {
            CHECK(fr.verdict == Verdict::StrictlyFewer);
        } else {
            CHECK(fr.verdict == Verdict::FullConnectedSum);
            CHECK(fr.inv.manifold_betti == fr.inv.page_betti);
            CHECK(fr.inv.torsion.empty());
        }
    }
}
