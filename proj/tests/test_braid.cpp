#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "openbook/braid.hpp"

using namespace openbook;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int n, int len) {
    std::vector<int> ls;
    for (int k = 0; k < len; ++k) {
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        ls.push_back(rng() % 2 ? i : -i);
    }
    return BraidWord(n, ls);
}

}  // namespace

TEST_CASE("artin action satisfies the braid relations") {
    CHECK(artin_trivial(BraidWord(4, {1, 2, 1, -2, -1, -2})));
    CHECK(artin_trivial(BraidWord(4, {1, 3, -1, -3})));
    CHECK(!artin_trivial(BraidWord(4, {1, 2, -1, -2})));
    CHECK(!artin_trivial(BraidWord(2, {1})));
    CHECK(artin_trivial(BraidWord(5, {})));

    std::mt19937_64 rng(61);
    for (int n = 2; n <= 5; ++n) {
        for (int t = 0; t < 20; ++t) {
            BraidWord w = random_braid(rng, n, 1 + static_cast<int>(rng() % 6));
            auto im = artin_images(w);
            CHECK(substitute(artin_boundary_word(n), im) == artin_boundary_word(n));
            for (const Word& g : im) CHECK(g.cyclic_reduction().size() == 1);
            BraidWord ww = w;
            for (int l : w.inverse().letters) ww.letters.push_back(l);
            CHECK(artin_trivial(ww));
        }
    }
}

TEST_CASE("strand permutation and closure components") {
    CHECK(braid_permutation(BraidWord(3, {1})) == std::vector<int>{2, 1, 3});
    CHECK(closure_components(BraidWord(3, {})) == 3);
    CHECK(closure_components(BraidWord(3, {1})) == 2);
    CHECK(closure_components(BraidWord(3, {1, 2})) == 1);
    CHECK(closure_components(BraidWord(2, {1, 1})) == 2);
}

TEST_CASE("braid word validation") {
    CHECK_THROWS_AS(BraidWord(1, {}), SemanticError);
    CHECK_THROWS_AS(BraidWord(3, {3}), SemanticError);
    CHECK_THROWS_AS(BraidWord(3, {0}), SemanticError);
    CHECK(BraidWord(3, {1, -2}).str() == "s1 s2^-1");
    CHECK(BraidWord(3, {}).str() == "1");
}

TEST_CASE("the cover page matches the strand count") {
    CHECK(braid_cover_page(2) == Surface(0, 2));
    CHECK(braid_cover_page(3) == Surface(1, 1));
    CHECK(braid_cover_page(4) == Surface(1, 2));
    CHECK(braid_cover_page(5) == Surface(2, 1));
    CHECK(braid_cover_page(6) == Surface(2, 2));
}

TEST_CASE("braid relations lift to equal mapping classes") {
    CHECK(lift_to_cover(BraidWord(4, {1, 2, 1})).monodromy ==
          lift_to_cover(BraidWord(4, {2, 1, 2})).monodromy);
    CHECK(lift_to_cover(BraidWord(4, {1, 3})).monodromy ==
          lift_to_cover(BraidWord(4, {3, 1})).monodromy);
    CHECK(lift_to_cover(BraidWord(5, {1, 2, 1, -2, -1, -2})).monodromy.is_trivial());
}

TEST_CASE("burau at -1 tracks the lifted homology action") {
    std::mt19937_64 rng(62);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 40; ++t) {
            BraidWord w = random_braid(rng, n, static_cast<int>(rng() % 7));
            Matrix lift = lift_to_cover(w).monodromy.homology_action();
            CHECK(lift.rows == n - 1);
            CHECK(char_poly(lift) == char_poly(burau_reduced_m1(w)));
        }
    // reduced letters multiply like the braid group
    for (int n = 3; n <= 5; ++n) {
        Matrix a = burau_reduced_m1(BraidWord(n, {1, 2, 1}));
        Matrix b = burau_reduced_m1(BraidWord(n, {2, 1, 2}));
        CHECK(a == b);
        Matrix c = mat_mul(burau_reduced_letter_m1(n, 1), burau_reduced_letter_m1(n, -1));
        CHECK(c == Matrix::identity(n - 1));
    }
}

TEST_CASE("double branched covers of classical links") {
    // trefoil -> L(3); Hopf link -> RP^3; figure eight -> L(5); Borromean
    // rings -> the flat manifold with H_1 = Z/4 + Z/4.
    auto cover_inv = [](const BraidWord& w) { return invariants(lift_to_cover(w)); };
    auto tref = cover_inv(BraidWord(2, {1, 1, 1}));
    CHECK(tref.manifold_betti == 0);
    CHECK(tref.torsion == std::vector<long long>{3});
    auto hopf = cover_inv(BraidWord(2, {1, 1}));
    CHECK(hopf.manifold_betti == 0);
    CHECK(hopf.torsion == std::vector<long long>{2});
    auto fig8 = cover_inv(BraidWord(3, {1, -2, 1, -2}));
    CHECK(fig8.manifold_betti == 0);
    CHECK(fig8.torsion == std::vector<long long>{5});
    auto boro = cover_inv(BraidWord(3, {1, -2, 1, -2, 1, -2}));
    CHECK(boro.manifold_betti == 0);
    CHECK(boro.torsion == std::vector<long long>({4, 4}));
}

TEST_CASE("unlink obstruction") {
    for (int n = 2; n <= 5; ++n) {
        auto r = unlink_obstruction(BraidWord(n, {}));
        CHECK(r.verdict == "CLOSURE_MAY_BE_UNLINK");
        CHECK(r.cover.manifold_betti == n - 1);
    }
    auto r1 = unlink_obstruction(BraidWord(3, {1, 2, 1, -2, -1, -2}));
    CHECK(r1.verdict == "CLOSURE_MAY_BE_UNLINK");

    auto r2 = unlink_obstruction(BraidWord(2, {1}));
    CHECK(r2.verdict == "CLOSURE_NOT_UNLINK");
    CHECK_THAT(r2.certificate, Catch::Matchers::ContainsSubstring("rules out"));

    // the lift of the squared full twist acts trivially on homology, so the
    // monodromy witness has to carry the verdict
    auto r3 = unlink_obstruction(BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2}));
    CHECK(r3.verdict == "CLOSURE_NOT_UNLINK");
    CHECK(r3.cover.manifold_betti == 2);
    CHECK_THAT(r3.certificate, Catch::Matchers::ContainsSubstring("nontrivial"));
}
