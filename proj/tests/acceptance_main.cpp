// Acceptance suite: one verdict line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "openbook/braid.hpp"
#include "openbook/openbook.hpp"

using namespace openbook;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int checked_samples = 0;     // criterion 10 runs over every sampled monodromy
int soundness_violations = 0;

void observe(const MappingClass& m) {
    ++checked_samples;
    FactorReport fr = factor_report(OpenBook(m.surface(), m));
    // a nontrivial monodromy must never be certified as the full connected
    // sum, in particular not with invariants (page rank, free)
    if (!fr.trivial && fr.verdict == Verdict::FullConnectedSum) ++soundness_violations;
}

MappingClass random_twists(std::mt19937_64& rng, const Surface& s, int len) {
    const auto& names = s.curve_names();
    std::vector<std::pair<std::string, int>> w;
    for (int i = 0; i < len; ++i)
        w.emplace_back(names[rng() % names.size()], rng() % 2 ? 1 : -1);
    return twist_word(s, w);
}

// 1. Exact mapping-class relations on the small grid.
Outcome criterion1() {
    Outcome o;
    int braids = 0, commutes = 0;
    for (int g = 0; g <= 3; ++g)
        for (int b = 1; b <= 3; ++b) {
            Surface s(g, b);
            for (auto& [u, v] : s.braid_pairs()) {
                MappingClass tu = MappingClass::twist(s, u), tv = MappingClass::twist(s, v);
                if (compose(tu, compose(tv, tu)) != compose(tv, compose(tu, tv)))
                    o.fail("braid relation fails for " + u + "," + v + " on genus " +
                           std::to_string(g) + ", " + std::to_string(b) + " boundary");
                ++braids;
            }
            for (auto& [u, v] : s.disjoint_pairs()) {
                MappingClass tu = MappingClass::twist(s, u), tv = MappingClass::twist(s, v);
                if (compose(tu, tv) != compose(tv, tu))
                    o.fail("commutation fails for " + u + "," + v);
                ++commutes;
            }
        }
    Surface t(1, 1);
    std::vector<std::pair<std::string, int>> w;
    for (int i = 0; i < 6; ++i) {
        w.emplace_back("a1", 1);
        w.emplace_back("b1", 1);
    }
    if (twist_word(t, w) != MappingClass::twist(t, "bd1"))
        o.fail("chain relation (ta tb)^6 != boundary twist");
    if (o.pass)
        o.detail = std::to_string(braids) + " braid pairs, " + std::to_string(commutes) +
                   " disjoint pairs, chain relation exact";
    return o;
}

// 2. Lens space series against the framed-unknot surgery oracle.
Outcome criterion2() {
    Outcome o;
    Surface a(0, 2);
    for (int n = -8; n <= 8; ++n) {
        std::vector<std::pair<std::string, int>> w(static_cast<std::size_t>(std::abs(n)),
                                                   {"core", n > 0 ? 1 : -1});
        MappingClass f = twist_word(a, w);
        observe(f);
        auto inv = manifold_invariants(f);
        Matrix framed(1, 1);
        framed.at(0, 0) = n;
        auto oracle = smith_normal_form(framed);
        int expect_betti = n == 0 ? 1 : 0;
        if (inv.manifold_betti != expect_betti || inv.torsion != oracle.torsion)
            o.fail("mismatch at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "n in [-8,8] matches the surgery oracle";
    return o;
}

// 3. Identity monodromy: the full connected sum, on the whole rank <= 6 grid.
Outcome criterion3() {
    Outcome o;
    int count = 0;
    for (int g = 0; 2 * g <= 6; ++g)
        for (int b = 1; 2 * g + b - 1 <= 6; ++b) {
            Surface s(g, b);
            FactorReport fr = factor_report(OpenBook(s, MappingClass::identity(s)));
            int m = s.rank();
            if (!fr.trivial || fr.verdict != Verdict::FullConnectedSum ||
                fr.inv.manifold_betti != m || !fr.inv.torsion.empty() ||
                fr.s2s1_upper_bound != m)
                o.fail("identity on genus " + std::to_string(g) + ", boundary " +
                       std::to_string(b));
            ++count;
        }
    if (o.pass) o.detail = std::to_string(count) + " surfaces, all FULL_CONNECTED_SUM";
    return o;
}

// 4. Nontrivial twist words always land strictly below the full sum.
Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(1004);
    const std::pair<int, int> shapes[] = {{0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
    int blind = 0, gaps = 0;
    for (int i = 0; i < 500; ++i) {
        MappingClass f = MappingClass::identity(Surface(0, 1));
        if (i == 0) {
            // the homology-blind boundary twist (ta tb)^6
            Surface t(1, 1);
            std::vector<std::pair<std::string, int>> w;
            for (int k = 0; k < 6; ++k) {
                w.emplace_back("a1", 1);
                w.emplace_back("b1", 1);
            }
            f = twist_word(t, w);
        } else {
            for (;;) {
                auto [g, b] = shapes[rng() % 5];
                Surface s(g, b);
                f = random_twists(rng, s, 1 + static_cast<int>(rng() % 8));
                if (!f.is_trivial()) break;
            }
        }
        observe(f);
        FactorReport fr = factor_report(OpenBook(f.surface(), f));
        if (fr.trivial || fr.verdict != Verdict::StrictlyFewer)
            o.fail("sample " + std::to_string(i) + " not STRICTLY_FEWER");
        if (fr.inv.manifold_betti < fr.inv.page_betti) {
            ++gaps;
            if (fr.certificate.find("homology gap") == std::string::npos)
                o.fail("sample " + std::to_string(i) + " lacks the homological certificate");
        }
        if (fr.inv.manifold_betti == fr.inv.page_betti && fr.inv.torsion.empty()) ++blind;
    }
    if (blind == 0) o.fail("no homology-blind case in the corpus");
    if (o.pass)
        o.detail = "500 nontrivial words; " + std::to_string(gaps) + " homological gaps, " +
                   std::to_string(blind) + " homology-blind, all STRICTLY_FEWER";
    return o;
}

// 5. The inequality chain, with equality of readings on connected binding.
Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(1005);
    for (int i = 0; i < 1000; ++i) {
        int g = static_cast<int>(rng() % 4);
        int b = 1 + static_cast<int>(rng() % 4);
        if (g == 0 && b == 1) b = 2;
        Surface s(g, b);
        MappingClass f = random_twists(rng, s, static_cast<int>(rng() % 9));
        observe(f);
        auto inv = manifold_invariants(f);
        if (!(inv.manifold_betti <= inv.literal_fixed_dim &&
              inv.literal_fixed_dim <= inv.page_betti))
            o.fail("inequality chain broken at sample " + std::to_string(i));
        if (b == 1 && inv.manifold_betti != inv.literal_fixed_dim)
            o.fail("readings differ on a one-boundary page at sample " + std::to_string(i));
    }
    if (o.pass) o.detail = "1000 samples satisfy betti <= literal <= page rank";
    return o;
}

// 6. Hopf plumbing leaves the manifold alone.
Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(1006);
    for (int i = 0; i < 200; ++i) {
        int g = static_cast<int>(rng() % 3);
        int b = 1 + static_cast<int>(rng() % 3);
        if (g == 0 && b == 1) b = 2;
        Surface s(g, b);
        OpenBook ob(s, random_twists(rng, s, static_cast<int>(rng() % 7)));
        observe(ob.monodromy);
        auto before = invariants(ob);
        for (int sign : {1, -1}) {
            OpenBook after = hopf_plumb(ob, sign);
            auto now = invariants(after);
            observe(after.monodromy);
            if (now.manifold_betti != before.manifold_betti || now.torsion != before.torsion)
                o.fail("invariants moved at round " + std::to_string(i) + ", sign " +
                       std::to_string(sign));
            if (now.page_betti != before.page_betti + 1)
                o.fail("page rank did not grow at round " + std::to_string(i));
        }
    }
    if (o.pass) o.detail = "200 books x both signs: (betti, torsion) unchanged";
    return o;
}

// 7. Boundary connected sum is additive, and triviality is componentwise.
Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(1007);
    auto merged = [](std::vector<long long> a, const std::vector<long long>& b) {
        a.insert(a.end(), b.begin(), b.end());
        Matrix d(static_cast<int>(a.size()), static_cast<int>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            d.at(static_cast<int>(i), static_cast<int>(i)) = a[i];
        return smith_normal_form(d).torsion;
    };
    for (int i = 0; i < 200; ++i) {
        auto pick = [&] {
            int g = static_cast<int>(rng() % 2);
            int b = 1 + static_cast<int>(rng() % 3);
            if (g == 0 && b == 1) b = 2;
            Surface s(g, b);
            // bias towards trivial pieces so both branches of the
            // componentwise claim get exercised
            int len = rng() % 4 == 0 ? 0 : 1 + static_cast<int>(rng() % 5);
            return OpenBook(s, random_twists(rng, s, len));
        };
        OpenBook x = pick(), y = pick();
        OpenBook s = boundary_connected_sum(x, y);
        observe(s.monodromy);
        auto ix = invariants(x), iy = invariants(y), is = invariants(s);
        if (is.page_betti != ix.page_betti + iy.page_betti)
            o.fail("page rank not additive at round " + std::to_string(i));
        if (is.manifold_betti != ix.manifold_betti + iy.manifold_betti)
            o.fail("betti not additive at round " + std::to_string(i));
        if (is.torsion != merged(ix.torsion, iy.torsion))
            o.fail("torsion not additive at round " + std::to_string(i));
        if (s.monodromy.is_trivial() !=
            (x.monodromy.is_trivial() && y.monodromy.is_trivial()))
            o.fail("componentwise triviality fails at round " + std::to_string(i));
    }
    if (o.pass) o.detail = "200 pairs: betti and torsion add, triviality componentwise";
    return o;
}

// 8/9. Exhaustive small braids: the three triviality readings agree, and the
// Burau specialization tracks the lifted homology action.
struct BraidSweep {
    Outcome equiv;     // criterion 8
    Outcome burau;     // criterion 9
    long long words = 0;
    double seconds = 0;
};

BraidSweep braid_sweep() {
    BraidSweep sw;
    auto start = std::chrono::steady_clock::now();
    auto run = [&](int n, int maxlen) {
        const int alphabet = 2 * (n - 1);
        std::vector<int> letters;
        for (int len = 0; len <= maxlen; ++len) {
            std::vector<int> idx(static_cast<std::size_t>(len), 0);
            for (;;) {
                letters.clear();
                for (int v : idx) {
                    int a = v / 2 + 1;
                    letters.push_back(v % 2 == 0 ? a : -a);
                }
                BraidWord w(n, letters);
                ++sw.words;
                bool artin = artin_trivial(w);
                OpenBook cover = lift_to_cover(w);
                bool lifted = cover.monodromy.is_trivial();
                UnlinkReport rep = unlink_obstruction(w);
                bool may = rep.verdict == "CLOSURE_MAY_BE_UNLINK";
                if (artin != lifted || lifted != may)
                    sw.equiv.fail("readings disagree for " + w.str() + " in B" +
                                  std::to_string(n));
                observe(cover.monodromy);
                if (char_poly(cover.monodromy.homology_action()) !=
                    char_poly(burau_reduced_m1(w)))
                    sw.burau.fail("characteristic polynomials differ for " + w.str() +
                                  " in B" + std::to_string(n));
                // odometer
                int p = len - 1;
                while (p >= 0 && idx[static_cast<std::size_t>(p)] == alphabet - 1) {
                    idx[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
                ++idx[static_cast<std::size_t>(p)];
            }
        }
    };
    run(3, 6);
    run(4, 4);
    sw.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sw.seconds >= 60.0) sw.equiv.fail("runtime exceeded 60 s");
    char buf[160];
    if (sw.equiv.pass) {
        std::snprintf(buf, sizeof buf,
                      "%lld braid words, three-way agreement, %.1f s", sw.words, sw.seconds);
        sw.equiv.detail = buf;
    }
    if (sw.burau.pass) {
        std::snprintf(buf, sizeof buf, "%lld characteristic polynomials agree", sw.words);
        sw.burau.detail = buf;
    }
    return sw;
}

// 10. Soundness over every sampled monodromy.
Outcome criterion10() {
    Outcome o;
    if (soundness_violations > 0)
        o.fail(std::to_string(soundness_violations) + " nontrivial monodromies reported FULL");
    if (checked_samples < 2000) o.fail("too few samples observed");
    if (o.pass)
        o.detail = std::to_string(checked_samples) +
                   " sampled monodromies, none nontrivial with a FULL verdict";
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto line = [&](int n, const Outcome& o) {
        std::printf("criterion %2d: %s — %s\n", n, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        if (!o.pass) ++failures;
    };
    line(1, criterion1());
    line(2, criterion2());
    line(3, criterion3());
    line(4, criterion4());
    line(5, criterion5());
    line(6, criterion6());
    line(7, criterion7());
    BraidSweep sw = braid_sweep();
    line(8, sw.equiv);
    line(9, sw.burau);
    line(10, criterion10());
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
