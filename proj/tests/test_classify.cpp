#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "nsalg/classify.hpp"
#include "nsalg/oracle.hpp"
#include "support.hpp"

using nsalg::CiVerdict;
using nsalg::Int;
using nsalg::IntMatrix;
using nsalg::make_algebra;
using nsalg::NumericalSemigroup;
using nsalg::Rule;

namespace {

std::array<Int, 4> brute_c(const std::array<Int, 4>& g) {
    std::array<Int, 4> c{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Int> others;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i) others.push_back(g[j]);
        }
        const auto in = nsalg_test::reachable(others, 64 * g[i]);
        Int n = 1;
        while (!in[static_cast<std::size_t>(n * g[i])]) ++n;
        c[i] = n;
    }
    return c;
}

}  // namespace

TEST(Classify, TriangularExampleIsCI) {
    const auto rep = nsalg::classify(make_algebra({16, 24}, {16, 24, 31, 46, 44}));
    EXPECT_EQ(rep.ci, CiVerdict::CI);
    EXPECT_TRUE(rep.fired(Rule::ThmMain));
    EXPECT_TRUE(rep.fired(Rule::Thm3Min));
    ASSERT_EQ(rep.rectangles.size(), 1u);
    EXPECT_TRUE(rep.rectangles[0].triangular_permutation);
}

TEST(Classify, TwoPowerFamilyExample) {
    const auto rep = nsalg::classify(make_algebra({8}, {8, 9, 10, 12}));
    EXPECT_EQ(rep.ci, CiVerdict::CI);
    ASSERT_EQ(rep.rectangles.size(), 1u);
    EXPECT_EQ(rep.rectangles[0].matrix->matrix, (IntMatrix{{2, -1, 0}, {0, 2, -1}, {0, 0, 2}}));
    EXPECT_EQ(rep.rectangles[0].matrix->t, (std::vector<Int>{8, 8, 24}));
}

TEST(Classify, NotFlatIsNotCI) {
    const auto rep = nsalg::classify(make_algebra({2, 3}, {1}));
    EXPECT_EQ(rep.ci, CiVerdict::NotCI);
    EXPECT_EQ(rep.justification, (std::vector<Rule>{Rule::NotFlat}));
}

TEST(Classify, FlatNonRectangularIsUnknown) {
    const auto rep = nsalg::classify(make_algebra({22}, {14, 21, 22, 33}));
    EXPECT_EQ(rep.ci, CiVerdict::Unknown);
    EXPECT_TRUE(rep.flat.is_flat);
    EXPECT_FALSE(rep.rectangular());
    EXPECT_EQ(rep.justification, (std::vector<Rule>{Rule::NoRectangle}));
    EXPECT_FALSE(rep.unknown_reason.empty());
}

TEST(Classify, NonFlatRectangleHasNoMatrix) {
    const auto rep = nsalg::classify(make_algebra({17, 19}, {3, 5, 7}));
    EXPECT_EQ(rep.ci, CiVerdict::NotCI);
    ASSERT_EQ(rep.rectangles.size(), 1u);
    EXPECT_FALSE(rep.rectangles[0].matrix);
}

TEST(Classify, PrincipalFourMonomialRule) {
    const auto rep = nsalg::classify(make_algebra({32, 48}, {32, 35, 38, 44, 48, 56}));
    EXPECT_EQ(rep.ci, CiVerdict::CI);
    EXPECT_TRUE(rep.fired(Rule::ThmMain));
    EXPECT_FALSE(rep.fired(Rule::N4Principal));  // coefficient ring has two generators
    // 16 = 8 + 8 lies in <8,10,12,15>
    const auto q = nsalg::classify(make_algebra({16}, {8, 10, 12, 15}));
    EXPECT_EQ(q.ci, CiVerdict::CI);
    EXPECT_TRUE(q.fired(Rule::N4Principal));
    ASSERT_TRUE(q.bresinsky);
    // 16 is below every minimal monomial of <16,17,18,20,24>, so only THM_MAIN applies
    const auto w = nsalg::classify(make_algebra(std::vector<Int>{16}, nsalg_test::two_power_family(4, 1)));
    EXPECT_EQ(w.ci, CiVerdict::CI);
    EXPECT_TRUE(w.fired(Rule::ThmMain));
    EXPECT_FALSE(w.fired(Rule::N4Principal));
}

TEST(Gorenstein, Examples) {
    EXPECT_TRUE(nsalg::gorenstein_indicator(make_algebra({6}, {3, 5})));
    const auto p = make_algebra({3}, {3, 4, 5});
    EXPECT_EQ(p.apery_set().exponents, (std::vector<Int>{0, 4, 5}));
    EXPECT_FALSE(nsalg::gorenstein_indicator(p));
    EXPECT_TRUE(nsalg::gorenstein_indicator(make_algebra({2, 3}, {2, 3})));
}

TEST(Bresinsky, CVectors) {
    EXPECT_EQ(nsalg::bresinsky_c({14, 21, 15, 20}), (std::array<Int, 4>{3, 2, 4, 3}));
    EXPECT_EQ(nsalg::bresinsky_c({14, 21, 15, 20}), brute_c({14, 21, 15, 20}));
    EXPECT_EQ(nsalg::bresinsky_c({1, 2, 3, 4})[0], 2);
    EXPECT_EQ(nsalg::bresinsky_c({4, 6, 9, 23}), (std::array<Int, 4>{3, 2, 2, 1}));
    EXPECT_EQ(nsalg::bresinsky_c({4, 6, 9, 23}), brute_c({4, 6, 9, 23}));
    for (Int a = 5; a <= 9; ++a) {
        for (Int b = a + 1; b <= 13; ++b) {
            const std::array<Int, 4> g{a, b, a + b - 1, 2 * b + 1};
            EXPECT_EQ(nsalg::bresinsky_c(g), brute_c(g));
        }
    }
}

TEST(Bresinsky, RelationSearch) {
    const auto d = nsalg::bresinsky_relation_search({14, 21, 15, 20});
    ASSERT_TRUE(d.relation);
    EXPECT_EQ(d.relation->alpha, (std::array<Int, 4>{1, 1, 1, 1}));
    EXPECT_TRUE(d.symmetric);
    EXPECT_FALSE(d.degenerate);

    const auto one = nsalg::bresinsky_relation_search({1, 2, 3, 4});
    EXPECT_TRUE(one.degenerate);

    // symmetric and not a complete intersection: a relation must exist
    const auto s = nsalg::bresinsky_relation_search({5, 6, 7, 8});
    EXPECT_TRUE(s.symmetric);
    EXPECT_TRUE(s.relation);
}

TEST(Bresinsky, RelationsBalance) {
    for (Int a = 5; a <= 11; ++a) {
        for (Int b = a + 1; b <= 15; ++b) {
            const std::array<Int, 4> g{a, b, a + b - 2, 2 * b - 1};
            const auto d = nsalg::bresinsky_relation_search(g);
            if (!d.relation) continue;
            const auto& r = *d.relation;
            EXPECT_EQ(r.alpha[r.left[0]] * g[r.left[0]] + r.alpha[r.left[1]] * g[r.left[1]],
                      r.alpha[r.right[0]] * g[r.right[0]] + r.alpha[r.right[1]] * g[r.right[1]]);
            for (std::size_t i = 0; i < 4; ++i) {
                EXPECT_GT(r.alpha[i], 0);
                EXPECT_LT(r.alpha[i], d.c[i]);
            }
        }
    }
}

TEST(GluingProduct, Examples) {
    const auto s = NumericalSemigroup::from_integers({2, 3});
    const auto t = NumericalSemigroup::from_integers({3, 4});
    EXPECT_TRUE(nsalg::gluing_apery_product_check(s, t, 7, 5));
    EXPECT_TRUE(nsalg::gluing_apery_product_check(s, s, 5, 7));
    EXPECT_TRUE(nsalg::gluing_apery_product_check(NumericalSemigroup::from_integers({1}), t, 7, 2));
    EXPECT_THROW((void)nsalg::gluing_apery_product_check(s, t, 3, 2), nsalg::Error);
}

TEST(GluingProduct, FiftyGeneratedGluings) {
    const auto gluings = nsalg_test::generated_gluings(50);
    ASSERT_EQ(gluings.size(), 50u);
    for (const auto& g : gluings) {
        const auto s = NumericalSemigroup::from_integers(g.s);
        const auto t = NumericalSemigroup::from_integers(g.t);
        EXPECT_TRUE(nsalg::gluing_apery_product_check(s, t, g.p, g.q));
        // independent route: Apery sets straight from the definition
        std::vector<Int> glued;
        for (Int x : g.s) glued.push_back(g.p * x);
        for (Int x : g.t) glued.push_back(g.q * x);
        std::set<Int> formula;
        for (Int w1 : nsalg_test::apery_wrt(g.s, g.q)) {
            for (Int w2 : nsalg_test::apery_wrt(g.t, g.p)) formula.insert(g.p * w1 + g.q * w2);
        }
        const auto direct = nsalg_test::apery_wrt(glued, g.p * g.q);
        EXPECT_EQ(std::vector<Int>(formula.begin(), formula.end()), direct);
    }
}

TEST(ClassifyProperty, TwoPowerFamily) {
    for (Int n = 2; n <= 4; ++n) {
        for (Int a : {1, 3, 5}) {
            const auto gens = nsalg_test::two_power_family(n, a);
            const auto rep = nsalg::classify(make_algebra(std::vector<Int>{Int{1} << n}, gens));
            EXPECT_EQ(rep.ci, CiVerdict::CI) << "n=" << n << " a=" << a;
            bool bidiagonal = false;
            for (const auto& ra : rep.rectangles) {
                if (!ra.matrix) continue;
                IntMatrix expect(static_cast<std::size_t>(n));
                for (std::size_t i = 0; i < expect.size(); ++i) {
                    expect(i, i) = 2;
                    if (i + 1 < expect.size()) expect(i, i + 1) = -1;
                }
                bidiagonal = bidiagonal || ra.matrix->matrix == expect;
            }
            EXPECT_TRUE(bidiagonal) << "n=" << n << " a=" << a;
        }
    }
}

TEST(ClassifyProperty, SevenSFiveTNeverRectangular) {
    const std::vector<Int> gens{14, 15, 20, 21};
    const auto g = NumericalSemigroup::from_integers(gens);
    const Int bound = g.conductor() + 420;  // lcm of the generators
    int tested = 0;
    for (Int r = 1; r <= bound; ++r) {
        if (!g.member(r)) continue;
        EXPECT_TRUE(nsalg::find_rectangles(make_algebra(std::vector<Int>{r}, gens)).empty()) << r;
        ++tested;
    }
    EXPECT_GT(tested, 100);
}

TEST(ClassifyProperty, FreeArrangementsAreRectangular) {
    std::mt19937_64 rng(nsalg::kDefaultCorpusSeed + 1);
    std::uniform_int_distribution<Int> pick(2, 40);
    int found = 0;
    for (int trial = 0; trial < 20000 && found < 60; ++trial) {
        std::vector<Int> arr(static_cast<std::size_t>(2 + trial % 3));
        for (auto& x : arr) x = pick(rng);
        const auto fe = nsalg::free_exponents(arr);
        // independent criterion: phi_i equals the drop of the running gcd
        bool telescopic = true;
        Int g = arr[0];
        for (std::size_t i = 1; i < arr.size(); ++i) {
            const Int next = std::gcd(g, arr[i]);
            telescopic = telescopic && fe.phi[i - 1] == g / next;
            g = next;
        }
        EXPECT_EQ(fe.is_free, telescopic);
        if (!fe.is_free) continue;
        const auto pair = make_algebra(std::vector<Int>{arr[0]}, arr);
        std::vector<Int> tail(arr.begin() + 1, arr.end());
        std::sort(tail.begin(), tail.end());
        if (pair.minimal_monomials() != tail || std::adjacent_find(tail.begin(), tail.end()) != tail.end()) continue;
        std::vector<Int> expected(tail.size());
        for (std::size_t i = 1; i < arr.size(); ++i) {
            const auto pos = std::lower_bound(tail.begin(), tail.end(), arr[i]) - tail.begin();
            expected[static_cast<std::size_t>(pos)] = fe.phi[i - 1];
        }
        bool has = false;
        for (const auto& r : nsalg::find_rectangles(pair)) has = has || r.sizes == expected;
        EXPECT_TRUE(has);
        ++found;
    }
    EXPECT_GE(found, 20);
}

TEST(ClassifyProperty, CorpusInvariants) {
    for (const auto& p : nsalg_test::corpus_pairs()) {
        const auto rep = nsalg::classify(p);
        if (rep.ci == CiVerdict::NotCI) EXPECT_FALSE(rep.flat.is_flat);
        if (rep.ci == CiVerdict::CI) {
            EXPECT_TRUE(rep.flat.is_flat);
            EXPECT_FALSE(rep.justification.empty());
        }
        if (rep.ci == CiVerdict::Unknown) EXPECT_FALSE(rep.unknown_reason.empty());
        if (rep.flat.is_flat && rep.rectangular()) EXPECT_TRUE(rep.gorenstein_indicator);
        if (rep.flat.is_flat && rep.rectangular() && rep.minimal_monomials.size() <= 3) {
            EXPECT_TRUE(rep.fired(Rule::ThmMain));
        }
        const auto again = nsalg::classify(p);
        EXPECT_EQ(again.ci, rep.ci);
        EXPECT_EQ(again.justification, rep.justification);
    }
}
