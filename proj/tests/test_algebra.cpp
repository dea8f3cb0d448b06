#include <gtest/gtest.h>

#include <numeric>

#include "nsalg/algebra.hpp"
#include "nsalg/oracle.hpp"
#include "support.hpp"

using nsalg::AlgebraPair;
using nsalg::Error;
using nsalg::ErrorCode;
using nsalg::Int;
using nsalg::make_algebra;
using nsalg::NumericalSemigroup;
using nsalg::Rat;
using nsalg::Representation;

namespace {

std::vector<Int> pairwise_differences(const std::vector<Int>& a) {
    std::vector<Int> out;
    for (Int x : a) {
        for (Int y : a) {
            if (x >= y) out.push_back(x - y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(MakeAlgebra, ScaledCoefficients) {
    const auto p = AlgebraPair::make({2, 3}, {4, 9}, Rat(6));
    EXPECT_EQ(p.C().int_generators(), (std::vector<Int>{12, 18}));
    EXPECT_EQ(p.E().int_generators(), (std::vector<Int>{4, 9}));
    EXPECT_EQ(p.d(), 6);
    EXPECT_EQ(p.d_prime(), 1);
}

TEST(MakeAlgebra, SameVariable) {
    const auto p = make_algebra({6}, {3, 5});
    EXPECT_EQ(p.C().int_generators(), (std::vector<Int>{6}));
    EXPECT_EQ(p.E().int_generators(), (std::vector<Int>{3, 5}));
    EXPECT_NO_THROW((void)make_algebra({5}, {2, 3}));
    EXPECT_EQ(code_of([] { (void)make_algebra({1}, {2, 3}); }), ErrorCode::NotSubalgebra);
}

TEST(MakeAlgebra, RationalExponentsShareOneScale) {
    const auto p = AlgebraPair::make({2, 3}, {2, 3, Rat(3, 2)});
    EXPECT_EQ(p.common_scale(), 2);
    EXPECT_EQ(p.C().int_generators(), (std::vector<Int>{4, 6}));
    EXPECT_EQ(p.E().minimal_generators(), (std::vector<Int>{3, 4}));
}

TEST(MakeAlgebra, InvariantUnderRescaling) {
    const auto a = make_algebra({6, 8}, {3, 5});
    const auto b = AlgebraPair::make({Rat(6, 7), Rat(8, 7)}, {Rat(3, 7), Rat(5, 7)});
    EXPECT_EQ(a.apery_set().exponents, b.apery_set().exponents);
    EXPECT_EQ(a.minimal_monomials(), b.minimal_monomials());
    EXPECT_EQ(a.d(), b.d());
}

TEST(AperySet, Examples) {
    EXPECT_EQ(make_algebra({6}, {3, 5}).apery_set().exponents, (std::vector<Int>{0, 3, 5, 8, 10, 13}));
    EXPECT_EQ(make_algebra({6, 8}, {3, 5}).apery_set().exponents, (std::vector<Int>{0, 3, 5, 10}));
    EXPECT_EQ(make_algebra({12, 16}, {12, 14, 16, 35}).apery_set().exponents, (std::vector<Int>{0, 14, 35, 49}));
    EXPECT_EQ(make_algebra({2, 3}, {2, 3}).apery_set().exponents, (std::vector<Int>{0}));
}

TEST(MinimalMonomials, Examples) {
    EXPECT_EQ(make_algebra({6}, {3, 5}).minimal_monomials(), (std::vector<Int>{3, 5}));
    EXPECT_EQ(make_algebra({14, 22}, {14, 21, 22, 33}).minimal_monomials(), (std::vector<Int>{21, 33}));
    EXPECT_EQ(make_algebra({3}, {2, 3}).minimal_monomials(), (std::vector<Int>{2}));
    EXPECT_EQ(make_algebra({3}, {2, 3}).apery_set().exponents, (std::vector<Int>{0, 2, 4}));
}

TEST(Representations, Examples) {
    EXPECT_EQ(make_algebra({2, 3}, {1}).representations(3), (std::vector<Representation>{{2, 1}, {3, 0}}));
    const auto reps = make_algebra({9, 15, 21}, {5, 8, 9}).representations(23);
    EXPECT_NE(std::find(reps.begin(), reps.end(), Representation{18, 5}), reps.end());
    EXPECT_NE(std::find(reps.begin(), reps.end(), Representation{15, 8}), reps.end());
    EXPECT_EQ(make_algebra({6}, {3, 5}).representations(0), (std::vector<Representation>{{0, 0}}));
    EXPECT_EQ(code_of([] { (void)make_algebra({6}, {3, 5}).representations(7); }), ErrorCode::NotMember);
}

TEST(DeltaSet, Examples) {
    EXPECT_EQ(make_algebra({6}, {3, 5}).delta_set(), (std::vector<Int>{0, 2, 3, 5, 7, 8, 10, 13}));
    EXPECT_EQ(make_algebra({6}, {3, 5}).delta_set(), pairwise_differences({0, 3, 5, 8, 10, 13}));
    EXPECT_EQ(make_algebra({3}, {3}).delta_set(), (std::vector<Int>{0}));
    EXPECT_EQ(make_algebra({12, 16}, {12, 14, 16, 35}).delta_set(), (std::vector<Int>{0, 14, 21, 35, 49}));
}

TEST(IsFlat, Examples) {
    const auto classical = nsalg::is_flat(make_algebra({2}, {2, 3}));
    EXPECT_TRUE(classical.is_flat);
    EXPECT_EQ(classical.apery_count, 2);
    EXPECT_EQ(classical.expected_count, 2);
    EXPECT_FALSE(classical.witness);

    const auto n = nsalg::is_flat(make_algebra({2, 3}, {1}));
    EXPECT_FALSE(n.is_flat);
    ASSERT_TRUE(n.witness);
    EXPECT_EQ(n.witness->exponent, 3);

    const auto p = make_algebra({9, 12}, {3, 4});
    EXPECT_EQ(p.apery_set().exponents, (std::vector<Int>{0, 3, 4, 6, 7, 8, 10, 11, 14}));
    const auto v = nsalg::is_flat(p);
    EXPECT_FALSE(v.is_flat);
    EXPECT_EQ(v.apery_count, 9);
    EXPECT_EQ(v.expected_count, 3);

    const auto q = make_algebra({9, 15, 21}, {5, 8, 9});
    EXPECT_FALSE(nsalg::is_flat(q).is_flat);
    EXPECT_TRUE(nsalg::check_flat_intersection(q));
    EXPECT_EQ(nsalg::is_flat(q).witness->exponent, 23);
}

TEST(IsFlat, WitnessIsAGenuineDoubleRepresentation) {
    const auto p = make_algebra({14, 22}, {14, 21, 22, 33});
    const auto v = nsalg::is_flat(p);
    ASSERT_TRUE(v.witness);
    const auto& w = *v.witness;
    EXPECT_EQ(w.exponent, 77);
    EXPECT_EQ(w.first.coefficient + w.first.apery, w.exponent);
    EXPECT_EQ(w.second.coefficient + w.second.apery, w.exponent);
    EXPECT_NE(w.first, w.second);
    EXPECT_GE(p.representations(231).size(), 2u);
}

TEST(FlatIntersection, Examples) {
    EXPECT_TRUE(nsalg::check_flat_intersection(make_algebra({9, 15, 21}, {5, 8, 9})));
    EXPECT_TRUE(nsalg::check_flat_intersection(make_algebra({2}, {2, 3})));
    EXPECT_FALSE(nsalg::check_flat_intersection(make_algebra({2, 3}, {1})));
}

TEST(FlatRoot, Examples) {
    EXPECT_TRUE(nsalg::check_flat_root(NumericalSemigroup::from_integers({2, 3}), 3, 2));
    EXPECT_FALSE(nsalg::check_flat_root(NumericalSemigroup::from_integers({2, 3}), 1, 2));
    EXPECT_TRUE(nsalg::check_flat_root(NumericalSemigroup::from_integers({5, 6, 7}), 5, 2));
    EXPECT_EQ(code_of([] { (void)nsalg::check_flat_root(NumericalSemigroup::from_integers({2, 3}), 4, 2); }),
              ErrorCode::PreconditionFailed);
    EXPECT_EQ(code_of([] { (void)nsalg::check_flat_root(NumericalSemigroup::from_integers({4, 6}), 3, 2); }),
              ErrorCode::PreconditionFailed);
}

TEST(FlatTwoGen, Examples) {
    EXPECT_FALSE(nsalg::check_flat_two_gen(std::vector<Int>{9, 12}, 3, 4));
    EXPECT_TRUE(nsalg::check_flat_two_gen(std::vector<Int>{6}, 2, 3));
    EXPECT_FALSE(nsalg::check_flat_two_gen(std::vector<Int>{6, 8}, 3, 2));
    EXPECT_FALSE(nsalg::is_flat(make_algebra({6, 8}, {2, 3})).is_flat);
    EXPECT_EQ(code_of([] { (void)nsalg::check_flat_two_gen(std::vector<Int>{5}, 2, 4); }), ErrorCode::PreconditionFailed);
    EXPECT_EQ(code_of([] { (void)nsalg::check_flat_two_gen(std::vector<Int>{1}, 2, 3); }), ErrorCode::PreconditionFailed);
}

TEST(CommonDivisor, Examples) {
    const auto p = make_algebra({4, 6}, {2});
    EXPECT_FALSE(nsalg::common_divisor_condition(p));
    EXPECT_FALSE(nsalg::is_flat(p).is_flat);
    const auto q = make_algebra({14, 22}, {14, 21, 22, 33});
    EXPECT_TRUE(nsalg::common_divisor_condition(q));
    EXPECT_FALSE(nsalg::is_flat(q).is_flat);
    EXPECT_TRUE(nsalg::common_divisor_condition(make_algebra({6}, {3, 5})));
}

TEST(CommonDivisor, NecessaryOnCorpus) {
    for (const auto& p : nsalg_test::corpus_pairs()) {
        if (nsalg::is_flat(p).is_flat) EXPECT_TRUE(nsalg::common_divisor_condition(p)) << p.E().str() << "/" << p.C().str();
    }
}

TEST(AlgebraProperty, CountBoundsAndIntersection) {
    for (const auto& p : nsalg_test::corpus_pairs()) {
        const auto& a = p.apery_set();
        ASSERT_FALSE(a.exponents.empty());
        EXPECT_EQ(a.exponents.front(), 0);
        EXPECT_GE(static_cast<Int>(a.size()), p.d() / p.d_prime());
        EXPECT_EQ(p.d() % p.d_prime(), 0);
        EXPECT_LT(a.max(), p.E().conductor() + p.C().multiplicity());
        if (nsalg::is_flat(p).is_flat) EXPECT_TRUE(nsalg::check_flat_intersection(p));
    }
}

TEST(AlgebraProperty, DeltaCriterionByHand) {
    for (const auto& p : nsalg_test::corpus_pairs()) {
        const auto diffs = pairwise_differences(p.apery_set().exponents);
        const Int step = p.d();
        bool delta_ok = true;
        for (Int x : diffs) {
            if (x % step == 0 && !p.C().member(x)) delta_ok = false;
        }
        EXPECT_EQ(delta_ok, nsalg::is_flat(p).is_flat);
    }
}

TEST(AlgebraProperty, RepresentationsUniqueIffFlat) {
    int checked = 0;
    for (const auto& p : nsalg_test::corpus_pairs()) {
        const Int bound = p.C().conductor() + p.apery_set().max();
        if (bound > 2000) continue;
        bool unique = true;
        for (Int s = 0; s <= bound && unique; ++s) {
            if (p.E().member(s)) {
                const auto reps = p.representations(s);
                EXPECT_FALSE(reps.empty());
                unique = reps.size() == 1;
            }
        }
        EXPECT_EQ(unique, nsalg::is_flat(p).is_flat);
        ++checked;
    }
    EXPECT_GT(checked, 300);
}

TEST(AlgebraProperty, RootCriterionAgreesWithCount) {
    const std::vector<std::vector<Int>> bases{{2, 3}, {3, 5}, {5, 6, 7}, {4, 6, 9}, {3, 7, 11}, {6, 10, 15}};
    for (const auto& gens : bases) {
        const auto r = NumericalSemigroup::from_integers(gens);
        for (Int m = 2; m <= 5; ++m) {
            for (Int s = 1; s <= 30; ++s) {
                if (std::gcd(s, m) != 1) continue;
                std::vector<Rat> ext(gens.begin(), gens.end());
                ext.emplace_back(s, m);
                const bool flat = nsalg::is_flat(AlgebraPair::make(r.given_generators(), ext)).is_flat;
                EXPECT_EQ(nsalg::check_flat_root(r, s, m), flat);
                EXPECT_EQ(flat, r.member(s));
            }
        }
    }
}

TEST(AlgebraProperty, TwoGeneratorCriterionAgreesWithCount) {
    int checked = 0;
    for (Int s1 = 2; s1 <= 9; ++s1) {
        for (Int s2 = s1 + 1; s2 <= 11; ++s2) {
            if (std::gcd(s1, s2) != 1) continue;
            const auto t = NumericalSemigroup::from_integers({s1, s2});
            for (Int x = 2; x <= 40; ++x) {
                for (Int y = x; y <= 40; ++y) {
                    if (!t.member(x) || !t.member(y)) continue;
                    const std::vector<Int> r{x, y};
                    std::vector<Int> ext{x, y, s1, s2};
                    const bool flat = nsalg::is_flat(make_algebra(r, ext)).is_flat;
                    EXPECT_EQ(nsalg::check_flat_two_gen(r, s1, s2), flat) << x << "," << y << " in <" << s1 << "," << s2 << ">";
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 1000);
}
