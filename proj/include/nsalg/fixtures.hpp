#pragma once

// Embedded worked examples with their published values. Run by the
// `fixtures` CLI subcommand and by the test suites.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "classify.hpp"
#include "oracle.hpp"
#include "rectangle.hpp"
#include "semigroup.hpp"

namespace nsalg::fixtures {

struct FixtureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void expect(bool cond, const std::string& what) {
    if (!cond) throw FixtureFailure(what);
}

template <typename T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

template <typename T>
void expect_eq(const std::vector<T>& actual, const std::vector<T>& expected, const std::string& what) {
    expect(actual == expected, what + ": got " + show(actual) + ", expected " + show(expected));
}

struct Fixture {
    std::string label;
    std::function<void()> body;
};

struct FixtureResult {
    std::string label;
    bool passed = false;
    std::string message;
    double millis = 0;
};

inline std::vector<Int> apery(std::initializer_list<Int> c, std::initializer_list<Int> e) {
    return make_algebra(c, e).apery_set().exponents;
}

inline std::vector<std::vector<Int>> rectangle_sizes(const AlgebraPair& pair) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : find_rectangles(pair)) out.push_back(r.sizes);
    return out;
}

inline std::vector<Fixture> all() {
    std::vector<Fixture> f;

    // semigroups
    f.push_back({"semigroup/member-23-in-5-8-9", [] {
                     expect(NumericalSemigroup::from_integers({5, 8, 9}).member(23), "23 in <5,8,9>");
                 }});
    f.push_back({"semigroup/minimal-14-21-15-20", [] {
                     expect_eq(NumericalSemigroup::from_integers({14, 21, 15, 20}).minimal_generators(), {14, 15, 20, 21},
                               "minimal generators");
                 }});
    f.push_back({"semigroup/glue-7S-5T", [] {
                     const auto g = glue(NumericalSemigroup::from_integers({2, 3}), NumericalSemigroup::from_integers({3, 4}), 7, 5);
                     expect_eq(g.int_generators(), {14, 21, 15, 20}, "7S+5T generators");
                 }});
    f.push_back({"semigroup/free-2n-family", [] {
                     const std::vector<Int> arrangement{8, 12, 10, 9};
                     const auto fe = free_exponents(arrangement);
                     expect_eq(fe.phi, {2, 2, 2}, "phi");
                     expect(fe.is_free, "arrangement (8,12,10,9) is free");
                 }});

    // Apery sets
    f.push_back({"apery/3-5-over-6", [] { expect_eq(apery({6}, {3, 5}), {0, 3, 5, 8, 10, 13}, "Apery set"); }});
    f.push_back({"apery/3-5-over-6-8", [] { expect_eq(apery({6, 8}, {3, 5}), {0, 3, 5, 10}, "Apery set"); }});
    f.push_back({"apery/oracle-3-5-over-6", [] {
                     expect_eq(oracle::apery_by_definition(make_algebra({6}, {3, 5}), 20), {0, 3, 5, 8, 10, 13}, "oracle Apery");
                 }});
    f.push_back({"apery/minimal-monomials-14-21-22-33", [] {
                     expect_eq(make_algebra({14, 22}, {14, 21, 22, 33}).minimal_monomials(), {21, 33}, "minimal monomials");
                 }});

    // flatness
    f.push_back({"flat/classical-2-3-over-2", [] {
                     const auto p = make_algebra({2}, {2, 3});
                     expect_eq(p.apery_set().exponents, {0, 3}, "Apery set");
                     expect(is_flat(p).is_flat, "flat");
                     expect(!oracle::unique_representation_scan(p), "unique representations");
                 }});
    f.push_back({"flat/gluing-12-14-16-35", [] {
                     const auto p = make_algebra({12, 16}, {12, 14, 16, 35});
                     expect_eq(p.apery_set().exponents, {0, 14, 35, 49}, "Apery set");
                     expect(is_flat(p).is_flat, "flat");
                 }});
    f.push_back({"flat/scaled-4-9-over-2-3", [] {
                     const auto p = AlgebraPair::make({2, 3}, {4, 9}, Rat(6));
                     expect_eq(p.C().int_generators(), {12, 18}, "C");
                     expect(p.d() == 6 && p.d_prime() == 1, "d = 6, d' = 1");
                     expect_eq(p.apery_set().exponents, {0, 4, 8, 9, 13, 17}, "Apery set");
                     expect_eq(oracle::apery_by_definition(p), {0, 4, 8, 9, 13, 17}, "oracle Apery set");
                     expect(is_flat(p).is_flat, "flat");
                 }});
    f.push_back({"flat/root-3-over-2", [] {
                     expect(check_flat_root(NumericalSemigroup::from_integers({2, 3}), 3, 2), "R[[u^{3/2}]] flat");
                     const auto p = AlgebraPair::make({2, 3}, {2, 3, Rat(3, 2)});
                     expect_eq(p.E().minimal_generators(), {3, 4}, "<4,6,3> = <3,4> in v");
                 }});
    f.push_back({"flat/roots-over-5-6-7", [] {
                     const auto p = AlgebraPair::make({5, 6, 7}, {5, 6, 7, Rat(3, 2), Rat(5, 2), Rat(7, 2)});
                     expect_eq(p.E().minimal_generators(), {3, 5, 7}, "<3,5,7> in v");
                     expect(!is_flat(p).is_flat, "not flat");
                     expect(p.apery_set().size() > 2, "more than two Apery monomials");
                     expect(p.minimal_monomials().size() == 3, "three minimal monomials");
                 }});
    f.push_back({"flat/not-flat-N-over-2-3", [] {
                     const auto p = make_algebra({2, 3}, {1});
                     expect_eq(p.apery_set().exponents, {0, 1}, "Apery set");
                     const auto v = is_flat(p);
                     expect(!v.is_flat && v.witness && v.witness->exponent == 3, "not flat, witness 3");
                     expect(p.representations(3) == std::vector<Representation>{{2, 1}, {3, 0}}, "u^2 u = u^3 u^0");
                     expect(oracle::unique_representation_scan(p) == Int{3}, "scan finds 3");
                 }});
    f.push_back({"flat/not-flat-5-8-9-over-9-15-21", [] {
                     const auto p = make_algebra({9, 15, 21}, {5, 8, 9});
                     expect(!is_flat(p).is_flat, "not flat");
                     expect(check_flat_intersection(p), "<5,8,9> meets 3Z in <9,15,21>");
                     const auto reps = p.representations(23);
                     expect(std::find(reps.begin(), reps.end(), Representation{18, 5}) != reps.end(), "u^18 u^5");
                     expect(std::find(reps.begin(), reps.end(), Representation{15, 8}) != reps.end(), "u^15 u^8");
                     expect(oracle::unique_representation_scan(p) == Int{23}, "scan finds 23");
                 }});
    f.push_back({"flat/not-flat-3-4-over-9-12", [] {
                     const auto p = make_algebra({9, 12}, {3, 4});
                     expect_eq(p.apery_set().exponents, {0, 3, 4, 6, 7, 8, 10, 11, 14}, "Apery set");
                     expect(!is_flat(p).is_flat, "not flat");
                     const std::vector<Int> r{9, 12};
                     expect(!check_flat_two_gen(r, 3, 4), "two-generator criterion");
                 }});
    f.push_back({"flat/not-flat-14-21-22-33-at-231", [] {
                     const auto p = make_algebra({14, 22}, {14, 21, 22, 33});
                     expect(!is_flat(p).is_flat, "not flat");
                     expect(p.representations(231).size() >= 2, "231 has two representations");
                     const auto facts = oracle::all_factorizations(p, 231);
                     expect(std::find(facts.begin(), facts.end(), oracle::Factorization{210, {1, 0}}) != facts.end(),
                            "(u^14)^15 u^21");
                     expect(std::find(facts.begin(), facts.end(), oracle::Factorization{198, {0, 1}}) != facts.end(),
                            "(u^22)^9 u^33");
                 }});

    // rectangles
    f.push_back({"rectangle/2-3-over-12", [] {
                     const auto sizes = rectangle_sizes(make_algebra({12}, {2, 3}));
                     expect(sizes == std::vector<std::vector<Int>>{{3, 4}, {6, 2}}, "4x3 and 2x6 rectangles");
                     expect(oracle::rectangle_by_exhaustion(make_algebra({12}, {2, 3})) == sizes, "oracle agrees");
                 }});
    f.push_back({"rectangle/14-21-22-33-over-22", [] {
                     const auto p = make_algebra({22}, {14, 21, 22, 33});
                     expect(is_flat(p).is_flat && p.apery_set().size() == 22, "flat with 22 Apery monomials");
                     expect(find_rectangles(p).empty(), "not rectangular");
                     expect(oracle::rectangle_by_exhaustion(p).empty(), "oracle: not rectangular");
                 }});
    f.push_back({"rectangle/5-6-9-over-6", [] {
                     const auto rects = find_rectangles(make_algebra({6}, {5, 6, 9}));
                     expect(rects.size() == 1, "one rectangle");
                     expect_eq(rects[0].minimal_monomials, {5, 9}, "minimal monomials");
                     expect_eq(rects[0].sizes, {3, 2}, "{1,u^9} x {1,u^5,u^10}");
                 }});
    f.push_back({"rectangle/3-5-7-over-17-19", [] {
                     const auto p = make_algebra({17, 19}, {3, 5, 7});
                     expect_eq(p.apery_set().exponents, {0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 21}, "Apery set");
                     expect(!is_flat(p).is_flat, "not flat");
                     expect(rectangle_sizes(p) == std::vector<std::vector<Int>>{{4, 2, 2}}, "4x2x2 rectangle");
                 }});
    f.push_back({"rectangle/2-3-over-5", [] {
                     const auto p = make_algebra({5}, {2, 3});
                     expect_eq(p.apery_set().exponents, {0, 2, 3, 4, 6}, "Apery set");
                     expect(find_rectangles(p).empty(), "not a rectangle");
                 }});
    f.push_back({"rectangle/2-3-over-3", [] { expect(!find_rectangles(make_algebra({3}, {2, 3})).empty(), "rectangular"); }});
    f.push_back({"rectangle/14-21-22-33-rectangular", [] {
                     expect(rectangle_sizes(make_algebra({14, 22}, {14, 21, 22, 33})) == std::vector<std::vector<Int>>{{2, 2}},
                            "{1,u^21} x {1,u^33}");
                 }});
    f.push_back({"rectangle/7S-5T-no-r", [] {
                     const auto g = NumericalSemigroup::from_integers({14, 15, 20, 21});
                     const Int bound = g.conductor() + 14 * 15 * 20 * 21 / 420;
                     for (Int r = 1; r <= bound; ++r) {
                         if (!g.member(r)) continue;
                         expect(find_rectangles(make_algebra({r}, {14, 15, 20, 21})).empty(),
                                "rectangular over <" + std::to_string(r) + ">");
                     }
                 }});

    // matrices
    f.push_back({"matrix/32-35-38-44-48-56", [] {
                     const auto p = make_algebra({32, 48}, {32, 35, 38, 44, 48, 56});
                     const auto rects = find_rectangles(p);
                     expect(rects.size() == 1 && rects[0].sizes == std::vector<Int>{2, 2, 2, 2}, "2x2x2x2 rectangle");
                     const auto b = beta_matrix(p, rects[0]);
                     expect(b.matrix == IntMatrix{{2, -1, 0, 0}, {0, 2, -1, 0}, {0, 0, 2, -1}, {0, 0, 0, 2}}, "matrix");
                     expect_eq(b.t, {32, 32, 32, 112}, "t");
                 }});
    f.push_back({"matrix/16-24-31-46-44", [] {
                     const auto p = make_algebra({16, 24}, {16, 24, 31, 46, 44});
                     const auto rects = find_rectangles(p);
                     expect(rects.size() == 1 && rects[0].sizes == std::vector<Int>{2, 2, 2}, "2x2x2 rectangle");
                     const auto b = beta_matrix(p, rects[0]);
                     // listed order 31, 46, 44 is position 0, 2, 1 of the ascending order
                     const std::vector<std::size_t> listed{0, 2, 1};
                     expect(b.matrix.permuted(listed) == IntMatrix{{2, -1, 0}, {0, 2, -1}, {0, 0, 2}}, "matrix");
                     expect_eq(std::vector<Int>{b.t[0], b.t[2], b.t[1]}, {16, 48, 88}, "t");
                     expect(b.det == 8, "det 8");
                     expect(triangularizable(b.matrix.permuted(listed)) == std::vector<std::size_t>{0, 1, 2}, "triangular");
                     const auto rep = classify(p);
                     expect(rep.ci == CiVerdict::CI && rep.fired(Rule::ThmMain), "CI via THM_MAIN");
                 }});
    f.push_back({"matrix/singular-3-5-7", [] {
                     const IntMatrix m{{4, -1, -1}, {-1, 2, -1}, {-3, -1, 2}};
                     expect_eq(m.apply({3, 5, 7}), {0, 0, 0}, "relation");
                     expect(det_and_adjugate(m).det == 0, "singular");
                     expect(!triangularizable(m), "not triangularizable");
                 }});
    f.push_back({"matrix/2n-family-n3-a1", [] {
                     const auto rep = classify(make_algebra({8}, {8, 9, 10, 12}));
                     expect(rep.ci == CiVerdict::CI, "CI");
                     expect(rep.rectangles.size() == 1 && rep.rectangles[0].matrix, "one flat rectangle");
                     const auto& b = *rep.rectangles[0].matrix;
                     expect(b.matrix == IntMatrix{{2, -1, 0}, {0, 2, -1}, {0, 0, 2}}, "bidiagonal");
                     expect_eq(b.t, {8, 8, 24}, "t");
                 }});

    // classification
    f.push_back({"classify/not-flat-N-over-2-3", [] {
                     const auto rep = classify(make_algebra({2, 3}, {1}));
                     expect(rep.ci == CiVerdict::NotCI && rep.fired(Rule::NotFlat), "NOT_CI");
                 }});
    f.push_back({"classify/unknown-14-21-22-33-over-22", [] {
                     const auto rep = classify(make_algebra({22}, {14, 21, 22, 33}));
                     expect(rep.ci == CiVerdict::Unknown && rep.flat.is_flat && !rep.rectangular(), "UNKNOWN");
                 }});
    f.push_back({"classify/bresinsky-14-21-15-20", [] {
                     const auto data = bresinsky_relation_search({14, 21, 15, 20});
                     expect(data.relation.has_value(), "relation found");
                     expect(data.relation->alpha == std::array<Int, 4>{1, 1, 1, 1}, "14 + 21 = 15 + 20");
                 }});
    f.push_back({"classify/4-a-b-parity", [] {
                     // a = 6, b = 7: rectangular; a = 5, b = 7: not
                     expect(!find_rectangles(make_algebra({4}, {4, 6, 7})).empty(), "<4,6,7> over <4>");
                     expect(find_rectangles(make_algebra({4}, {4, 5, 7})).empty(), "<4,5,7> over <4>");
                 }});
    return f;
}

inline FixtureResult run(const Fixture& fx) {
    FixtureResult r{fx.label, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        fx.body();
        r.passed = true;
    } catch (const std::exception& e) {
        r.message = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::vector<FixtureResult> run_all(const std::string& filter = {}) {
    std::vector<FixtureResult> out;
    for (const auto& fx : all()) {
        if (!filter.empty() && fx.label.find(filter) == std::string::npos) continue;
        out.push_back(run(fx));
    }
    return out;
}

}  // namespace nsalg::fixtures
