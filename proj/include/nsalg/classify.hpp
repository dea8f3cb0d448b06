#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "rectangle.hpp"
#include "semigroup.hpp"

namespace nsalg {

enum class CiVerdict { CI, NotCI, Unknown };

constexpr std::string_view to_string(CiVerdict v) noexcept {
    switch (v) {
        case CiVerdict::CI: return "ci";
        case CiVerdict::NotCI: return "not_ci";
        case CiVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

/// Stable identifiers for the decision rules that can fire in classify().
enum class Rule {
    NotFlat,       // not flat, hence not a complete intersection
    NoRectangle,   // flat, Apery set is not a rectangle
    ThmMain,       // flat with a non-singular rectangle
    NLe1,          // at most one minimal monomial
    N2Triangular,  // two minimal monomials: the matrix is triangular
    Thm3Min,       // three minimal monomials: triangular after permutation
    N4Principal,   // four minimal monomials over a principal coefficient ring
    AllSingular,   // flat rectangular, every rectangle singular, no side rule
};

constexpr std::string_view to_string(Rule r) noexcept {
    switch (r) {
        case Rule::NotFlat: return "NOT_FLAT";
        case Rule::NoRectangle: return "NO_RECTANGLE";
        case Rule::ThmMain: return "THM_MAIN";
        case Rule::NLe1: return "N_LE_1";
        case Rule::N2Triangular: return "N2_TRIANGULAR";
        case Rule::Thm3Min: return "THM_3MIN";
        case Rule::N4Principal: return "N4_PRINCIPAL";
        case Rule::AllSingular: return "ALL_SINGULAR";
    }
    return "?";
}

constexpr std::string_view describe(Rule r) noexcept {
    switch (r) {
        case Rule::NotFlat: return "flatness is part of the complete intersection property";
        case Rule::NoRectangle: return "flat, but the Apery monomials do not form a rectangle";
        case Rule::ThmMain: return "flat with a non-singular rectangle => complete intersection";
        case Rule::NLe1: return "flat rectangular with at most one minimal monomial";
        case Rule::N2Triangular: return "flat rectangular with two minimal monomials: matrix is triangular";
        case Rule::Thm3Min: return "flat rectangular with three minimal monomials: triangular after permutation";
        case Rule::N4Principal: return "rectangular, four minimal monomials, principal coefficient ring <s> with s in <s_1..s_4>";
        case Rule::AllSingular: return "flat rectangular, all rectangles singular, no side criterion applies";
    }
    return "";
}

struct BresinskyRelation {
    std::array<std::size_t, 2> left{};
    std::array<std::size_t, 2> right{};
    std::array<Int, 4> alpha{};  // indexed like the generators
};

struct BresinskyData {
    std::array<Int, 4> c{};
    std::optional<BresinskyRelation> relation;
    bool symmetric = false;
    bool degenerate = false;  // some c_i == 1, i.e. a generator is not minimal
};

struct RectangleAnalysis {
    Rectangle rectangle;
    std::optional<BetaMatrix> matrix;  // flat pairs only
    std::optional<std::vector<std::size_t>> triangular_permutation;

    bool nonsingular() const noexcept { return matrix && is_nonsingular(*matrix); }
};

struct ClassificationReport {
    std::vector<Rat> coefficient;
    std::vector<Rat> extension;
    Rat scale_t;
    Int common_scale = 1;
    Int d = 1;
    Int d_prime = 1;
    AperySet apery;
    std::vector<Int> minimal_monomials;
    FlatnessVerdict flat;
    std::vector<RectangleAnalysis> rectangles;
    bool gorenstein_indicator = false;
    CiVerdict ci = CiVerdict::Unknown;
    std::vector<Rule> justification;
    std::string unknown_reason;
    std::optional<BresinskyData> bresinsky;

    bool rectangular() const noexcept { return !rectangles.empty(); }
    bool fired(Rule r) const { return std::find(justification.begin(), justification.end(), r) != justification.end(); }
};

/// Unique maximal Apery exponent under w <= w' iff w' - w in E.
inline bool gorenstein_indicator(const AlgebraPair& pair) {
    const auto& a = pair.apery_set().exponents;
    std::size_t maximal = 0;
    for (Int w : a) {
        bool dominated = false;
        for (Int v : a) {
            if (v != w && pair.E().member(v - w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) ++maximal;
    }
    return maximal == 1;
}

/// c_i = min{n >= 1 : n*s_i in <s_j : j != i>}.
inline std::array<Int, 4> bresinsky_c(const std::array<Int, 4>& gens) {
    for (Int g : gens) {
        if (g <= 0) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(g) + " is not positive");
    }
    std::array<Int, 4> c{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Int> others;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i) others.push_back(gens[j]);
        }
        const auto sub = NumericalSemigroup::from_integers(others);
        Int n = 1;
        while (!sub.member(detail::checked_mul(n, gens[i]))) ++n;
        c[i] = n;
    }
    return c;
}

/// Searches the three pairings {i,j} | {k,l} for
/// alpha_i s_i + alpha_j s_j = alpha_k s_k + alpha_l s_l with 0 < alpha < c.
inline BresinskyData bresinsky_relation_search(const std::array<Int, 4>& gens) {
    BresinskyData out;
    out.c = bresinsky_c(gens);
    out.symmetric = NumericalSemigroup::from_integers({gens[0], gens[1], gens[2], gens[3]}).is_symmetric();
    out.degenerate = std::find(out.c.begin(), out.c.end(), 1) != out.c.end();
    constexpr std::array<std::array<std::size_t, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& [i, j, k, l] : pairings) {
        for (Int ai = 1; ai < out.c[i]; ++ai) {
            for (Int aj = 1; aj < out.c[j]; ++aj) {
                const Int lhs = ai * gens[i] + aj * gens[j];
                for (Int ak = 1; ak < out.c[k] && ak * gens[k] < lhs; ++ak) {
                    const Int rest = lhs - ak * gens[k];
                    if (rest % gens[l] != 0) continue;
                    const Int al = rest / gens[l];
                    if (al <= 0 || al >= out.c[l]) continue;
                    BresinskyRelation rel;
                    rel.left = {i, j};
                    rel.right = {k, l};
                    rel.alpha[i] = ai;
                    rel.alpha[j] = aj;
                    rel.alpha[k] = ak;
                    rel.alpha[l] = al;
                    out.relation = rel;
                    return out;
                }
            }
        }
    }
    return out;
}

/// Apery set of pS + qT over <pq> against {p*w1 + q*w2} with w1 Apery in S
/// over <q> and w2 Apery in T over <p>. Gluing preconditions are enforced.
inline bool gluing_apery_product_check(const NumericalSemigroup& s, const NumericalSemigroup& t, Int p, Int q) {
    const auto glued = glue(s, t, p, q, GlueMode::Strict);
    const Int pq = detail::checked_mul(p, q);
    const auto whole = make_algebra(std::vector<Int>{pq}, glued.int_generators());
    const auto left = make_algebra(std::vector<Int>{q}, s.int_generators());
    const auto right = make_algebra(std::vector<Int>{p}, t.int_generators());
    std::vector<Int> product;
    for (Int w1 : left.apery_set().exponents) {
        for (Int w2 : right.apery_set().exponents) product.push_back(p * w1 + q * w2);
    }
    std::sort(product.begin(), product.end());
    return product == whole.apery_set().exponents;
}

/// Runs the decision chain:
///   not flat -> NOT_CI; flat without rectangle -> UNKNOWN;
///   a non-singular rectangle -> CI; n <= 3 -> CI (must coincide with the
///   previous rule); n = 4 over a principal <s> with s in <s_1..s_4> -> CI;
///   otherwise UNKNOWN.
inline ClassificationReport classify(const AlgebraPair& pair) {
    ClassificationReport r;
    r.coefficient = pair.coefficient().given_generators();
    r.extension = pair.extension().given_generators();
    r.scale_t = pair.scale_t();
    r.common_scale = pair.common_scale();
    r.d = pair.d();
    r.d_prime = pair.d_prime();
    r.apery = pair.apery_set();
    r.minimal_monomials = pair.minimal_monomials();
    r.flat = is_flat(pair);
    r.gorenstein_indicator = gorenstein_indicator(pair);
    for (auto& rect : find_rectangles(pair)) {
        RectangleAnalysis ra{std::move(rect), std::nullopt, std::nullopt};
        if (r.flat.is_flat) {
            ra.matrix = beta_matrix(pair, ra.rectangle);
            ra.triangular_permutation = triangularizable(*ra.matrix);
        }
        r.rectangles.push_back(std::move(ra));
    }
    const std::size_t n = r.minimal_monomials.size();
    if (n == 4) {
        r.bresinsky = bresinsky_relation_search({r.minimal_monomials[0], r.minimal_monomials[1],
                                                 r.minimal_monomials[2], r.minimal_monomials[3]});
    }

    if (!r.flat.is_flat) {
        r.ci = CiVerdict::NotCI;
        r.justification.push_back(Rule::NotFlat);
        return r;
    }
    if (r.rectangles.empty()) {
        r.ci = CiVerdict::Unknown;
        r.justification.push_back(Rule::NoRectangle);
        r.unknown_reason = "flat but not rectangular";
        return r;
    }
    const bool some_nonsingular =
        std::any_of(r.rectangles.begin(), r.rectangles.end(), [](const auto& ra) { return ra.nonsingular(); });
    if (some_nonsingular) r.justification.push_back(Rule::ThmMain);
    if (n <= 3) {
        r.justification.push_back(n <= 1 ? Rule::NLe1 : n == 2 ? Rule::N2Triangular : Rule::Thm3Min);
        if (!some_nonsingular) {
            throw Error(ErrorCode::InternalInconsistency, "flat rectangular pair with n <= 3 has no non-singular rectangle");
        }
    }
    if (n == 4 && pair.C().minimal_generators().size() == 1) {
        const auto generated = NumericalSemigroup::from_integers(r.minimal_monomials);
        if (generated.member(pair.C().minimal_generators().front())) r.justification.push_back(Rule::N4Principal);
    }
    if (!r.justification.empty()) {
        r.ci = CiVerdict::CI;
        return r;
    }
    r.ci = CiVerdict::Unknown;
    r.justification.push_back(Rule::AllSingular);
    r.unknown_reason = "every rectangle is singular and no side criterion applies (n = " + std::to_string(n) + ")";
    return r;
}

}  // namespace nsalg
