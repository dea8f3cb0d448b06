#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "semigroup.hpp"

namespace nsalg {

/// Apery exponents of a pair on the extension's integer scale.
struct AperySet {
    std::vector<Int> exponents;  // ascending, starts with 0
    Int bound_used = 0;          // no Apery exponent is >= this

    std::size_t size() const noexcept { return exponents.size(); }
    Int max() const noexcept { return exponents.back(); }
    bool contains(Int w) const { return std::binary_search(exponents.begin(), exponents.end(), w); }
};

/// s = coefficient + apery with the coefficient in C and apery an Apery exponent.
struct Representation {
    Int coefficient = 0;
    Int apery = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

struct FlatWitness {
    Int exponent = 0;
    Representation first;
    Representation second;
};

struct FlatnessVerdict {
    bool is_flat = false;
    Int apery_count = 0;
    Int expected_count = 0;  // d / d'
    std::optional<FlatWitness> witness;
};

/// A numerical semigroup algebra R'/R placed on one integer variable.
///
/// The coefficient semigroup S lives in the variable u, the extension S' in v,
/// and u = v^t. Both are brought to a common integer scale: C is the integer
/// model of t*S and E that of S'. All exponents reported by this class are on
/// that common scale; multiply by 1/common_scale() to recover v-exponents.
class AlgebraPair {
public:
    static AlgebraPair make(std::span<const Rat> coefficient_gens, std::span<const Rat> extension_gens,
                            const Rat& scale_t = Rat(1)) {
        if (scale_t.num() <= 0) throw Error(ErrorCode::NonPositive, "scale t = " + scale_t.str() + " is not positive");
        auto coefficient = NumericalSemigroup::normalize(coefficient_gens);
        auto extension = NumericalSemigroup::normalize(extension_gens);

        std::vector<Rat> scaled_coeff;
        Int common = 1;
        for (const Rat& g : coefficient_gens) {
            scaled_coeff.push_back(g * scale_t);
            common = detail::checked_lcm(common, scaled_coeff.back().den());
        }
        for (const Rat& h : extension_gens) common = detail::checked_lcm(common, h.den());

        std::vector<Int> c_gens;
        std::vector<Int> e_gens;
        for (const Rat& g : scaled_coeff) c_gens.push_back((g * Rat(common)).num());
        for (const Rat& h : extension_gens) e_gens.push_back((h * Rat(common)).num());
        auto c = NumericalSemigroup::from_integers(c_gens);
        auto e = NumericalSemigroup::from_integers(e_gens);
        for (Int g : c.minimal_generators()) {
            if (!e.member(g)) {
                throw Error(ErrorCode::NotSubalgebra, "coefficient generator " + std::to_string(g) +
                                                          " (common scale) is not in the extension semigroup");
            }
        }
        return AlgebraPair(std::move(coefficient), std::move(extension), scale_t, common, std::move(c), std::move(e));
    }

    static AlgebraPair make(std::initializer_list<Rat> coefficient_gens, std::initializer_list<Rat> extension_gens,
                            const Rat& scale_t = Rat(1)) {
        return make(std::span<const Rat>(coefficient_gens.begin(), coefficient_gens.size()),
                    std::span<const Rat>(extension_gens.begin(), extension_gens.size()), scale_t);
    }

    const NumericalSemigroup& coefficient() const noexcept { return coefficient_; }
    const NumericalSemigroup& extension() const noexcept { return extension_; }
    const Rat& scale_t() const noexcept { return scale_t_; }
    Int common_scale() const noexcept { return common_scale_; }
    /// Integer model of t*S.
    const NumericalSemigroup& C() const noexcept { return c_; }
    /// Integer model of S'.
    const NumericalSemigroup& E() const noexcept { return e_; }
    Int d() const noexcept { return c_.content(); }
    Int d_prime() const noexcept { return e_.content(); }

    const AperySet& apery_set() const noexcept { return apery_; }
    const std::vector<Int>& minimal_monomials() const noexcept { return minimal_; }

    bool is_apery(Int s) const noexcept {
        if (!e_.member(s)) return false;
        for (Int g : c_.minimal_generators()) {
            if (e_.member(s - g)) return false;
        }
        return true;
    }

    /// All (s0, w) with s0 in C, w Apery and s0 + w = s; ascending in s0.
    std::vector<Representation> representations(Int s) const {
        if (!e_.member(s)) throw Error(ErrorCode::NotMember, std::to_string(s) + " is not in the extension semigroup");
        std::vector<Representation> out;
        for (auto it = apery_.exponents.rbegin(); it != apery_.exponents.rend(); ++it) {
            if (*it <= s && c_.member(s - *it)) out.push_back({s - *it, *it});
        }
        return out;
    }

    /// Pairwise non-negative differences of Apery exponents, ascending.
    std::vector<Int> delta_set() const {
        std::vector<Int> out;
        const auto& a = apery_.exponents;
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) out.push_back(a[i] - a[j]);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    AlgebraPair(NumericalSemigroup coefficient, NumericalSemigroup extension, Rat scale_t, Int common,
                NumericalSemigroup c, NumericalSemigroup e)
        : coefficient_(std::move(coefficient)),
          extension_(std::move(extension)),
          scale_t_(scale_t),
          common_scale_(common),
          c_(std::move(c)),
          e_(std::move(e)) {
        build_apery();
        build_minimal();
    }

    // An s >= conductor(E) + m(C) always has s - m(C) in E, so the scan below
    // is complete. Divisibility by any nonzero m in C implies divisibility by
    // one minimal generator of C (the rest of m lies in C, hence in E), which
    // is why only the generators are tested.
    void build_apery() {
        apery_.bound_used = e_.conductor() + c_.multiplicity();
        for (Int s = 0; s < apery_.bound_used; s += d_prime()) {
            if (is_apery(s)) apery_.exponents.push_back(s);
        }
    }

    void build_minimal() {
        for (Int s : apery_.exponents) {
            if (s == 0) continue;
            bool decomposable = false;
            for (Int a = d_prime(); 2 * a <= s && !decomposable; a += d_prime()) {
                decomposable = e_.member(a) && e_.member(s - a);
            }
            if (!decomposable) minimal_.push_back(s);
        }
    }

    NumericalSemigroup coefficient_;
    NumericalSemigroup extension_;
    Rat scale_t_;
    Int common_scale_;
    NumericalSemigroup c_;
    NumericalSemigroup e_;
    AperySet apery_;
    std::vector<Int> minimal_;
};

inline std::vector<Rat> to_rats(std::span<const Int> values) { return {values.begin(), values.end()}; }

/// Convenience for integer generator lists on a shared variable.
inline AlgebraPair make_algebra(std::span<const Int> coefficient_gens, std::span<const Int> extension_gens) {
    const auto c = to_rats(coefficient_gens);
    const auto e = to_rats(extension_gens);
    return AlgebraPair::make(c, e);
}

inline AlgebraPair make_algebra(std::initializer_list<Int> coefficient_gens, std::initializer_list<Int> extension_gens) {
    return make_algebra(std::span<const Int>(coefficient_gens.begin(), coefficient_gens.size()),
                     std::span<const Int>(extension_gens.begin(), extension_gens.size()));
}

/// Flatness by counting Apery exponents against d/d'. The difference-set
/// criterion is evaluated as well and must agree.
inline FlatnessVerdict is_flat(const AlgebraPair& pair) {
    const auto& a = pair.apery_set().exponents;
    const Int d = pair.d();
    FlatnessVerdict v;
    v.apery_count = static_cast<Int>(a.size());
    v.expected_count = d / pair.d_prime();
    v.is_flat = v.apery_count == v.expected_count;

    bool delta_ok = true;
    for (Int delta : pair.delta_set()) {
        if (delta % d == 0 && !pair.C().member(delta)) delta_ok = false;
    }
    if (delta_ok != v.is_flat) {
        throw Error(ErrorCode::InternalInconsistency, "Apery count and difference-set criteria disagree");
    }
    if (v.is_flat) return v;

    // two congruent Apery exponents, smallest larger one first, then smallest smaller one
    std::optional<std::pair<Int, Int>> chosen;
    for (std::size_t i = 0; i < a.size() && !chosen; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if ((a[i] - a[j]) % d == 0) {
                chosen = {a[i], a[j]};
                break;
            }
        }
    }
    if (!chosen) throw Error(ErrorCode::InternalInconsistency, "non-flat pair without congruent Apery exponents");
    const auto [w1, w2] = *chosen;
    const Int diff = w1 - w2;
    for (Int s1 = 0; s1 <= pair.C().conductor(); s1 += d) {
        if (pair.C().member(s1) && pair.C().member(s1 + diff)) {
            v.witness = FlatWitness{s1 + w1, {s1, w1}, {s1 + diff, w2}};
            return v;
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "no coefficient found for flatness witness");
}

/// C = E intersected with the multiples of d, checked below conductor(C)
/// (above it both sides hold every multiple of d). Necessary for flatness.
inline bool check_flat_intersection(const AlgebraPair& pair) {
    const Int d = pair.d();
    for (Int x = 0; x < pair.C().conductor(); x += d) {
        if (pair.E().member(x) != pair.C().member(x)) return false;
    }
    return true;
}

/// Flatness of R[[u^{s/m}]] over R for R integral with content 1 and
/// gcd(s, m) = 1: flat iff s is in R. Cross-checked against is_flat.
inline bool check_flat_root(const NumericalSemigroup& r, Int s, Int m) {
    if (!r.is_integral() || r.content() != 1) {
        throw Error(ErrorCode::PreconditionFailed, "coefficient semigroup must be integral with gcd 1");
    }
    if (s <= 0 || m <= 0 || std::gcd(s, m) != 1) throw Error(ErrorCode::PreconditionFailed, "need s, m > 0 coprime");
    const bool result = r.member(s);
    std::vector<Rat> ext = r.given_generators();
    ext.emplace_back(s, m);
    const auto pair = AlgebraPair::make(r.given_generators(), ext);
    if (is_flat(pair).is_flat != result) {
        throw Error(ErrorCode::InternalInconsistency, "root criterion disagrees with the Apery count");
    }
    return result;
}

/// Flatness of R[[u^{s1}, u^{s2}]] over R when log R lies in <s1, s2> and
/// gcd(s1, s2) = 1: flat iff log R is principal or equals <a1*s1, a2*s2>
/// with a1 | s2 and a2 | s1. Cross-checked against is_flat.
inline bool check_flat_two_gen(std::span<const Int> r_gens, Int s1, Int s2) {
    if (s1 <= 0 || s2 <= 0 || std::gcd(s1, s2) != 1) throw Error(ErrorCode::PreconditionFailed, "need s1, s2 > 0 coprime");
    const auto t = NumericalSemigroup::from_integers({s1, s2});
    const auto r = NumericalSemigroup::from_integers(r_gens);
    for (Int g : r.int_generators()) {
        if (!t.member(g)) throw Error(ErrorCode::PreconditionFailed, std::to_string(g) + " is not in <s1, s2>");
    }
    const auto& mins = r.minimal_generators();
    bool result = mins.size() == 1;
    if (mins.size() == 2) {
        auto fits = [&](Int x, Int y) {
            if (x % s1 != 0 || y % s2 != 0) return false;
            const Int a1 = x / s1;
            const Int a2 = y / s2;
            return s2 % a1 == 0 && s1 % a2 == 0;
        };
        result = fits(mins[0], mins[1]) || fits(mins[1], mins[0]);
    }
    std::vector<Int> ext(r_gens.begin(), r_gens.end());
    ext.push_back(s1);
    ext.push_back(s2);
    const auto pair = make_algebra(r_gens, ext);
    if (is_flat(pair).is_flat != result) {
        throw Error(ErrorCode::InternalInconsistency, "two-generator criterion disagrees with the Apery count");
    }
    return result;
}

/// Any two minimal generators of C lying in T = <minimal monomials> share
/// only the trivial divisor in T. Necessary for flatness.
inline bool common_divisor_condition(const AlgebraPair& pair) {
    const auto& mm = pair.minimal_monomials();
    if (mm.empty()) return true;
    const auto t = NumericalSemigroup::from_integers(mm);
    std::vector<Int> inside;
    for (Int g : pair.C().minimal_generators()) {
        if (t.member(g)) inside.push_back(g);
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
        const auto di = t.divisors_in(inside[i]);
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
            const auto dj = t.divisors_in(inside[j]);
            std::vector<Int> common;
            std::set_intersection(di.begin(), di.end(), dj.begin(), dj.end(), std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    }
    return true;
}

}  // namespace nsalg
