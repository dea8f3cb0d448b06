#pragma once

// Brute-force reference computations. Nothing here calls into the Apery,
// rectangle or representation code of the library; only semigroup
// membership is shared.

#include <algorithm>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"

namespace nsalg::oracle {

inline Int smallest_nonzero(const NumericalSemigroup& s) {
    Int x = 1;
    while (!s.member(x)) ++x;
    return x;
}

inline Int complete_bound(const AlgebraPair& pair) { return pair.E().conductor() + smallest_nonzero(pair.C()); }

/// s in E is Apery iff s - m is outside E for every nonzero m in C, m <= s.
inline std::vector<Int> apery_by_definition(const AlgebraPair& pair, Int bound) {
    if (bound < complete_bound(pair)) {
        throw Error(ErrorCode::BoundTooSmall, "bound " + std::to_string(bound) + " < " + std::to_string(complete_bound(pair)));
    }
    std::vector<Int> out;
    for (Int s = 0; s <= bound; ++s) {
        if (!pair.E().member(s)) continue;
        bool divisible = false;
        for (Int m = 1; m <= s && !divisible; ++m) {
            divisible = pair.C().member(m) && pair.E().member(s - m);
        }
        if (!divisible) out.push_back(s);
    }
    return out;
}

inline std::vector<Int> apery_by_definition(const AlgebraPair& pair) { return apery_by_definition(pair, complete_bound(pair)); }

inline std::vector<Int> minimal_monomials(const AlgebraPair& pair) {
    std::vector<Int> out;
    for (Int a : apery_by_definition(pair)) {
        if (a == 0) continue;
        bool split = false;
        for (Int x = 1; x < a && !split; ++x) split = pair.E().member(x) && pair.E().member(a - x);
        if (!split) out.push_back(a);
    }
    return out;
}

struct Factorization {
    Int coefficient = 0;
    std::vector<Int> exponents;  // one per minimal monomial, ascending monomials

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every s = s0 + sum a_i s_i with s0 in C and a_i >= 0.
inline std::vector<Factorization> all_factorizations(const AlgebraPair& pair, Int s) {
    if (!pair.E().member(s)) throw Error(ErrorCode::NotMember, std::to_string(s) + " is not in the extension semigroup");
    const auto mm = minimal_monomials(pair);
    std::vector<Factorization> out;
    std::vector<Int> a(mm.size(), 0);
    auto rec = [&](auto& self, std::size_t i, Int remaining) -> void {
        if (i == mm.size()) {
            if (pair.C().member(remaining)) out.push_back({remaining, a});
            return;
        }
        for (Int k = 0; k * mm[i] <= remaining; ++k) {
            a[i] = k;
            self(self, i + 1, remaining - k * mm[i]);
        }
        a[i] = 0;
    };
    rec(rec, 0, s);
    return out;
}

/// Smallest exponent with two or more representations, scanning up to
/// conductor(C) + max Apery (a complete bound), or nullopt if none.
inline std::optional<Int> unique_representation_scan(const AlgebraPair& pair) {
    const auto apery = apery_by_definition(pair);
    const Int bound = pair.C().conductor() + apery.back();
    for (Int s = 0; s <= bound; ++s) {
        if (!pair.E().member(s)) continue;
        int count = 0;
        for (Int w : apery) {
            if (w <= s && pair.C().member(s - w)) ++count;
        }
        if (count >= 2) return s;
    }
    return std::nullopt;
}

inline constexpr std::size_t kMaxExhaustiveApery = 100'000;

/// Tries every ordered size tuple (entries >= 2, product |A|) without pruning.
inline std::vector<std::vector<Int>> rectangle_by_exhaustion(const AlgebraPair& pair) {
    const auto apery = apery_by_definition(pair);
    if (apery.size() > kMaxExhaustiveApery) throw Error(ErrorCode::TooLarge, "Apery set too large for exhaustion");
    const auto mm = minimal_monomials(pair);
    const Int count = static_cast<Int>(apery.size());
    std::vector<std::vector<Int>> out;
    if (mm.empty()) {
        if (count == 1) out.push_back({});
        return out;
    }
    std::vector<Int> sizes(mm.size());
    auto check = [&] {
        std::vector<Int> box;
        std::vector<Int> idx(mm.size(), 0);
        while (true) {
            Int sum = 0;
            for (std::size_t i = 0; i < mm.size(); ++i) sum += idx[i] * mm[i];
            box.push_back(sum);
            std::size_t i = 0;
            while (i < mm.size() && ++idx[i] == sizes[i]) idx[i++] = 0;
            if (i == mm.size()) break;
        }
        std::sort(box.begin(), box.end());
        if (std::adjacent_find(box.begin(), box.end()) != box.end()) return;
        for (Int b : box) {
            if (!std::binary_search(apery.begin(), apery.end(), b)) return;
        }
        out.push_back(sizes);
    };
    auto rec = [&](auto& self, std::size_t i, Int remaining) -> void {
        if (i + 1 == mm.size()) {
            if (remaining >= 2) {
                sizes[i] = remaining;
                check();
            }
            return;
        }
        for (Int beta = 2; beta <= remaining; ++beta) {
            if (remaining % beta != 0) continue;
            sizes[i] = beta;
            self(self, i + 1, remaining / beta);
        }
    };
    rec(rec, 0, count);
    return out;
}

}  // namespace nsalg::oracle
