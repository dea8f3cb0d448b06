#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nsalg/nsalg.hpp"

namespace nsalg_test {

using nsalg::Int;

// Sums of generators up to limit, by plain reachability; no semigroup class.
inline std::vector<bool> reachable(const std::vector<Int>& gens, Int limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
    in[0] = true;
    for (Int x = 1; x <= limit; ++x) {
        for (Int g : gens) {
            if (g <= x && in[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return in;
}

inline const std::vector<nsalg::AlgebraPair>& corpus_pairs() {
    static const std::vector<nsalg::AlgebraPair> pairs = [] {
        std::vector<nsalg::AlgebraPair> out;
        for (const auto& e : nsalg::generate_corpus(nsalg::kDefaultCorpusSeed, 500)) {
            out.push_back(nsalg::make_algebra(e.coefficient, e.extension));
        }
        return out;
    }();
    return pairs;
}

inline std::vector<Int> two_power_family(Int n, Int a) {
    const Int base = Int{1} << n;
    std::vector<Int> gens{base};
    for (Int k = 0; k < n; ++k) gens.push_back(base + (Int{1} << k) * a);
    return gens;
}

// Apery elements of <gens> with respect to m, by definition.
inline std::vector<Int> apery_wrt(const std::vector<Int>& gens, Int m) {
    const auto s = nsalg::NumericalSemigroup::from_integers(gens);
    std::vector<Int> out;
    for (Int x = 0; x < s.conductor() + m; ++x) {
        if (s.member(x) && !s.member(x - m)) out.push_back(x);
    }
    return out;
}

struct Gluing {
    std::vector<Int> s, t;
    Int p, q;
};

inline std::vector<Gluing> generated_gluings(std::size_t count) {
    const std::vector<std::vector<Int>> bases{{2, 3}, {3, 4}, {3, 5}, {2, 5}, {4, 5, 6}, {3, 4, 5}, {5, 7}, {4, 6, 7}, {1}};
    std::vector<Gluing> all;
    for (const auto& sg : bases) {
        for (const auto& tg : bases) {
            const auto s = nsalg::NumericalSemigroup::from_integers(sg);
            const auto t = nsalg::NumericalSemigroup::from_integers(tg);
            for (Int p = 2; p <= 16; ++p) {
                for (Int q = 2; q <= 16; ++q) {
                    if (std::gcd(p, q) != 1 || !s.member(q) || !t.member(p)) continue;
                    const auto& ms = s.minimal_generators();
                    const auto& mt = t.minimal_generators();
                    if (std::find(ms.begin(), ms.end(), q) != ms.end() || std::find(mt.begin(), mt.end(), p) != mt.end()) continue;
                    all.push_back({sg, tg, p, q});
                }
            }
        }
    }
    std::mt19937_64 rng(nsalg::kDefaultCorpusSeed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, all.size()));
    return all;
}

}  // namespace nsalg_test
