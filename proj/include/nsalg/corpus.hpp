#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace nsalg {

/// Seed of the default random corpus used by the acceptance and property suites.
inline constexpr std::uint64_t kDefaultCorpusSeed = 20'170'601;

struct CorpusEntry {
    std::vector<Int> coefficient;
    std::vector<Int> extension;
};

/// Random pairs with C inside E by construction: 1-4 extension generators in
/// [2, max_gen]; 1-4 coefficient generators, each a small multiple of one
/// extension generator, sometimes plus a second one.
inline std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, Int max_gen = 40) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
    std::vector<CorpusEntry> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        CorpusEntry e;
        const Int n_ext = uniform(1, 4);
        for (Int i = 0; i < n_ext; ++i) e.extension.push_back(uniform(2, max_gen));
        const Int n_coeff = uniform(1, 4);
        for (Int i = 0; i < n_coeff; ++i) {
            auto pick = [&] { return e.extension[static_cast<std::size_t>(uniform(0, n_ext - 1))]; };
            Int g = pick() * uniform(1, 3);
            if (uniform(0, 2) == 0) g += pick();
            e.coefficient.push_back(g);
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace nsalg
