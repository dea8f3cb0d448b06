#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace nsalg {

/// A box {sum l_i * s_i : 0 <= l_i < beta_i} over the minimal monomials
/// s_1 < ... < s_n that maps bijectively onto the Apery set.
struct Rectangle {
    std::vector<Int> minimal_monomials;
    std::vector<Int> sizes;
    std::vector<Int> box;  // box[index(l)], first coordinate varies fastest

    std::size_t dimension() const noexcept { return sizes.size(); }

    std::size_t index(const std::vector<Int>& l) const {
        std::size_t idx = 0;
        for (std::size_t i = sizes.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(sizes[i]) + static_cast<std::size_t>(l[i]);
        return idx;
    }

    std::vector<Int> coordinates(std::size_t idx) const {
        std::vector<Int> l(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            l[i] = static_cast<Int>(idx % static_cast<std::size_t>(sizes[i]));
            idx /= static_cast<std::size_t>(sizes[i]);
        }
        return l;
    }

    /// Box coordinates of an exponent, if it lies in the box.
    std::optional<std::vector<Int>> decompose(Int w) const {
        for (std::size_t idx = 0; idx < box.size(); ++idx) {
            if (box[idx] == w) return coordinates(idx);
        }
        return std::nullopt;
    }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

namespace detail {

inline std::vector<Int> box_sums(const std::vector<Int>& gens, const std::vector<Int>& sizes) {
    std::vector<Int> box{0};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Int> next;
        next.reserve(box.size() * static_cast<std::size_t>(sizes[i]));
        for (Int l = 0; l < sizes[i]; ++l) {
            for (Int b : box) next.push_back(b + l * gens[i]);
        }
        box = std::move(next);
    }
    return box;
}

}  // namespace detail

/// Every rectangle structure on the Apery set of the pair, with sizes
/// reported against the minimal monomials in ascending order. Empty iff the
/// pair is not rectangular.
inline std::vector<Rectangle> find_rectangles(const AlgebraPair& pair) {
    const auto& apery = pair.apery_set();
    const auto& mm = pair.minimal_monomials();
    const Int count = static_cast<Int>(apery.size());
    if (mm.empty()) return {Rectangle{{}, {}, {0}}};

    // s_i itself must sit in the box, so beta_i >= 2; and l*s_i is Apery for l < beta_i
    std::vector<Int> run(mm.size());
    for (std::size_t i = 0; i < mm.size(); ++i) {
        Int k = 1;
        while (apery.contains(k * mm[i])) ++k;
        run[i] = k;
    }

    std::vector<Rectangle> out;
    std::vector<Int> sizes(mm.size());
    auto verify = [&] {
        auto box = detail::box_sums(mm, sizes);
        auto sorted = box;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != apery.exponents) return;
        out.push_back(Rectangle{mm, sizes, std::move(box)});
    };
    auto recurse = [&](auto& self, std::size_t i, Int remaining) -> void {
        if (i + 1 == mm.size()) {
            if (remaining >= 2 && remaining <= run[i]) {
                sizes[i] = remaining;
                verify();
            }
            return;
        }
        for (Int beta = 2; beta <= std::min(run[i], remaining); ++beta) {
            if (remaining % beta != 0) continue;
            sizes[i] = beta;
            self(self, i + 1, remaining / beta);
        }
    };
    recurse(recurse, 0, count);
    return out;
}

/// The integer matrix log_Y Z of a flat rectangle together with the
/// coefficient exponents t: M * s = t, M_ii = beta_i, M_ij = -beta_ij.
struct BetaMatrix {
    IntMatrix matrix;
    std::vector<Int> s;
    std::vector<Int> t;
    Int det = 0;
    IntMatrix adjugate;

    std::size_t n() const noexcept { return matrix.size(); }
};

/// Builds the matrix from the unique factorization of beta_i * s_i. Only
/// defined for flat pairs.
inline BetaMatrix beta_matrix(const AlgebraPair& pair, const Rectangle& rect) {
    if (!is_flat(pair).is_flat) throw Error(ErrorCode::NotFlat, "the matrix is only defined for flat pairs");
    const std::size_t n = rect.dimension();
    BetaMatrix b;
    b.matrix = IntMatrix(n);
    b.s = rect.minimal_monomials;
    b.t.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int x = detail::checked_mul(rect.sizes[i], rect.minimal_monomials[i]);
        const auto reps = pair.representations(x);
        if (reps.size() != 1) throw Error(ErrorCode::InternalInconsistency, "flat pair with non-unique representation");
        const auto l = rect.decompose(reps.front().apery);
        if (!l) throw Error(ErrorCode::InternalInconsistency, "Apery exponent outside the rectangle");
        if ((*l)[i] != 0) throw Error(ErrorCode::InternalInconsistency, "beta_ii != 0");
        if (!pair.C().member(reps.front().coefficient)) throw Error(ErrorCode::InternalInconsistency, "t_i not in C");
        for (std::size_t j = 0; j < n; ++j) b.matrix(i, j) = (i == j) ? rect.sizes[i] : -(*l)[j];
        b.t[i] = reps.front().coefficient;
    }
    if (b.matrix.apply(b.s) != b.t) throw Error(ErrorCode::InternalInconsistency, "M * s != t");
    auto da = det_and_adjugate(b.matrix);
    b.det = da.det;
    b.adjugate = std::move(da.adjugate);
    return b;
}

inline bool is_nonsingular(const BetaMatrix& b) noexcept { return b.det != 0; }

/// Checks the sign conclusion (det >= 0, adjugate >= 0) for a matrix with
/// positive diagonal, off-diagonal entries in (-M_jj, 0] and M * s >= 0.
inline bool lemma_matrix_check(const IntMatrix& m, const std::vector<Int>& s) {
    const std::size_t n = m.size();
    if (s.size() != n) throw Error(ErrorCode::PreconditionFailed, "vector length does not match matrix");
    for (Int v : s) {
        if (v <= 0) throw Error(ErrorCode::PreconditionFailed, "s must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) <= 0) throw Error(ErrorCode::PreconditionFailed, "diagonal entry not positive");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m(i, j) > 0 || -m(i, j) >= m(j, j)) {
                throw Error(ErrorCode::PreconditionFailed, "off-diagonal entry out of range");
            }
        }
    }
    const auto ms = m.apply(s);
    for (std::size_t i = 0; i < n; ++i) {
        if (ms[i] < 0) throw Error(ErrorCode::PreconditionFailed, "row " + std::to_string(i + 1) + " of M*s is negative");
    }
    const auto da = det_and_adjugate(m);
    if (da.det < 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (da.adjugate(i, j) < 0) return false;
        }
    }
    return true;
}

namespace detail {

inline bool upper_after(const IntMatrix& m, const std::vector<std::size_t>& perm) {
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (m(perm[a], perm[b]) != 0) return false;
        }
    }
    return true;
}

}  // namespace detail

/// A permutation p (new index a holds old index p[a]) making the
/// simultaneously permuted matrix upper triangular. Exhaustive in
/// lexicographic order for n <= 8; above that, a topological order of the
/// off-diagonal support graph, preferring small indices.
inline std::optional<std::vector<std::size_t>> triangularizable(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (n <= 8) {
        do {
            if (detail::upper_after(m, perm)) return perm;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }
    // upper triangular means every nonzero m(i, j), i != j, has i placed before j
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m(i, j) != 0) ++indegree[j];
        }
    }
    std::vector<bool> placed(n, false);
    perm.clear();
    while (perm.size() < n) {
        std::size_t next = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!placed[v] && indegree[v] == 0) {
                next = v;
                break;
            }
        }
        if (next == n) return std::nullopt;
        placed[next] = true;
        perm.push_back(next);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != next && m(next, j) != 0) --indegree[j];
        }
    }
    return perm;
}

inline std::optional<std::vector<std::size_t>> triangularizable(const BetaMatrix& b) { return triangularizable(b.matrix); }

}  // namespace nsalg
