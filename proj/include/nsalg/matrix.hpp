#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace nsalg {

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) : n_(rows.size()), data_() {
        for (const auto& row : rows) {
            if (row.size() != n_) throw Error(ErrorCode::PreconditionFailed, "matrix is not square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::vector<std::vector<Int>> rows() const {
        std::vector<std::vector<Int>> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i].assign(data_.begin() + i * n_, data_.begin() + (i + 1) * n_);
        return out;
    }

    /// Simultaneous row/column permutation: result(a, b) = this(perm[a], perm[b]).
    IntMatrix permuted(const std::vector<std::size_t>& perm) const {
        IntMatrix out(n_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) out(a, b) = (*this)(perm[a], perm[b]);
        }
        return out;
    }

    IntMatrix minor(std::size_t row, std::size_t col) const {
        IntMatrix out(n_ - 1);
        for (std::size_t i = 0, r = 0; i < n_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, c = 0; j < n_; ++j) {
                if (j == col) continue;
                out(r, c++) = (*this)(i, j);
            }
            ++r;
        }
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                for (std::size_t j = 0; j < a.n_; ++j) {
                    out(i, j) = detail::checked_add(out(i, j), detail::checked_mul(a(i, k), b(k, j)));
                }
            }
        }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        std::vector<Int> out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) out[i] = detail::checked_add(out[i], detail::checked_mul((*this)(i, j), v[j]));
        }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> data_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
inline Int determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    }
    auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
    int sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    const __int128 det = sign * at(n - 1, n - 1);
    if (det > std::numeric_limits<Int>::max() || det < std::numeric_limits<Int>::min()) {
        throw Error(ErrorCode::Overflow, "determinant does not fit in 64 bits");
    }
    return static_cast<Int>(det);
}

struct DetAdjugate {
    Int det = 0;
    IntMatrix adjugate;
};

/// Exact determinant and adjugate; M * adj(M) = det(M) * I is verified.
inline DetAdjugate det_and_adjugate(const IntMatrix& m) {
    const std::size_t n = m.size();
    DetAdjugate out{determinant(m), IntMatrix(n)};
    if (n == 1) {
        out.adjugate(0, 0) = 1;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Int cof = determinant(m.minor(i, j));
                out.adjugate(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
            }
        }
    }
    IntMatrix scaled = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = out.det;
    if (m * out.adjugate != scaled) throw Error(ErrorCode::InternalInconsistency, "M * adj(M) != det(M) * I");
    return out;
}

}  // namespace nsalg
