#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace nsalg {

/// Upper limit on the membership table, in entries of the content-divided copy.
inline constexpr Int kMaxTableSize = 50'000'000;

/// A monoid generated by finitely many positive rationals.
///
/// The semigroup is stored through its integer model: every given generator is
/// multiplied by `scale` (the lcm of the denominators) so that all generators
/// become positive integers. The content (gcd of the integer generators) is
/// kept rather than divided out, because relative computations need it.
///
/// Membership is answered from a table over the content-divided copy that
/// extends up to its conductor; past that point every multiple of the content
/// is a member.
class NumericalSemigroup {
public:
    /// Builds the integer model from rational generators.
    static NumericalSemigroup normalize(std::span<const Rat> generators) {
        if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
        Int lcm_den = 1;
        for (const Rat& g : generators) {
            if (g.num() <= 0) throw Error(ErrorCode::NonPositive, "generator " + g.str() + " is not positive");
            lcm_den = detail::checked_lcm(lcm_den, g.den());
        }
        std::vector<Int> ints;
        ints.reserve(generators.size());
        for (const Rat& g : generators) ints.push_back(detail::checked_mul(g.num(), lcm_den / g.den()));
        NumericalSemigroup s(std::vector<Rat>(generators.begin(), generators.end()), Rat(lcm_den), std::move(ints));
        return s;
    }

    static NumericalSemigroup normalize(std::initializer_list<Rat> generators) {
        return normalize(std::span<const Rat>(generators.begin(), generators.size()));
    }

    static NumericalSemigroup from_integers(std::span<const Int> generators) {
        std::vector<Rat> rats(generators.begin(), generators.end());
        return normalize(rats);
    }

    static NumericalSemigroup from_integers(std::initializer_list<Int> generators) {
        return from_integers(std::span<const Int>(generators.begin(), generators.size()));
    }

    const std::vector<Rat>& given_generators() const noexcept { return given_; }
    const Rat& scale() const noexcept { return scale_; }
    const std::vector<Int>& int_generators() const noexcept { return ints_; }
    Int content() const noexcept { return content_; }
    const std::vector<Int>& minimal_generators() const noexcept { return minimal_; }
    Int conductor() const noexcept { return conductor_; }
    /// Smallest nonzero element of the integer model.
    Int multiplicity() const noexcept { return minimal_.front(); }
    bool is_integral() const noexcept { return scale_ == Rat(1); }

    /// Membership of an element of the integer model.
    bool member(Int x) const noexcept {
        if (x < 0 || x % content_ != 0) return false;
        const Int y = x / content_;
        if (y >= reduced_conductor_) return true;
        return table_[static_cast<std::size_t>(y)] != 0;
    }

    /// Membership of a rational on the scale of the given generators.
    bool contains(const Rat& x) const {
        if (x.num() < 0) return false;
        const Rat scaled = x * scale_;
        if (!scaled.is_integer()) return false;
        return member(scaled.num());
    }

    /// All t in S with s - t in S, ascending. Always holds 0 and s.
    std::vector<Int> divisors_in(Int s) const {
        if (!member(s)) throw Error(ErrorCode::NotMember, std::to_string(s) + " is not in the semigroup");
        std::vector<Int> out;
        for (Int t = 0; t <= s; t += content_) {
            if (member(t) && member(s - t)) out.push_back(t);
        }
        return out;
    }

    /// Symmetry of the content-divided copy: for 0 <= x <= F exactly one of
    /// x and F - x is a member, where F is the Frobenius number.
    bool is_symmetric() const noexcept {
        const Int frobenius = reduced_conductor_ - 1;
        for (Int x = 0; x <= frobenius; ++x) {
            const bool a = table_[static_cast<std::size_t>(x)] != 0;
            const bool b = table_[static_cast<std::size_t>(frobenius - x)] != 0;
            if (a == b) return false;
        }
        return true;
    }

    std::string str() const {
        std::string out = "<";
        for (std::size_t i = 0; i < given_.size(); ++i) {
            if (i) out += ",";
            out += given_[i].str();
        }
        return out + ">";
    }

private:
    NumericalSemigroup(std::vector<Rat> given, Rat scale, std::vector<Int> ints)
        : given_(std::move(given)), scale_(scale), ints_(std::move(ints)) {
        content_ = 0;
        for (Int g : ints_) content_ = std::gcd(content_, g);
        build_table();
        build_minimal();
    }

    void build_table() {
        std::vector<Int> reduced;
        for (Int g : ints_) reduced.push_back(g / content_);
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        const Int m = reduced.front();
        table_.assign(1, 1);
        Int run = 1;
        if (m == 1) {
            reduced_conductor_ = 0;
            table_.clear();
            conductor_ = 0;
            return;
        }
        for (Int x = 1;; ++x) {
            if (x > kMaxTableSize) throw Error(ErrorCode::TooLarge, "membership table exceeds limit");
            bool in = false;
            for (Int g : reduced) {
                if (g > x) break;
                if (table_[static_cast<std::size_t>(x - g)]) {
                    in = true;
                    break;
                }
            }
            table_.push_back(in ? 1 : 0);
            run = in ? run + 1 : 0;
            if (run == m) {
                reduced_conductor_ = x - m + 1;
                break;
            }
        }
        table_.resize(static_cast<std::size_t>(reduced_conductor_));
        conductor_ = reduced_conductor_ * content_;
    }

    void build_minimal() {
        std::vector<Int> sorted = ints_;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Int g : sorted) {
            bool decomposable = false;
            for (Int a = content_; 2 * a <= g && !decomposable; a += content_) {
                decomposable = member(a) && member(g - a);
            }
            if (!decomposable) minimal_.push_back(g);
        }
    }

    std::vector<Rat> given_;
    Rat scale_;
    std::vector<Int> ints_;
    Int content_ = 1;
    std::vector<Int> minimal_;
    Int conductor_ = 0;
    Int reduced_conductor_ = 0;
    std::vector<std::uint8_t> table_;
};

enum class GlueMode { Strict, Relaxed };

/// p*S + q*T. Strict mode enforces the gluing side conditions (q in S,
/// p in T, gcd(p, q) = 1, p and q not minimal generators of T and S);
/// relaxed mode drops the minimal-generator conditions.
inline NumericalSemigroup glue(const NumericalSemigroup& s, const NumericalSemigroup& t, Int p, Int q,
                               GlueMode mode = GlueMode::Strict) {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::GluingInvalid, why); };
    if (!s.is_integral() || !t.is_integral()) fail("both semigroups must be generated by integers");
    if (p <= 0 || q <= 0) fail("p and q must be positive");
    if (!s.member(q)) fail("q = " + std::to_string(q) + " is not in S");
    if (!t.member(p)) fail("p = " + std::to_string(p) + " is not in T");
    if (std::gcd(p, q) != 1) fail("gcd(p, q) != 1");
    if (mode == GlueMode::Strict) {
        const auto& mt = t.minimal_generators();
        const auto& ms = s.minimal_generators();
        if (std::find(mt.begin(), mt.end(), p) != mt.end()) fail("p = " + std::to_string(p) + " is a minimal generator of T");
        if (std::find(ms.begin(), ms.end(), q) != ms.end()) fail("q = " + std::to_string(q) + " is a minimal generator of S");
    }
    std::vector<Int> gens;
    for (Int g : s.int_generators()) gens.push_back(detail::checked_mul(p, g));
    for (Int g : t.int_generators()) gens.push_back(detail::checked_mul(q, g));
    return NumericalSemigroup::from_integers(gens);
}

struct FreeExponents {
    std::vector<Int> phi;  // phi[i - 1] belongs to generator i
    bool is_free = false;
};

/// phi_i = min{h >= 1 : h*s_i in <s_0, ..., s_{i-1}>} for the given
/// arrangement, and whether the number of Apery elements of <all> with
/// respect to s_0 equals the product of the phi_i.
inline FreeExponents free_exponents(std::span<const Int> ordered) {
    if (ordered.empty()) throw Error(ErrorCode::EmptyGenerators, "arrangement is empty");
    for (Int g : ordered) {
        if (g <= 0) throw Error(ErrorCode::NonPositive, "generator " + std::to_string(g) + " is not positive");
    }
    FreeExponents out;
    Int product = 1;
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const auto prefix = NumericalSemigroup::from_integers(ordered.subspan(0, i));
        Int h = 1;
        while (!prefix.member(detail::checked_mul(h, ordered[i]))) ++h;
        out.phi.push_back(h);
        product = detail::checked_mul(product, h);
    }
    const auto whole = NumericalSemigroup::from_integers(ordered);
    const Int s0 = ordered.front();
    Int count = 0;
    for (Int x = 0; x < whole.conductor() + s0; ++x) {
        if (whole.member(x) && !whole.member(x - s0)) ++count;
    }
    out.is_free = count == product;
    return out;
}

}  // namespace nsalg
