#pragma once

// Exact graded-commutative arithmetic in H*(X^n; Z) for a genus-g curve X,
// in the basis of length-n words over {1, a_1..a_2g, w}.
//
// Sign conventions (fixed here once, validated by the verification suites):
//   * cup: words multiply slotwise; the Koszul sign is (-1)^t where t counts
//     pairs (k < l) with b_k and a_l both odd (the transposed odd pairs of
//     the slotwise merge of a_1..a_n b_1..b_n).
//   * permute: a term acquires the sign of the permutation induced on its
//     odd letters.
//   * insertion_pullback at slot k: the last letter moves left past slots
//     k+1..d and multiplies slot k from the right.
//   * slant_last against y^∨ pairs the last letter x by ∫_X y ∪ x; this is
//     the unique normalization under which the universal-divisor slants
//     produce the degree-one generators with coefficient +1.
//   * the degree-one dual letters are ã_i = a_{i+g} for i <= g and
//     ã_i = -a_{i-g} for i > g, so a_i ∪ ã_i = w.

#include "symquot/genus.hpp"
#include "symquot/integers.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace symquot {

class Letter {
public:
    static Letter unit() { return Letter(0); }
    static Letter alpha(int i) { return Letter(i); }
    static Letter omega() { return Letter(kOmega); }

    bool is_unit() const { return code_ == 0; }
    bool is_alpha() const { return code_ > 0 && code_ != kOmega; }
    bool is_omega() const { return code_ == kOmega; }
    int alpha_index() const { return code_; }

    int degree() const { return is_unit() ? 0 : is_alpha() ? 1 : 2; }
    bool odd() const { return is_alpha(); }

    // unit < a_1 < ... < a_2g < omega
    auto operator<=>(const Letter&) const = default;

    std::string text() const {
        if (is_unit()) return "1";
        if (is_omega()) return "w";
        return "a" + std::to_string(code_);
    }

private:
    explicit Letter(std::int32_t code) : code_(code) {}
    static constexpr std::int32_t kOmega = std::numeric_limits<std::int32_t>::max();
    std::int32_t code_;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    int size() const { return static_cast<int>(letters_.size()); }
    const Letter& at(int slot) const { return letters_[static_cast<std::size_t>(slot - 1)]; } // 1-based
    const std::vector<Letter>& letters() const { return letters_; }

    int degree() const {
        int d = 0;
        for (const Letter& l : letters_) d += l.degree();
        return d;
    }

    bool is_top() const {
        for (const Letter& l : letters_)
            if (!l.is_omega()) return false;
        return true;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string text() const;

private:
    std::vector<Letter> letters_;
};

// Finite Z-linear combination of words of a fixed length n.  Canonical:
// no zero coefficients are stored and the term map is ordered.
class CohomClass {
public:
    explicit CohomClass(int n) : n_(n) {
        if (n < 1) throw dimension_error("factor count must be positive");
    }

    int factors() const { return n_; }
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Integer& c);
    Integer coefficient(const Monomial& m) const;

    CohomClass& operator+=(const CohomClass& rhs);
    CohomClass& operator-=(const CohomClass& rhs);
    CohomClass& operator*=(const Integer& s);
    friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
    friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
    friend CohomClass operator*(const Integer& s, CohomClass a) { return a *= s; }

    bool operator==(const CohomClass&) const = default;

    // -1 for mixed-degree or zero classes.
    int homogeneous_degree() const;

    std::string text() const;

    static CohomClass zero(int n) { return CohomClass(n); }
    static CohomClass monomial(Monomial m, Integer c = 1);
    // single letter x at `slot`, units elsewhere
    static CohomClass letter_at(int n, int slot, Letter x, Integer c = 1);

private:
    int n_;
    std::map<Monomial, Integer> terms_;
};

// ---- ring operations ------------------------------------------------------

CohomClass cup(const GenusContext& ctx, const CohomClass& a, const CohomClass& b);
Integer integrate(const CohomClass& c);

// perm[i] is the 0-based image of slot i+1; letters move slot i -> perm[i]+1.
CohomClass permute(const CohomClass& c, const std::vector<int>& perm);

// Pullback along X^d -> X^{d+1} duplicating slot k into the last slot.
CohomClass insertion_pullback(const GenusContext& ctx, const CohomClass& c, int k);

// Restriction of one factor to a point (terms with a positive-degree letter
// at `slot` die; the slot is deleted).
CohomClass point_restrict(const CohomClass& c, int slot);

// Slant product against the dual of the one-factor class `dual` (n = 1).
CohomClass slant_last(const GenusContext& ctx, const CohomClass& c, const CohomClass& dual);

// Class of the pairwise diagonal supported on slots j < k of X^n:
//   w at j + w at k + sum_{i<=g} a_i(j) a_{i+g}(k) - sum_{i>g} a_i(j) a_{i-g}(k).
CohomClass diagonal_class(const GenusContext& ctx, int n, int j, int k);

// ã_i as a one-factor class (sign folded into the coefficient).
CohomClass alpha_tilde(const GenusContext& ctx, int i);

// One-factor classes, convenience for slants and duals.
CohomClass one_factor(const GenusContext& ctx, Letter x, Integer c = 1);

} // namespace symquot
