#pragma once

// Minimal exact Chern calculus on P^1 x X: integer classes on the basis
// {1, h, w, h·w} ∪ {a_i, h·a_i}, where h is the point class of P^1 and w
// the point class of X.  Relations: h^2 = 0, w^2 = 0, w·a_i = 0,
// a_i·a_j = pairing(i,j)·w; h is even and commutes with everything.

#include "symquot/genus.hpp"
#include "symquot/integers.hpp"

#include <string>
#include <vector>

namespace symquot {

class P1XClass {
public:
    explicit P1XClass(const GenusContext& ctx)
        : genus_(ctx.genus()),
          a_(static_cast<std::size_t>(2 * genus_), Integer(0)),
          ha_(static_cast<std::size_t>(2 * genus_), Integer(0)) {}

    int genus() const { return genus_; }

    Integer unit = 0, h = 0, w = 0, hw = 0;
    Integer& a(int i) { return a_[static_cast<std::size_t>(i - 1)]; }
    Integer& ha(int i) { return ha_[static_cast<std::size_t>(i - 1)]; }
    const Integer& a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    const Integer& ha(int i) const { return ha_[static_cast<std::size_t>(i - 1)]; }

    bool is_zero() const;
    bool operator==(const P1XClass&) const = default;

    P1XClass& operator+=(const P1XClass& rhs);
    P1XClass& operator-=(const P1XClass& rhs);
    P1XClass& operator*=(const Integer& s);
    friend P1XClass operator+(P1XClass x, const P1XClass& y) { return x += y; }
    friend P1XClass operator-(P1XClass x, const P1XClass& y) { return x -= y; }

    // piece of total degree 2k (Chern-character grading; odd parts excluded)
    P1XClass even_piece(int k) const;

    std::string text() const;

private:
    int genus_;
    std::vector<Integer> a_, ha_;
};

P1XClass p1x_cup(const GenusContext& ctx, const P1XClass& x, const P1XClass& y);
Integer p1x_integrate(const P1XClass& x);

// Restriction to P^1 x {point}: kills w, hw, a_i, h·a_i.
// Returned class has only unit and h parts.
P1XClass p1x_point_restrict(const GenusContext& ctx, const P1XClass& x);

// Slant against a_i^∨ (pairing ⟨x, y^∨⟩ = ∫_X y ∪ x, as in the tensor core).
P1XClass p1x_slant_alpha(const GenusContext& ctx, const P1XClass& x, int i);

// Slant against the fundamental class of X: picks the w and h·w parts.
P1XClass p1x_slant_fundamental(const GenusContext& ctx, const P1XClass& x);

// ch of O_{P1} ⊠ Q for a length-(d-1) torsion quotient Q on X: (d-1)·w.
P1XClass ch_torsion_times_trivial(const GenusContext& ctx, int d);
// ch of O_{P1}(1) ⊠ O_p: w + h·w.
P1XClass ch_twisted_skyscraper(const GenusContext& ctx);

// ch of the full quotient sheaf: d·w + w·h  (graded pieces 0, d·w, w·h).
P1XClass quotient_chern_character(const GenusContext& ctx, int d);

struct ChernPair {
    P1XClass c1, c2;
};

// Chern classes of the rank-2 kernel W of O^2 -> quotient:
// ch(W) = 2 - ch(quotient); c1 = ch_1, c2 = (c1^2 - 2 ch_2)/2 (exact /2).
ChernPair kernel_chern_classes(const GenusContext& ctx, int d);

// (c1, c2) from a Chern character with integral ch_2 correction; throws on
// a non-exact division (an internal consistency failure).
ChernPair chern_from_character(const GenusContext& ctx, const P1XClass& ch);

struct ChernIdentityReport {
    int genus = 0;
    int d = 0;
    Integer c1_restriction;       // must be 0
    std::vector<Integer> slants;  // one per a_i, must all be 0
    Integer gamma2_integral;      // must be 1
    bool pass = false;
};

ChernIdentityReport verify_chern_identities(const GenusContext& ctx, int d);

} // namespace symquot
