#pragma once

// Cohomology of the symmetric products Sym^d X as the signed invariants of
// H*(X^d) under the permutation action, with the degree-one and degree-two
// word sums as algebra generators.

#include "symquot/tensor.hpp"

#include <cstdint>
#include <vector>

namespace symquot {

// Orbit sum over all d! permutations (with Koszul signs).  Guarded: refuses
// more than kDefaultMaxSymmetrizeSlots factors or (2g+2)^d > max_basis.
CohomClass symmetrize(const GenusContext& ctx, const CohomClass& c,
                      std::uint64_t max_basis = kDefaultMaxBasis);

// Signed orbit sum of a single word over its distinct rearrangements; zero
// when some odd letter repeats.  Building block for InvariantBasis.
CohomClass orbit_sum(const Monomial& m);

struct InvariantBasis {
    int genus = 0;
    int d = 0;
    int degree = 0;
    std::vector<CohomClass> vectors; // orbit sums of canonical representatives
    int rank() const { return static_cast<int>(vectors.size()); }
};

InvariantBasis invariant_basis(const GenusContext& ctx, int d, int k,
                               std::uint64_t max_basis = kDefaultMaxBasis);

// Rank of the degree-k invariant subspace, counted over canonical orbit
// representatives (sorted words; an orbit survives iff no odd letter repeats).
Integer invariant_rank(const GenusContext& ctx, int d, int k,
                       std::uint64_t max_basis = kDefaultMaxBasis);

// Closed-form evaluator sum_q C(2g, k-2q), max(0,k-d) <= q <= floor(k/2).
// Contract: agrees with invariant_rank wherever both are computable.
Integer betti_sym_closed(int genus, int d, int k);

// All Betti numbers b_0..b_{2d} of Sym^d X via invariant_rank.
std::vector<Integer> poincare_sym(const GenusContext& ctx, int d,
                                  std::uint64_t max_basis = kDefaultMaxBasis);

// (lambda_1..lambda_2g, eta): the word sums generating the invariant image.
struct SymGenerators {
    std::vector<CohomClass> lambda;
    CohomClass eta;
};
SymGenerators macdonald_generators(const GenusContext& ctx, int d);

struct GenerationDegreeReport {
    int degree = 0;
    Integer span_rank;
    Integer invariant_rank;
    bool pass = false;
};

struct GenerationReport {
    int genus = 0;
    int d = 0;
    std::vector<GenerationDegreeReport> degrees;
    bool pass = true;
};

// For each k <= k_max: the span of degree-k products of the generators
// (lambda exponents at most one) must fill the invariant subspace.
GenerationReport generation_check(const GenusContext& ctx, int d, int k_max,
                                  std::uint64_t max_basis = kDefaultMaxBasis);

} // namespace symquot
