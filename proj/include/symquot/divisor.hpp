#pragma once

// The universal incidence divisor on Sym^d(X) x X, seen on X^{d+1}: its
// class as a sum of pairwise diagonals, the dual-basis integral table, and
// the verification of its Künneth decomposition and of its point/slant
// pullbacks.

#include "symquot/tensor.hpp"

#include <string>
#include <variant>
#include <vector>

namespace symquot {

// sum_{k=1}^{d} diagonal_class(d+1, k, d+1); invariant under permutations
// of the first d slots.
CohomClass universal_divisor_pullback(const GenusContext& ctx, int d);

struct EtaDualLabel {
    int j = 0; // omitted slot, 1..d+1
    bool operator==(const EtaDualLabel&) const = default;
};
struct LambdaDualLabel {
    int i = 0, i2 = 0; // alpha indices, i != i2
    int j = 0, j2 = 0; // slots, j < j2
    bool operator==(const LambdaDualLabel&) const = default;
};
using DualLabel = std::variant<EtaDualLabel, LambdaDualLabel>;

std::string dual_label_text(const DualLabel& label);

// The declared dual class in H^{2d}(X^{d+1}): all-w word with the labeled
// slots replaced by 1 (eta duals) or by ã_i, ã_{i'} (lambda-pair duals).
CohomClass dual_class(const GenusContext& ctx, int d, const DualLabel& label);

// Degree-2 basis element named by the label (w at slot j, resp. the cup
// of the two degree-one slot classes).
CohomClass degree2_basis_class(const GenusContext& ctx, int d, const DualLabel& label);

struct PairingTable {
    int genus = 0;
    int d = 0;
    std::vector<DualLabel> columns;
    std::vector<std::vector<Integer>> entries; // rows k = 1..d
};

// entry(k, col) = ∫_{X^d} of the insertion pullback of the dual class.
PairingTable pairing_table(const GenusContext& ctx, int d);

// The classical case analysis: eta columns are 1 exactly at j in {k, d+1};
// lambda columns vanish unless (j, j2) = (k, d+1), where the entry equals
// ∫_X ã_i ∪ ã_{i'}.
Integer expected_pairing_entry(const GenusContext& ctx, int d, int k, const DualLabel& label);

bool pairing_table_matches_expected(const GenusContext& ctx, const PairingTable& table);

struct Discrepancy {
    Monomial monomial;
    Integer lhs, rhs;
};

struct DivisorFormulaReport {
    int genus = 0;
    int d = 0;
    Integer top_coefficient; // coefficient used for 1 ⊗ w
    bool pass = false;
    std::vector<Discrepancy> discrepancies;
};

// Checks that the diagonal sum equals
//   eta ⊗ 1 + n·(1 ⊗ w) + sum_{i<=g} lambda_i ⊗ a_{i+g} - sum_{i>g} lambda_i ⊗ a_{i-g}
// expanded into X^{d+1} words; n = d is the unique coefficient that works.
DivisorFormulaReport verify_divisor_class_formula(const GenusContext& ctx, int d,
                                                  Integer top_coefficient);

struct DivisorPullbackReport {
    int genus = 0;
    int d = 0;
    bool point_restriction_pass = false; // restriction at the last slot is eta
    std::vector<bool> slant_pass;        // slant against a_i^∨ gives lambda_i
    bool pass = false;
};

DivisorPullbackReport verify_divisor_pullbacks(const GenusContext& ctx, int d);

} // namespace symquot
