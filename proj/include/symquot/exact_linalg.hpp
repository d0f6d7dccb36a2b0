#pragma once

#include "symquot/integers.hpp"
#include "symquot/tensor.hpp"

#include <vector>

namespace symquot {

// Rank of an integer matrix (rows x cols), fraction-free elimination.
int rank_exact(std::vector<std::vector<Integer>> m);

// Rank of the rational span of a list of classes (common factor count).
int rank_of_span(const std::vector<CohomClass>& classes);

// Integer coordinates of v in the given linearly independent basis.
// Throws basis_error when v is not an integral combination.
std::vector<Integer> coordinates_in_basis(const std::vector<CohomClass>& basis,
                                          const CohomClass& v);

} // namespace symquot
