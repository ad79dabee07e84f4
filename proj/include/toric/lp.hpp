#pragma once

// Exact rational feasibility for homogeneous systems with "row . y >= 1"
// normalizations.

#include "toric/numeric.hpp"

#include <optional>
#include <vector>

namespace toric {

using RationalVector = std::vector<Rational>;

/// Constraints on y in Q^num_vars:
///   row . y == 0 for each equality row,
///   row . y >= 1 for each normalization row,
///   y_i >= 0 for i in nonneg_vars; all other variables are free.
///
/// Strict homogeneous inequalities row . y > 0 are posed as row . y >= 1;
/// the two are equisolvable because the remaining constraints are
/// invariant under positive scaling.
struct LinearSystem {
    std::size_t num_vars = 0;
    std::vector<RationalVector> eq_rows;
    std::vector<RationalVector> ge_one_rows;
    IndexSet nonneg_vars;
};

/// Returns a witness satisfying every constraint exactly, or nullopt when the
/// system is infeasible.  Throws std::invalid_argument on dimension
/// mismatch.
std::optional<RationalVector> lp_feasible(const LinearSystem& sys);

/// Checks a candidate witness by substitution.
bool satisfies(const LinearSystem& sys, const RationalVector& y);

}  // namespace toric
