#pragma once

// Two applications built on the orbit deciders: equal perfect-matching
// weights, and reachability of a pocket on the periodic square billiard.

#include "toric/intlinalg.hpp"
#include "toric/numeric.hpp"
#include "toric/orbit.hpp"

#include <array>
#include <vector>

namespace toric {

/// Edge weights of the complete bipartite graph K_{n,n}; w[i][j] is the
/// weight of edge (i, j).
struct BipartiteWeights {
    std::size_t n = 0;
    std::vector<std::vector<Rational>> w;

    /// Throws std::invalid_argument unless w is n x n.
    void check() const;
};

/// Weight matrix of ST_n x ST_n acting on n x n matrices by
/// (t_i v_ij s_j), with t_n = (t_1 ... t_{n-1})^-1 and likewise for s.
/// Coordinate (i, j) has index i * n + j; d = 2(n - 1).
IntMatrix matching_scaling_weights(std::size_t n);

/// (2^(L w_ij)) in scaled form, L = `scale` (a common denominator).
Vector matching_point(const BipartiteWeights& w, const BigInt& scale);

/// True iff a and b give every perfect matching the same total weight.
/// Decided as orbit closure intersection of the points 2^(L w) and 2^(L w')
/// under ST_n x ST_n, L the lcm of all weight denominators.
bool matching_weight_equivalence(const BipartiteWeights& a, const BipartiteWeights& b);

/// Ball on the periodic square (R/2piZ)^2 shot with direction (p, q); points
/// are (e^{i theta}, e^{i phi}) given as exact unit-modulus Gaussian rationals.
struct BilliardInstance {
    long p = 0;
    long q = 0;
    std::array<GaussianRational, 2> start;
    std::array<GaussianRational, 2> pocket;

    /// Throws std::invalid_argument unless gcd(p, q) = 1 and every
    /// coordinate has modulus exactly one.
    void check() const;
};

/// True iff the trajectory passes through the pocket, i.e. the pocket lies
/// in the S^1-orbit of start under t . (x, y) = (t^p x, t^q y).
bool billiards_reachable(const BilliardInstance& inst);

}  // namespace toric
