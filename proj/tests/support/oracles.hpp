#pragma once

// Reference computations the library is checked against. None of them call
// the code paths they are used to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "cn/cell_complex.hpp"
#include "cn/circle.hpp"
#include "cn/rational.hpp"
#include "cn/smith.hpp"
#include "cn/weights.hpp"

namespace cn::testing {

// Plain max-min over both directions, with the circle distance written out.
Rational hausdorff_oracle(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Searches {1..max_weight}^arcs for a solution, assigning arcs in index
// order and pruning an equation once its last arc is fixed.
std::optional<std::vector<std::int64_t>> brute_force_weights(const BalanceSystem& sys,
                                                             std::int64_t max_weight);

// Ranks and torsion of H_0..H_n as stated for C_n(S^1): a point plus a
// circle for n <= 2, a homology (n-1)-sphere for even n >= 4 and an
// n-sphere for odd n >= 3.
std::vector<HomologyGroup> expected_homology(int n);

// Boundary matrices from the parity formulas, in the cell order
// [sigma_k, rho_k] (or [rho_n] on top, [v] at the bottom).
std::vector<IntMatrix> closed_form_boundaries(int n);

// Invariant factors via determinantal divisors: d_k / d_{k-1}, where d_k is
// the gcd of all k x k minors. Only sensible for small matrices.
std::vector<BigInt> invariant_factors_by_minors(const BigMatrix& m);

}  // namespace cn::testing
