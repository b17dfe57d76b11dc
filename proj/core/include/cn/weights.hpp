#pragma once

// Balance constraints of a weighted PL multimap and the exact decision of
// whether strictly positive integer weights exist.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cn/plmultimap.hpp"

namespace cn {

// At a branch point the arcs arriving from the left carry the same total
// weight as the arcs leaving to the right.
struct BalanceEquation {
  Rational x;
  CirclePoint y;
  bool seam = false;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  // +1 per left arc, -1 per right arc (an arc on both sides cancels).
  std::vector<std::int64_t> coefficients(std::size_t arc_count) const;
};

struct BalanceSystem {
  std::size_t arc_count = 0;
  std::vector<std::string> arc_labels;
  // Interior branch points in (x, y) order, then seam points.
  std::vector<BalanceEquation> equations;
  // Arcs lying over one generic x; their weights sum to the weighted index.
  std::vector<std::size_t> index_probe;

  bool satisfied_by(std::span<const std::int64_t> weights) const;
  // "bottomLeft = bottomRight + diag at (1/3, 0)"
  std::string describe(std::size_t equation) const;
};

// One equation per interior vertex (and per seam point on a circle domain).
// Equations whose coefficients cancel entirely are omitted.
BalanceSystem balance_constraints(const PLMultimap& f);

// Nonnegative multipliers-with-sign y over the equations such that
// sum_e y_e * row_e has every coefficient >= 0 and at least one > 0. Any
// weight vector satisfying the system then has zero weight on the arcs
// with a positive combined coefficient.
struct InfeasibilityWitness {
  std::vector<std::pair<std::size_t, BigInt>> multipliers;
  std::vector<BigInt> combined;
  std::vector<std::size_t> forced_zero;
};

struct WeightCertificate {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Infeasible;
  std::vector<std::int64_t> weights;
  std::int64_t index = 0;
  InfeasibilityWitness witness;

  bool feasible() const { return status == Status::Feasible; }
};

// Decides whether the system has a solution with every weight > 0. A
// feasible answer carries the integer solution of least total weight,
// divided through by its gcd; an infeasible answer carries a witness.
WeightCertificate solve_positive(const BalanceSystem& system);

// Rechecks a feasible certificate against the map itself: weights >= 1,
// every balance equation, and a constant weighted index equal to
// cert.index at sampled x.
bool verify_certificate(const PLMultimap& f, const WeightCertificate& cert);

// Rechecks the arithmetic of an infeasibility witness.
bool verify_witness(const BalanceSystem& system,
                    const InfeasibilityWitness& witness);

// Total weight of the graph point (x, y) for each y in the fiber over x.
// At a vertex the arcs arriving from the left are used when there are any.
std::map<CirclePoint, std::int64_t> point_weights(const PLMultimap& f,
                                                  const Rational& x);

// x-values avoiding every breakpoint, at least one in each gap between
// breakpoints and at least `count` in total.
std::vector<Rational> sample_points(const PLMultimap& f, std::size_t count);

// Sum of point weights over a fiber. Throws PreconditionError when the sum
// differs between sample points (the weights are not balanced).
std::int64_t weighted_index(const PLMultimap& f);

}  // namespace cn
