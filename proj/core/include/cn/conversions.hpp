#pragma once

// The other representations of multivalued maps and the constructive
// conversions between them:
//   union of equicardinal maps -> n-fold map -> symmetric-product map
//   weighted map <-> symmetric-product map

#include <cstdint>
#include <string>
#include <vector>

#include "cn/circle.hpp"
#include "cn/plmultimap.hpp"

namespace cn {

struct SheetKnot {
  Rational x;
  Rational y;  // lifted: consecutive knots are joined by a straight line

  friend bool operator==(const SheetKnot&, const SheetKnot&) = default;
};

// A continuous PL path [0,1] -> S^1, given by knots in the universal cover.
class SheetPath {
 public:
  SheetPath() = default;
  // Knots must start at x = 0, end at x = 1 and strictly increase in x.
  explicit SheetPath(std::vector<SheetKnot> knots);

  const std::vector<SheetKnot>& knots() const { return knots_; }
  Rational lifted_at(const Rational& x) const;
  CirclePoint at(const Rational& x) const { return CirclePoint(lifted_at(x)); }

  friend bool operator==(const SheetPath&, const SheetPath&) = default;

 private:
  std::vector<SheetKnot> knots_;
};

// An n-fold map: n sheets over the domain, glued at the seam by a
// permutation. Sheet i, continued once around a circle domain, becomes
// sheet monodromy[i] (0-based). On an interval domain the monodromy is the
// identity.
struct NFoldMap {
  int n = 0;
  DomainKind domain = DomainKind::Interval;
  std::vector<std::size_t> monodromy;
  std::vector<SheetPath> sheets;

  // Throws StructuralError if sheets, monodromy and seam values disagree.
  void check() const;

  std::vector<CirclePoint> sheet_values(const Rational& x) const;
  MultisetConfiguration multiset_at(const Rational& x) const;
  Configuration evaluate(const Rational& x) const;

  // "(1 2)(3)"
  std::string monodromy_cycles() const;
};

// A map into SP^n(S^1), stored as a weighted graph whose point weights sum
// to n over every x.
struct SPMap {
  int n = 0;
  PLMultimap graph;

  MultisetConfiguration multiset_at(const Rational& x) const;
  Configuration evaluate(const Rational& x) const;

  friend bool operator==(const SPMap&, const SPMap&) = default;
};

// Builds the covering from the graph itself: sheets start at the fiber over
// x = 0 in increasing y and follow the unique outgoing arc at every vertex.
// Throws PreconditionError unless union_check(f) is Sufficient.
NFoldMap union_to_nfold(const PLMultimap& f);

// Multiset of sheet values at each x, realised as a weighted graph.
SPMap nfold_to_sp(const NFoldMap& g);

// Throws PreconditionError naming a violated vertex equation if the weights
// are missing or unbalanced.
SPMap weighted_to_sp(const PLMultimap& f);

PLMultimap sp_to_weighted(const SPMap& g);

// For maps with at most two values: multiplicity 2 on arcs over which the
// fiber has one point, 1 where it has two. The result is checked for
// balance; throws PreconditionError if the map is invalid or has a fiber
// with more than two points.
SPMap at_most_two_to_sp(const PLMultimap& f);

// Weighted graph of a family of sheets: the domain is cut at every knot and
// every point where two sheets meet, and coinciding pieces become one arc
// whose weight counts them.
PLMultimap sheets_to_graph(int n, DomainKind domain,
                           const std::vector<SheetPath>& sheets);

}  // namespace cn
