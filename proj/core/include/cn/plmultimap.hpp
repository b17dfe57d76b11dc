#pragma once

// Piecewise-linear model of an at-most-n-valued map [0,1] -o S^1 (or
// S^1 -o S^1): a finite graph of straight arcs in domain x codomain.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cn/circle.hpp"
#include "cn/rational.hpp"

namespace cn {

enum class DomainKind { Interval, Circle };

const char* to_string(DomainKind kind);

struct Vertex {
  Rational x;  // in [0, 1]
  CirclePoint y;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A straight segment from vertices[from] to vertices[to]. The codomain value
// runs linearly from y(from) to y(to) + lift in the universal cover, and is
// reduced mod 1 when read back, so `lift` picks which way the arc winds
// across the 0~1 seam.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<std::int64_t> weight;
  std::int64_t lift = 0;
  std::string name;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class PLMultimap {
 public:
  // Throws StructuralError on out-of-range indices, x outside [0,1],
  // n < 1 or non-positive weights. Geometric conditions are left to
  // validate().
  PLMultimap(int n, DomainKind domain, std::vector<Vertex> vertices,
             std::vector<Arc> arcs);

  int n() const { return n_; }
  DomainKind domain() const { return domain_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  const Vertex& start(std::size_t arc) const;
  const Vertex& end(std::size_t arc) const;

  // Closed x-span test.
  bool spans(std::size_t arc, const Rational& x) const;
  // Value of the arc at x in its own lifted chart (not reduced mod 1).
  Rational lifted_y(std::size_t arc, const Rational& x) const;
  CirclePoint y_at(std::size_t arc, const Rational& x) const;

  // "name" if the arc carries one, otherwise "#i".
  std::string arc_label(std::size_t arc) const;

  // True iff every arc carries a weight.
  bool has_weights() const;
  std::int64_t weight(std::size_t arc) const;
  std::vector<std::int64_t> weights() const;
  PLMultimap with_weights(std::span<const std::int64_t> weights) const;
  PLMultimap without_weights() const;
  PLMultimap with_bound(int n) const;

  // Sorted distinct x-coordinates of 0, 1 and every vertex.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const PLMultimap&, const PLMultimap&) = default;

 private:
  int n_;
  DomainKind domain_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
};

// Where arcs meet. For a circle domain, vertices at x = 0 and x = 1 with the
// same y are one seam point (reported with x = 0): arcs ending at x = 1
// arrive from the left, arcs starting at x = 0 leave to the right.
struct BranchPoint {
  Rational x;
  CirclePoint y;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  bool seam = false;
  // False on the outer side of an interval domain's endpoints.
  bool needs_left = true;
  bool needs_right = true;
};

std::vector<BranchPoint> branch_points(const PLMultimap& f);

enum class ViolationKind {
  VerticalArc,
  DuplicateVertex,
  IsolatedVertex,
  LowerSemicontinuity,
  ArcIntersection,
  CardinalityBound,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<std::size_t> vertex;
  std::vector<std::size_t> arcs;
  std::optional<Rational> x;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

// Checks that the graph describes a continuous map into C_n(S^1): arcs
// strictly increase in x, meet only at shared vertices, every vertex is
// approached from both sides (one side at interval endpoints), and every
// fiber has between 1 and n points.
ValidationReport validate(const PLMultimap& f);

// Distinct fiber values at x, possibly empty on an invalid map.
std::vector<CirclePoint> values_at(const PLMultimap& f, const Rational& x);

// f(x) as a configuration. Throws std::domain_error for x outside [0,1] and
// PreconditionError if the fiber is empty.
Configuration evaluate(const PLMultimap& f, const Rational& x);

struct ProfileSegment {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
  int count = 0;

  bool contains(const Rational& x) const;
  // "[0, 1/3]: 2"
  std::string str() const;
  friend bool operator==(const ProfileSegment&, const ProfileSegment&) = default;
};

struct CardinalityProfile {
  std::vector<ProfileSegment> segments;

  std::set<int> counts() const;
  int count_at(const Rational& x) const;
};

CardinalityProfile cardinality_profile(const PLMultimap& f);

bool is_equicardinal(const PLMultimap& f);
bool is_one_n_valued(const PLMultimap& f);

// Connected components of the graph (glued across the seam for a circle
// domain), ordered by their smallest arc index.
std::vector<PLMultimap> components(const PLMultimap& f);
// Arc indices of each component, in the same order as components().
std::vector<std::vector<std::size_t>> component_arcs(const PLMultimap& f);

enum class UnionVerdict { Sufficient, Inconclusive };

struct UnionCheck {
  UnionVerdict verdict;
  // First component whose fiber cardinality is not constant.
  std::optional<std::size_t> component;
};

// One-sided test for being a union of equicardinal maps: every component
// has constant fiber cardinality. Inconclusive is not a proof of the
// opposite.
UnionCheck union_check(const PLMultimap& f);

}  // namespace cn
