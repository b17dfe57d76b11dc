#pragma once

// Points of the circle [0,1]/0~1, finite configurations of such points and
// the Hausdorff metric between them.

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cn/rational.hpp"

namespace cn {

// A point of the circle, stored by its representative in [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;
  CirclePoint(const Rational& r) : value_(r.frac()) {}  // NOLINT: reduces mod 1
  CirclePoint(std::int64_t k) : CirclePoint(Rational(k)) {}  // NOLINT

  const Rational& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint& a, const CirclePoint& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

// Arc-length distance on the unit-circumference circle; always <= 1/2.
Rational circle_dist(const CirclePoint& a, const CirclePoint& b);

// A nonempty finite subset of the circle: a point of C_n(S^1) for any
// n >= size(). Points are kept sorted and distinct, so equality is set
// equality.
class Configuration {
 public:
  explicit Configuration(std::vector<CirclePoint> points);
  Configuration(std::initializer_list<Rational> values);

  // Comma-separated rationals, each reduced mod 1: "0,1/2,3/4".
  static Configuration parse(std::string_view text);

  const std::vector<CirclePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const CirclePoint& p) const;

  // "{0, 1/2}"
  std::string str() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<CirclePoint> points_;
};

// n circle points counted with multiplicity: a point of SP^n(S^1).
class MultisetConfiguration {
 public:
  using Entry = std::pair<CirclePoint, int>;

  MultisetConfiguration() = default;
  // Entries may repeat points; multiplicities of equal points are merged.
  explicit MultisetConfiguration(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  int total() const;
  int multiplicity(const CirclePoint& p) const;
  Configuration support() const;

  // "[0^2, 1/2^1]"
  std::string str() const;

  friend bool operator==(const MultisetConfiguration&,
                         const MultisetConfiguration&) = default;

 private:
  std::vector<Entry> entries_;
};

Rational hausdorff_distance(const Configuration& a, const Configuration& b);

// Open Hausdorff ball membership: d_H(center, y) < eps.
bool in_hausdorff_ball(const Configuration& center, const Rational& eps,
                       const Configuration& y);

// The set-theoretic description of the same ball: every point of y is within
// eps of center, and every point of center is within eps of y.
bool ball_formula_rhs(const Configuration& center, const Rational& eps,
                      const Configuration& y);

}  // namespace cn
