#include "cn/circle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cn/error.hpp"

namespace cn {

Rational circle_dist(const CirclePoint& a, const CirclePoint& b) {
  Rational d = (a.value() - b.value()).abs();
  return min(d, Rational(1) - d);
}

Configuration::Configuration(std::vector<CirclePoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("Configuration must be nonempty");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Configuration::Configuration(std::initializer_list<Rational> values)
    : Configuration(std::vector<CirclePoint>(values.begin(), values.end())) {}

Configuration Configuration::parse(std::string_view text) {
  std::vector<CirclePoint> points;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    points.emplace_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (points.empty()) {
    throw StructuralError("empty configuration literal");
  }
  return Configuration(std::move(points));
}

bool Configuration::contains(const CirclePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::string Configuration::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += points_[i].str();
  }
  return out + "}";
}

MultisetConfiguration::MultisetConfiguration(std::vector<Entry> entries) {
  std::map<CirclePoint, int> merged;
  for (auto& [p, k] : entries) {
    if (k < 1) throw std::invalid_argument("multiplicity must be positive");
    merged[p] += k;
  }
  entries_.assign(merged.begin(), merged.end());
}

int MultisetConfiguration::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

int MultisetConfiguration::multiplicity(const CirclePoint& p) const {
  for (const auto& e : entries_) {
    if (e.first == p) return e.second;
  }
  return 0;
}

Configuration MultisetConfiguration::support() const {
  std::vector<CirclePoint> pts;
  for (const auto& e : entries_) pts.push_back(e.first);
  return Configuration(std::move(pts));
}

std::string MultisetConfiguration::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].first.str() + "^" + std::to_string(entries_[i].second);
  }
  return out + "]";
}

namespace {

// max over a in from of the distance to the nearest point of to
Rational directed(const Configuration& from, const Configuration& to) {
  Rational worst(0);
  for (const auto& a : from.points()) {
    Rational nearest = circle_dist(a, to.points().front());
    for (const auto& b : to.points()) nearest = min(nearest, circle_dist(a, b));
    worst = max(worst, nearest);
  }
  return worst;
}

bool covered_by(const Configuration& pts, const Configuration& centers,
                const Rational& eps) {
  return std::all_of(pts.points().begin(), pts.points().end(),
                     [&](const CirclePoint& p) {
                       return std::any_of(
                           centers.points().begin(), centers.points().end(),
                           [&](const CirclePoint& c) {
                             return circle_dist(p, c) < eps;
                           });
                     });
}

}  // namespace

Rational hausdorff_distance(const Configuration& a, const Configuration& b) {
  return max(directed(a, b), directed(b, a));
}

bool in_hausdorff_ball(const Configuration& center, const Rational& eps,
                       const Configuration& y) {
  return hausdorff_distance(center, y) < eps;
}

bool ball_formula_rhs(const Configuration& center, const Rational& eps,
                      const Configuration& y) {
  return covered_by(y, center, eps) && covered_by(center, y, eps);
}

}  // namespace cn
