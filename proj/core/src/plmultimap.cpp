#include "cn/plmultimap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cn/error.hpp"

namespace cn {

const char* to_string(DomainKind kind) {
  return kind == DomainKind::Interval ? "interval" : "circle";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VerticalArc: return "vertical_arc";
    case ViolationKind::DuplicateVertex: return "duplicate_vertex";
    case ViolationKind::IsolatedVertex: return "isolated_vertex";
    case ViolationKind::LowerSemicontinuity: return "lsc";
    case ViolationKind::ArcIntersection: return "arc_intersection";
    case ViolationKind::CardinalityBound: return "cardinality_bound";
  }
  return "unknown";
}

PLMultimap::PLMultimap(int n, DomainKind domain, std::vector<Vertex> vertices,
                       std::vector<Arc> arcs)
    : n_(n),
      domain_(domain),
      vertices_(std::move(vertices)),
      arcs_(std::move(arcs)) {
  if (n_ < 1) throw StructuralError("bound n must be at least 1");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& x = vertices_[i].x;
    if (x < Rational(0) || x > Rational(1)) {
      throw StructuralError("vertex #" + std::to_string(i) + " has x = " +
                            x.str() + " outside [0,1]");
    }
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& a = arcs_[i];
    if (a.from >= vertices_.size() || a.to >= vertices_.size()) {
      throw StructuralError("arc #" + std::to_string(i) +
                            " references a vertex index out of range");
    }
    if (a.weight && *a.weight < 1) {
      throw StructuralError("arc #" + std::to_string(i) +
                            " has a non-positive weight");
    }
  }
}

const Vertex& PLMultimap::start(std::size_t arc) const {
  return vertices_.at(arcs_.at(arc).from);
}

const Vertex& PLMultimap::end(std::size_t arc) const {
  return vertices_.at(arcs_.at(arc).to);
}

bool PLMultimap::spans(std::size_t arc, const Rational& x) const {
  return start(arc).x <= x && x <= end(arc).x;
}

Rational PLMultimap::lifted_y(std::size_t arc, const Rational& x) const {
  const auto& s = start(arc);
  const auto& e = end(arc);
  Rational y0 = s.y.value();
  Rational y1 = e.y.value() + Rational(arcs_[arc].lift);
  if (s.x == e.x) return y0;
  return y0 + (x - s.x) / (e.x - s.x) * (y1 - y0);
}

CirclePoint PLMultimap::y_at(std::size_t arc, const Rational& x) const {
  return CirclePoint(lifted_y(arc, x));
}

std::string PLMultimap::arc_label(std::size_t arc) const {
  const auto& name = arcs_.at(arc).name;
  return name.empty() ? "#" + std::to_string(arc) : name;
}

bool PLMultimap::has_weights() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.weight.has_value(); });
}

std::int64_t PLMultimap::weight(std::size_t arc) const {
  const auto& w = arcs_.at(arc).weight;
  if (!w) {
    throw PreconditionError("arc " + arc_label(arc) + " carries no weight");
  }
  return *w;
}

std::vector<std::int64_t> PLMultimap::weights() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < arcs_.size(); ++i) out.push_back(weight(i));
  return out;
}

PLMultimap PLMultimap::with_weights(std::span<const std::int64_t> weights) const {
  if (weights.size() != arcs_.size()) {
    throw std::invalid_argument("weight vector length differs from arc count");
  }
  auto arcs = arcs_;
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].weight = weights[i];
  return PLMultimap(n_, domain_, vertices_, std::move(arcs));
}

PLMultimap PLMultimap::without_weights() const {
  auto arcs = arcs_;
  for (auto& a : arcs) a.weight.reset();
  return PLMultimap(n_, domain_, vertices_, std::move(arcs));
}

PLMultimap PLMultimap::with_bound(int n) const {
  return PLMultimap(n, domain_, vertices_, arcs_);
}

std::vector<Rational> PLMultimap::breakpoints() const {
  std::vector<Rational> xs{Rational(0), Rational(1)};
  for (const auto& v : vertices_) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<BranchPoint> branch_points(const PLMultimap& f) {
  const bool circle = f.domain() == DomainKind::Circle;
  auto is_seam = [&](const Rational& x) {
    return circle && (x == Rational(0) || x == Rational(1));
  };

  // Keyed by (x, y); seam vertices share the key (0, y).
  std::map<std::pair<Rational, CirclePoint>, BranchPoint> points;
  auto key_of = [&](const Vertex& v) {
    return std::make_pair(is_seam(v.x) ? Rational(0) : v.x, v.y);
  };
  for (std::size_t i = 0; i < f.vertices().size(); ++i) {
    const auto& v = f.vertices()[i];
    auto [it, inserted] = points.try_emplace(key_of(v));
    auto& bp = it->second;
    if (inserted) {
      bp.x = is_seam(v.x) ? Rational(0) : v.x;
      bp.y = v.y;
      bp.seam = is_seam(v.x);
      if (!circle) {
        bp.needs_left = v.x != Rational(0);
        bp.needs_right = v.x != Rational(1);
      }
    }
    bp.vertices.push_back(i);
  }
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    points[key_of(f.start(a))].right.push_back(a);
    points[key_of(f.end(a))].left.push_back(a);
  }
  std::vector<BranchPoint> out;
  out.reserve(points.size());
  for (auto& [key, bp] : points) out.push_back(std::move(bp));
  return out;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

namespace {

BigInt ceil_of(const Rational& r) { return -((-r).floor()); }

std::string point_str(const Rational& x, const CirclePoint& y) {
  return "(" + x.str() + ", " + y.str() + ")";
}

bool shares_vertex_at(const PLMultimap& f, std::size_t a, std::size_t b,
                      const Rational& x) {
  const auto& arcs = f.arcs();
  for (std::size_t va : {arcs[a].from, arcs[a].to}) {
    for (std::size_t vb : {arcs[b].from, arcs[b].to}) {
      if (va == vb && f.vertices()[va].x == x) return true;
    }
  }
  return false;
}

// Reports every point where arcs a and b meet away from a shared vertex.
void check_pair(const PLMultimap& f, std::size_t a, std::size_t b,
                std::vector<Violation>& out) {
  Rational lo = max(f.start(a).x, f.start(b).x);
  Rational hi = min(f.end(a).x, f.end(b).x);
  if (lo > hi) return;
  auto bad = [&](const Rational& x, const std::string& what) {
    out.push_back({ViolationKind::ArcIntersection,
                   "arcs " + f.arc_label(a) + " and " + f.arc_label(b) + " " +
                       what + " at x = " + x.str() +
                       " without a shared vertex",
                   std::nullopt,
                   {a, b},
                   x});
  };
  Rational d_lo = f.lifted_y(a, lo) - f.lifted_y(b, lo);
  Rational d_hi = f.lifted_y(a, hi) - f.lifted_y(b, hi);
  if (lo == hi || d_lo == d_hi) {
    if (!d_lo.is_integer()) return;
    if (lo < hi) {
      bad(lo, "overlap");
    } else if (!shares_vertex_at(f, a, b, lo)) {
      bad(lo, "meet");
    }
    return;
  }
  Rational d_min = min(d_lo, d_hi);
  Rational d_max = max(d_lo, d_hi);
  for (BigInt k = ceil_of(d_min); Rational(k) <= d_max; ++k) {
    Rational x = lo + (Rational(k) - d_lo) / (d_hi - d_lo) * (hi - lo);
    if (!shares_vertex_at(f, a, b, x)) bad(x, "cross");
  }
}

}  // namespace

ValidationReport validate(const PLMultimap& f) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& vs = f.vertices();

  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    if (!(f.start(a).x < f.end(a).x)) {
      out.push_back({ViolationKind::VerticalArc,
                     "arc " + f.arc_label(a) +
                         " does not strictly increase in x",
                     std::nullopt,
                     {a},
                     f.start(a).x});
    }
  }
  if (!out.empty()) return report;

  std::vector<std::size_t> order(vs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::tie(vs[i].x, vs[i].y) < std::tie(vs[j].x, vs[j].y);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vs[order[i]] == vs[order[i - 1]]) {
      out.push_back({ViolationKind::DuplicateVertex,
                     "vertices #" + std::to_string(order[i - 1]) + " and #" +
                         std::to_string(order[i]) + " coincide at " +
                         point_str(vs[order[i]].x, vs[order[i]].y),
                     order[i],
                     {},
                     vs[order[i]].x});
    }
  }

  std::vector<int> degree(vs.size(), 0);
  for (const auto& arc : f.arcs()) {
    ++degree[arc.from];
    ++degree[arc.to];
  }
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (degree[v] == 0) {
      out.push_back({ViolationKind::IsolatedVertex,
                     "vertex #" + std::to_string(v) + " at " +
                         point_str(vs[v].x, vs[v].y) + " has no arcs",
                     v,
                     {},
                     vs[v].x});
    }
  }

  for (const auto& bp : branch_points(f)) {
    if (bp.left.empty() && bp.right.empty()) continue;
    auto missing = [&](const char* side) {
      // Name the vertex that carries arcs; at a seam that is the one on the
      // opposite edge of the domain.
      std::size_t v = bp.vertices.front();
      for (std::size_t cand : bp.vertices) {
        if (degree[cand] > 0) v = cand;
      }
      std::vector<std::size_t> arcs = bp.left;
      arcs.insert(arcs.end(), bp.right.begin(), bp.right.end());
      out.push_back({ViolationKind::LowerSemicontinuity,
                     std::string("vertex #") + std::to_string(v) + " at " +
                         point_str(vs[v].x, vs[v].y) + ": no arc approaches from the " +
                         side,
                     v,
                     std::move(arcs),
                     vs[v].x});
    };
    if (bp.needs_left && bp.left.empty()) missing("left");
    if (bp.needs_right && bp.right.empty()) missing("right");
  }

  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    for (std::size_t b = a + 1; b < f.arc_count(); ++b) check_pair(f, a, b, out);
  }

  auto check_count = [&](const Rational& x, const std::string& where) {
    auto k = static_cast<int>(values_at(f, x).size());
    if (k < 1 || k > f.n()) {
      out.push_back({ViolationKind::CardinalityBound,
                     "fiber " + where + " has " + std::to_string(k) +
                         " points, outside [1, " + std::to_string(f.n()) + "]",
                     std::nullopt,
                     {},
                     x});
    }
  };
  auto xs = f.breakpoints();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    check_count(xs[i], "at x = " + xs[i].str());
    if (i + 1 < xs.size()) {
      check_count((xs[i] + xs[i + 1]) / Rational(2),
                  "on (" + xs[i].str() + ", " + xs[i + 1].str() + ")");
    }
  }
  return report;
}

std::vector<CirclePoint> values_at(const PLMultimap& f, const Rational& x) {
  std::vector<CirclePoint> ys;
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    if (f.spans(a, x)) ys.push_back(f.y_at(a, x));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

Configuration evaluate(const PLMultimap& f, const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("evaluate: x = " + x.str() + " outside [0,1]");
  }
  auto ys = values_at(f, x);
  if (ys.empty()) {
    throw PreconditionError("evaluate: empty fiber at x = " + x.str());
  }
  return Configuration(std::move(ys));
}

bool ProfileSegment::contains(const Rational& x) const {
  bool above = lo_closed ? lo <= x : lo < x;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string ProfileSegment::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() +
         (hi_closed ? "]" : ")") + ": " + std::to_string(count);
}

std::set<int> CardinalityProfile::counts() const {
  std::set<int> out;
  for (const auto& s : segments) out.insert(s.count);
  return out;
}

int CardinalityProfile::count_at(const Rational& x) const {
  for (const auto& s : segments) {
    if (s.contains(x)) return s.count;
  }
  throw std::domain_error("count_at: x = " + x.str() + " outside [0,1]");
}

CardinalityProfile cardinality_profile(const PLMultimap& f) {
  // Atoms alternate: the point xs[0], the open interval (xs[0], xs[1]), the
  // point xs[1], ... Equal neighbours are merged.
  auto xs = f.breakpoints();
  std::vector<ProfileSegment> atoms;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    atoms.push_back({xs[i], xs[i], true, true,
                     static_cast<int>(values_at(f, xs[i]).size())});
    if (i + 1 < xs.size()) {
      Rational mid = (xs[i] + xs[i + 1]) / Rational(2);
      atoms.push_back({xs[i], xs[i + 1], false, false,
                       static_cast<int>(values_at(f, mid).size())});
    }
  }
  CardinalityProfile profile;
  for (auto& atom : atoms) {
    if (!profile.segments.empty() && profile.segments.back().count == atom.count) {
      profile.segments.back().hi = atom.hi;
      profile.segments.back().hi_closed = atom.hi_closed;
    } else {
      profile.segments.push_back(atom);
    }
  }
  return profile;
}

bool is_equicardinal(const PLMultimap& f) {
  return cardinality_profile(f).segments.size() == 1;
}

bool is_one_n_valued(const PLMultimap& f) {
  for (int k : cardinality_profile(f).counts()) {
    if (k != 1 && k != f.n()) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> component_arcs(const PLMultimap& f) {
  const auto& vs = f.vertices();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& arc : f.arcs()) unite(arc.from, arc.to);
  for (const auto& bp : branch_points(f)) {
    for (std::size_t v : bp.vertices) unite(bp.vertices.front(), v);
  }

  std::map<std::size_t, std::size_t> slot;  // root -> component index
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    auto root = find(f.arcs()[a].from);
    auto [it, inserted] = slot.try_emplace(root, out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(a);
  }
  return out;
}

std::vector<PLMultimap> components(const PLMultimap& f) {
  std::vector<PLMultimap> out;
  for (const auto& arc_ids : component_arcs(f)) {
    std::set<std::size_t> used;
    for (auto a : arc_ids) {
      used.insert(f.arcs()[a].from);
      used.insert(f.arcs()[a].to);
    }
    std::map<std::size_t, std::size_t> remap;
    std::vector<Vertex> vertices;
    for (auto v : used) {
      remap[v] = vertices.size();
      vertices.push_back(f.vertices()[v]);
    }
    std::vector<Arc> arcs;
    for (auto a : arc_ids) {
      Arc arc = f.arcs()[a];
      arc.from = remap[arc.from];
      arc.to = remap[arc.to];
      arcs.push_back(std::move(arc));
    }
    out.emplace_back(f.n(), f.domain(), std::move(vertices), std::move(arcs));
  }
  return out;
}

UnionCheck union_check(const PLMultimap& f) {
  auto parts = components(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_equicardinal(parts[i])) return {UnionVerdict::Inconclusive, i};
  }
  return {UnionVerdict::Sufficient, std::nullopt};
}

}  // namespace cn
