#include "cn/conversions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cn/error.hpp"
#include "cn/weights.hpp"

namespace cn {

SheetPath::SheetPath(std::vector<SheetKnot> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2 || knots_.front().x != Rational(0) ||
      knots_.back().x != Rational(1)) {
    throw StructuralError("sheet path must run from x = 0 to x = 1");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1].x < knots_[i].x)) {
      throw StructuralError("sheet knots must strictly increase in x");
    }
  }
}

Rational SheetPath::lifted_at(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("sheet path: x = " + x.str() + " outside [0,1]");
  }
  auto it = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const SheetKnot& k, const Rational& v) { return k.x < v; });
  if (it->x == x) return it->y;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.y + (x - lo.x) / (hi.x - lo.x) * (hi.y - lo.y);
}

void NFoldMap::check() const {
  if (n < 1 || sheets.size() != static_cast<std::size_t>(n) ||
      monodromy.size() != sheets.size()) {
    throw StructuralError("n-fold map needs exactly n sheets and an n-element monodromy");
  }
  std::vector<bool> seen(monodromy.size(), false);
  for (auto m : monodromy) {
    if (m >= monodromy.size() || seen[m]) {
      throw StructuralError("monodromy is not a permutation");
    }
    seen[m] = true;
  }
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    if (domain == DomainKind::Interval) {
      if (monodromy[i] != i) {
        throw StructuralError("interval domain requires the identity monodromy");
      }
      continue;
    }
    if (sheets[i].at(Rational(1)) != sheets[monodromy[i]].at(Rational(0))) {
      throw StructuralError("sheet " + std::to_string(i + 1) +
                            " does not close up with its monodromy image");
    }
  }
}

std::vector<CirclePoint> NFoldMap::sheet_values(const Rational& x) const {
  std::vector<CirclePoint> out;
  for (const auto& s : sheets) out.push_back(s.at(x));
  return out;
}

MultisetConfiguration NFoldMap::multiset_at(const Rational& x) const {
  std::vector<MultisetConfiguration::Entry> entries;
  for (const auto& y : sheet_values(x)) entries.emplace_back(y, 1);
  return MultisetConfiguration(std::move(entries));
}

Configuration NFoldMap::evaluate(const Rational& x) const {
  return Configuration(sheet_values(x));
}

std::string NFoldMap::monodromy_cycles() const {
  std::string out;
  std::vector<bool> done(monodromy.size(), false);
  for (std::size_t i = 0; i < monodromy.size(); ++i) {
    if (done[i]) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = monodromy[j];
    }
    out += ")";
  }
  return out;
}

MultisetConfiguration SPMap::multiset_at(const Rational& x) const {
  std::vector<MultisetConfiguration::Entry> entries;
  for (const auto& [y, w] : point_weights(graph, x)) {
    entries.emplace_back(y, static_cast<int>(w));
  }
  return MultisetConfiguration(std::move(entries));
}

Configuration SPMap::evaluate(const Rational& x) const {
  return cn::evaluate(graph, x);
}

NFoldMap union_to_nfold(const PLMultimap& f) {
  if (!validate(f).valid()) {
    throw PreconditionError("union_to_nfold: map is not valid");
  }
  auto check = union_check(f);
  if (check.verdict != UnionVerdict::Sufficient) {
    auto arcs = component_arcs(f)[*check.component];
    std::string names;
    for (auto a : arcs) names += (names.empty() ? "" : ", ") + f.arc_label(a);
    std::string profile;
    for (const auto& s : cardinality_profile(components(f)[*check.component]).segments) {
      profile += (profile.empty() ? "" : "; ") + s.str();
    }
    throw PreconditionError("union_to_nfold: component " +
                            std::to_string(*check.component) + " (arcs " + names +
                            ") has non-constant fiber cardinality: " + profile);
  }

  auto points = branch_points(f);
  std::vector<std::size_t> point_of(f.vertices().size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (auto v : points[p].vertices) point_of[v] = p;
  }
  auto unique_right = [&](const BranchPoint& bp) {
    if (bp.right.size() != 1) {
      throw std::logic_error("constant fiber but branching at (" + bp.x.str() +
                             ", " + bp.y.str() + ")");
    }
    return bp.right.front();
  };

  NFoldMap g;
  g.domain = f.domain();
  std::vector<CirclePoint> starts;
  for (const auto& bp : points) {
    if (bp.x != Rational(0) || bp.right.empty()) continue;
    starts.push_back(bp.y);
    std::vector<SheetKnot> knots{{Rational(0), bp.y.value()}};
    std::size_t arc = unique_right(bp);
    for (;;) {
      const auto& s = f.start(arc);
      const auto& e = f.end(arc);
      Rational delta = e.y.value() + Rational(f.arcs()[arc].lift) - s.y.value();
      knots.push_back({e.x, knots.back().y + delta});
      if (e.x == Rational(1)) break;
      arc = unique_right(points[point_of[f.arcs()[arc].to]]);
    }
    g.sheets.emplace_back(std::move(knots));
  }
  g.n = static_cast<int>(g.sheets.size());
  g.monodromy.resize(g.sheets.size());
  std::iota(g.monodromy.begin(), g.monodromy.end(), 0);
  if (g.domain == DomainKind::Circle) {
    for (std::size_t i = 0; i < g.sheets.size(); ++i) {
      auto end = g.sheets[i].at(Rational(1));
      auto it = std::find(starts.begin(), starts.end(), end);
      if (it == starts.end()) {
        throw std::logic_error("sheet does not return to the fiber over the seam");
      }
      g.monodromy[i] = static_cast<std::size_t>(it - starts.begin());
    }
  }
  g.check();
  return g;
}

PLMultimap sheets_to_graph(int n, DomainKind domain,
                           const std::vector<SheetPath>& sheets) {
  std::vector<Rational> xs{Rational(0), Rational(1)};
  for (const auto& s : sheets) {
    for (const auto& k : s.knots()) xs.push_back(k.x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Add every x where two sheets meet inside a gap.
  std::vector<Rational> meets;
  for (std::size_t g = 0; g + 1 < xs.size(); ++g) {
    const auto& a = xs[g];
    const auto& b = xs[g + 1];
    for (std::size_t i = 0; i < sheets.size(); ++i) {
      for (std::size_t j = i + 1; j < sheets.size(); ++j) {
        Rational da = sheets[i].lifted_at(a) - sheets[j].lifted_at(a);
        Rational db = sheets[i].lifted_at(b) - sheets[j].lifted_at(b);
        if (da == db) continue;
        Rational lo = min(da, db);
        Rational hi = max(da, db);
        for (BigInt k = -((-lo).floor()); Rational(k) <= hi; ++k) {
          Rational x = a + (Rational(k) - da) / (db - da) * (b - a);
          if (a < x && x < b) meets.push_back(x);
        }
      }
    }
  }
  xs.insert(xs.end(), meets.begin(), meets.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Vertex> vertices;
  std::map<std::pair<Rational, CirclePoint>, std::size_t> vertex_index;
  auto vertex = [&](const Rational& x, const CirclePoint& y) {
    auto [it, inserted] = vertex_index.try_emplace({x, y}, vertices.size());
    if (inserted) vertices.push_back({x, y});
    return it->second;
  };

  std::vector<Arc> arcs;
  for (std::size_t g = 0; g + 1 < xs.size(); ++g) {
    const auto& a = xs[g];
    const auto& b = xs[g + 1];
    // (start point, lifted rise) -> number of sheets on that piece
    std::map<std::pair<CirclePoint, Rational>, std::int64_t> pieces;
    for (const auto& s : sheets) {
      Rational ya = s.lifted_at(a);
      ++pieces[{CirclePoint(ya), s.lifted_at(b) - ya}];
    }
    for (const auto& [key, count] : pieces) {
      const auto& [start, rise] = key;
      Rational end = start.value() + rise;
      Arc arc;
      arc.from = vertex(a, start);
      arc.to = vertex(b, CirclePoint(end));
      arc.lift = static_cast<std::int64_t>(end.floor());
      arc.weight = count;
      arcs.push_back(std::move(arc));
    }
  }
  return PLMultimap(n, domain, std::move(vertices), std::move(arcs));
}

SPMap nfold_to_sp(const NFoldMap& g) {
  g.check();
  return SPMap{g.n, sheets_to_graph(g.n, g.domain, g.sheets)};
}

SPMap weighted_to_sp(const PLMultimap& f) {
  for (std::size_t a = 0; a < f.arc_count(); ++a) f.weight(a);
  auto sys = balance_constraints(f);
  auto w = f.weights();
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    const auto& eq = sys.equations[e];
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (auto a : eq.left) lhs += w[a];
    for (auto a : eq.right) rhs += w[a];
    if (lhs != rhs) {
      throw PreconditionError("unbalanced weights: " + sys.describe(e) + " has " +
                              std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  }
  return SPMap{static_cast<int>(weighted_index(f)), f};
}

PLMultimap sp_to_weighted(const SPMap& g) { return g.graph; }

SPMap at_most_two_to_sp(const PLMultimap& f) {
  if (!validate(f).valid()) {
    throw PreconditionError("at_most_two_to_sp: map is not valid");
  }
  auto counts = cardinality_profile(f).counts();
  if (*counts.rbegin() > 2) {
    throw PreconditionError("at_most_two_to_sp: some fiber has more than two points");
  }
  std::vector<std::int64_t> w;
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    Rational mid = (f.start(a).x + f.end(a).x) / Rational(2);
    w.push_back(values_at(f, mid).size() == 1 ? 2 : 1);
  }
  auto sp = weighted_to_sp(f.with_weights(w));
  if (sp.n != 2) {
    throw std::logic_error("at_most_two_to_sp produced index " + std::to_string(sp.n));
  }
  return sp;
}

}  // namespace cn
