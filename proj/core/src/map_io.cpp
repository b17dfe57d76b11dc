#include "cn/map_io.hpp"

#include <fstream>
#include <limits>

#include "cn/error.hpp"

namespace cn {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw StructuralError("expected a rational (\"p/q\" string or integer), got " +
                        j.dump());
}

Json rational_to_json(const Rational& r) { return r.str(); }

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw StructuralError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw StructuralError(std::string(what) + " must be an integer, got " + j.dump());
  }
  return j.get<std::int64_t>();
}

std::size_t index(const Json& j, const char* what) {
  auto v = integer(j, what);
  if (v < 0) throw StructuralError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json point_json(const Rational& x, const CirclePoint& y) {
  return Json::array({rational_to_json(x), rational_to_json(y.value())});
}

}  // namespace

PLMultimap map_from_json(const Json& j) {
  try {
    auto n = integer(require(j, "n"), "n");
    auto domain_name = require(j, "domain").get<std::string>();
    DomainKind domain;
    if (domain_name == "interval") {
      domain = DomainKind::Interval;
    } else if (domain_name == "circle") {
      domain = DomainKind::Circle;
    } else {
      throw StructuralError("domain must be \"interval\" or \"circle\"");
    }
    std::vector<Vertex> vertices;
    for (const auto& v : require(j, "vertices")) {
      if (!v.is_array() || v.size() != 2) {
        throw StructuralError("vertex must be a pair [x, y], got " + v.dump());
      }
      vertices.push_back({rational_from_json(v[0]), CirclePoint(rational_from_json(v[1]))});
    }
    std::vector<Arc> arcs;
    for (const auto& a : require(j, "arcs")) {
      Arc arc;
      arc.from = index(require(a, "from"), "arc \"from\"");
      arc.to = index(require(a, "to"), "arc \"to\"");
      if (a.contains("weight")) arc.weight = integer(a["weight"], "arc \"weight\"");
      if (a.contains("lift")) arc.lift = integer(a["lift"], "arc \"lift\"");
      if (a.contains("name")) arc.name = a["name"].get<std::string>();
      arcs.push_back(std::move(arc));
    }
    if (n < 1 || n > std::numeric_limits<int>::max()) {
      throw StructuralError("n must be a positive integer");
    }
    return PLMultimap(static_cast<int>(n), domain, std::move(vertices), std::move(arcs));
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed map: ") + e.what());
  }
}

Json map_to_json(const PLMultimap& f) {
  Json j;
  j["n"] = f.n();
  j["domain"] = to_string(f.domain());
  j["vertices"] = Json::array();
  for (const auto& v : f.vertices()) j["vertices"].push_back(point_json(v.x, v.y));
  j["arcs"] = Json::array();
  for (const auto& a : f.arcs()) {
    Json arc{{"from", a.from}, {"to", a.to}, {"lift", a.lift}};
    if (a.weight) arc["weight"] = *a.weight;
    if (!a.name.empty()) arc["name"] = a.name;
    j["arcs"].push_back(std::move(arc));
  }
  return j;
}

PLMultimap load_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read map file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw StructuralError("cannot parse " + path.string() + ": " + e.what());
  }
  return map_from_json(j);
}

Json nfold_to_json(const NFoldMap& g) {
  Json j;
  j["n"] = g.n;
  j["domain"] = to_string(g.domain);
  j["monodromy"] = Json::array();
  for (auto m : g.monodromy) j["monodromy"].push_back(m + 1);
  j["cycles"] = g.monodromy_cycles();
  j["sheets"] = Json::array();
  for (const auto& s : g.sheets) {
    Json knots = Json::array();
    for (const auto& k : s.knots()) {
      knots.push_back(Json::array({rational_to_json(k.x), rational_to_json(k.y)}));
    }
    j["sheets"].push_back(std::move(knots));
  }
  return j;
}

Json sp_to_json(const SPMap& g) {
  Json j = map_to_json(g.graph);
  j["index"] = g.n;
  return j;
}

Json profile_to_json(const CardinalityProfile& p) {
  Json out = Json::array();
  for (const auto& s : p.segments) {
    out.push_back({{"interval", (s.lo_closed ? "[" : "(") + s.lo.str() + ", " +
                                    s.hi.str() + (s.hi_closed ? "]" : ")")},
                   {"count", s.count}});
  }
  return out;
}

Json validation_to_json(const PLMultimap& f, const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid();
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json item{{"kind", to_string(v.kind)}, {"message", v.message}};
    if (v.vertex) {
      item["vertex"] = *v.vertex;
      const auto& p = f.vertices()[*v.vertex];
      item["at"] = point_json(p.x, p.y);
    }
    if (v.x) item["x"] = rational_to_json(*v.x);
    j["violations"].push_back(std::move(item));
  }
  return j;
}

Json certificate_to_json(const BalanceSystem& sys, const WeightCertificate& cert) {
  Json j;
  if (cert.feasible()) {
    j["status"] = "feasible";
    j["weights"] = Json::object();
    for (std::size_t a = 0; a < cert.weights.size(); ++a) {
      j["weights"][sys.arc_labels[a]] = cert.weights[a];
    }
    j["index"] = cert.index;
    return j;
  }
  j["status"] = "infeasible";
  j["witness"] = Json::array();
  for (const auto& [e, mult] : cert.witness.multipliers) {
    const auto& eq = sys.equations[e];
    j["witness"].push_back({{"vertex", point_json(eq.x, eq.y)},
                            {"seam", eq.seam},
                            {"multiplier", big_to_json(mult)},
                            {"equation", sys.describe(e)}});
  }
  std::string combined;
  for (std::size_t a = 0; a < cert.witness.combined.size(); ++a) {
    const auto& c = cert.witness.combined[a];
    if (c == 0) continue;
    if (!combined.empty()) combined += " + ";
    combined += (c == 1 ? "" : c.str() + "*") + sys.arc_labels[a];
  }
  j["combined"] = combined + " = 0";
  j["forced_zero"] = Json::array();
  for (auto a : cert.witness.forced_zero) j["forced_zero"].push_back(sys.arc_labels[a]);
  return j;
}

}  // namespace cn
