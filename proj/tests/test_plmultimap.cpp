#include <catch_amalgamated.hpp>

#include <fstream>

#include "cn/error.hpp"
#include "cn/map_io.hpp"
#include "cn/plmultimap.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cn;
using cn::testing::fixture;

namespace {

Rational q(std::string_view s) { return Rational::parse(s); }

Vertex v(std::string_view x, std::string_view y) { return {q(x), q(y)}; }

Arc arc(std::size_t from, std::size_t to, std::int64_t lift = 0) {
  Arc a;
  a.from = from;
  a.to = to;
  a.lift = lift;
  return a;
}

Configuration config(std::initializer_list<const char*> ys) {
  std::vector<CirclePoint> ps;
  for (auto y : ys) ps.emplace_back(q(y));
  return Configuration(std::move(ps));
}

}  // namespace

TEST_CASE("fixture verdicts match the validator") {
  for (const auto& name : testing::fixture_names()) {
    std::ifstream in(testing::fixture_path(name));
    auto j = Json::parse(in);
    INFO(name);
    CHECK(validate(map_from_json(j)).valid() == (j.at("verdict") == "valid"));
  }
}

TEST_CASE("usc but not lsc map is flagged at the dangling vertex") {
  auto report = validate(fixture("usc_not_lsc.json"));
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations.front();
  CHECK(v.kind == ViolationKind::LowerSemicontinuity);
  CHECK(v.vertex == std::optional<std::size_t>(4));
  CHECK(v.x == std::optional<Rational>(q("1/2")));
}

TEST_CASE("validator catches each structural defect") {
  SECTION("vertical arc") {
    PLMultimap f(1, DomainKind::Interval, {v("0", "0"), v("0", "1/2")}, {arc(0, 1)});
    CHECK(validate(f).has(ViolationKind::VerticalArc));
  }
  SECTION("duplicate and isolated vertices") {
    PLMultimap f(2, DomainKind::Interval,
                 {v("0", "0"), v("1", "0"), v("1", "0"), v("1/2", "1/2")},
                 {arc(0, 1)});
    auto r = validate(f);
    CHECK(r.has(ViolationKind::DuplicateVertex));
    CHECK(r.has(ViolationKind::IsolatedVertex));
  }
  SECTION("crossing without a vertex") {
    PLMultimap f(2, DomainKind::Interval,
                 {v("0", "0"), v("1", "1/2"), v("0", "1/2"), v("1", "0")},
                 {arc(0, 1), arc(2, 3)});
    auto r = validate(f);
    REQUIRE(r.has(ViolationKind::ArcIntersection));
    CHECK(r.violations.front().x == std::optional<Rational>(q("1/2")));
  }
  SECTION("crossing across the seam is seen mod 1") {
    // y = 0 and the once-lifted y = 3/4 + x meet at x = 1/4.
    PLMultimap f(2, DomainKind::Interval,
                 {v("0", "0"), v("1", "0"), v("0", "3/4"), v("1", "3/4")},
                 {arc(0, 1), arc(2, 3, 1)});
    CHECK(validate(f).has(ViolationKind::ArcIntersection));
  }
  SECTION("too many points") {
    PLMultimap f(1, DomainKind::Interval,
                 {v("0", "0"), v("1", "0"), v("0", "1/2"), v("1", "1/2")},
                 {arc(0, 1), arc(2, 3)});
    CHECK(validate(f).has(ViolationKind::CardinalityBound));
    CHECK(validate(f.with_bound(2)).valid());
  }
  SECTION("empty fiber") {
    PLMultimap f(1, DomainKind::Interval, {v("0", "0"), v("1/2", "0")}, {arc(0, 1)});
    CHECK(validate(f).has(ViolationKind::CardinalityBound));
  }
  SECTION("seam sides must match on a circle") {
    PLMultimap f(1, DomainKind::Circle, {v("0", "0"), v("1", "1/2")}, {arc(0, 1)});
    CHECK(validate(f).has(ViolationKind::LowerSemicontinuity));
    CHECK(validate(PLMultimap(1, DomainKind::Interval, f.vertices(), f.arcs())).valid());
  }
}

TEST_CASE("evaluation of the fork map") {
  auto f = fixture("fork.json");
  CHECK(evaluate(f, q("0")) == config({"0", "1/2"}));
  CHECK(evaluate(f, q("1/3")) == config({"0", "1/2"}));
  CHECK(evaluate(f, q("1/2")) == config({"0", "1/4", "1/2"}));
  CHECK(evaluate(f, q("2/3")) == config({"0", "1/2"}));
  CHECK_THROWS_AS(evaluate(f, q("3/2")), std::domain_error);
}

TEST_CASE("cardinality profile of the 1,2,3-valued union") {
  auto f = fixture("union123.json");
  auto p = cardinality_profile(f);
  REQUIRE(p.segments.size() == 3);
  CHECK(p.segments[0].str() == "[0, 0]: 1");
  CHECK(p.segments[1].str() == "(0, 1/2]: 2");
  CHECK(p.segments[2].str() == "(1/2, 1]: 3");
  CHECK(p.count_at(q("1/2")) == 2);
  CHECK_FALSE(is_equicardinal(f));
  CHECK_FALSE(is_one_n_valued(f));
  CHECK(union_check(f).verdict == UnionVerdict::Inconclusive);
}

TEST_CASE("fork map has fibers of 2 and 3 points") {
  auto f = fixture("fork.json");
  CHECK(cardinality_profile(f).counts() == std::set<int>{2, 3});
  CHECK_FALSE(is_one_n_valued(f));
  auto id = fixture("identity.json");
  CHECK(is_equicardinal(id));
  CHECK(is_one_n_valued(id));
}

TEST_CASE("components glue across the seam") {
  auto half = fixture("half_turn.json");
  CHECK(components(half).size() == 1);
  CHECK(union_check(half).verdict == UnionVerdict::Sufficient);
  PLMultimap on_interval(2, DomainKind::Interval, half.vertices(), half.arcs());
  CHECK(components(on_interval).size() == 2);
  CHECK(components(fixture("two_loops.json")).size() == 1);
  CHECK(union_check(fixture("two_loops.json")).verdict == UnionVerdict::Inconclusive);
}

TEST_CASE("branch points list arcs on each side") {
  auto f = fixture("fork.json");
  auto points = branch_points(f);
  auto it = std::find_if(points.begin(), points.end(), [](const BranchPoint& bp) {
    return bp.x == Rational::parse("1/3");
  });
  REQUIRE(it != points.end());
  CHECK(it->left.size() == 1);
  CHECK(it->right.size() == 2);
  CHECK_FALSE(it->seam);
  auto seam = std::count_if(points.begin(), points.end(),
                            [](const BranchPoint& bp) { return bp.seam; });
  CHECK(seam == 2);
}

TEST_CASE("map files round-trip") {
  for (const auto& name : testing::fixture_names()) {
    auto f = fixture(name);
    INFO(name);
    CHECK(map_from_json(map_to_json(f)) == f);
  }
}

TEST_CASE("malformed map files are structural errors") {
  auto base = map_to_json(fixture("identity.json"));
  auto broken = [&](auto edit) {
    Json j = base;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(map_from_json(broken([](Json& j) { j.erase("n"); })), StructuralError);
  CHECK_THROWS_AS(map_from_json(broken([](Json& j) { j["domain"] = "torus"; })),
                  StructuralError);
  CHECK_THROWS_AS(map_from_json(broken([](Json& j) { j["vertices"][0][0] = "x/2"; })),
                  StructuralError);
  CHECK_THROWS_AS(map_from_json(broken([](Json& j) { j["arcs"][0]["to"] = 7; })),
                  StructuralError);
  CHECK_THROWS_AS(map_from_json(broken([](Json& j) { j["arcs"][0]["weight"] = 0; })),
                  StructuralError);
  CHECK_THROWS_AS(load_map(testing::fixture_path("missing.json")), StructuralError);
}

TEST_CASE("graphs of random sheets are valid and evaluate like the sheets") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto domain = trial % 2 ? DomainKind::Circle : DomainKind::Interval;
    auto sheets = trial % 4 < 2 ? testing::random_crossing_sheets(rng, 1 + trial % 4, domain)
                                : testing::random_band_sheets(rng, 1 + trial % 3, domain);
    auto g = sheets_to_graph(sheets.n, domain, sheets.nfold().sheets);
    auto report = validate(g);
    INFO("trial " << trial << ": " << map_to_json(g).dump());
    REQUIRE(report.valid());
    for (const auto& x : testing::random_samples(rng, 20)) {
      REQUIRE(evaluate(g, x) == Configuration(testing::sheet_values(sheets, x)));
    }
  }
}
