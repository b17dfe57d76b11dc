#include <catch_amalgamated.hpp>

#include "cn/error.hpp"
#include "cn/lp.hpp"
#include "cn/weights.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cn;
using cn::testing::fixture;

namespace {

Rational q(std::string_view s) { return Rational::parse(s); }

std::size_t arc_named(const PLMultimap& f, const std::string& name) {
  for (std::size_t a = 0; a < f.arc_count(); ++a) {
    if (f.arc_label(a) == name) return a;
  }
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("exact LP solver on small problems") {
  SECTION("optimum at a vertex") {
    // min x + 2y subject to x + y = 3, x - y = 1
    lp::Problem p{{{1, 1}, {1, -1}}, {3, 1}, {1, 2}};
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.x == std::vector<Rational>{2, 1});
    CHECK(s.objective == Rational(4));
  }
  SECTION("infeasible") {
    lp::Problem p{{{1, 1}}, {-1}, {0, 0}};
    CHECK(lp::solve(p).status == lp::Status::Infeasible);
  }
  SECTION("unbounded") {
    lp::Problem p{{{1, -1}}, {0}, {-1, 0}};
    CHECK(lp::solve(p).status == lp::Status::Unbounded);
  }
  SECTION("redundant rows") {
    lp::Problem p{{{1, 1}, {2, 2}}, {1, 2}, {q("1/3"), 1}};
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.objective == q("1/3"));
  }
}

TEST_CASE("balance equations of the fork map") {
  auto f = fixture("fork.json");
  auto sys = balance_constraints(f);
  REQUIRE(sys.equations.size() == 4);
  CHECK(sys.describe(0) == "bottomLeft = bottomRight + diag at (1/3, 0)");
  CHECK(sys.describe(1) == "diag + midLeft = midRight at (2/3, 1/2)");
  CHECK(sys.describe(2) == "bottomRight = bottomLeft at (0, 0) [seam]");
  CHECK(sys.describe(3) == "midRight = midLeft at (0, 1/2) [seam]");
}

TEST_CASE("fork map has no positive weights and the witness is checkable") {
  auto f = fixture("fork.json");
  auto sys = balance_constraints(f);
  auto cert = solve_positive(sys);
  REQUIRE_FALSE(cert.feasible());
  CHECK(verify_witness(sys, cert.witness));
  REQUIRE(cert.witness.forced_zero.size() == 1);
  CHECK(cert.witness.forced_zero[0] == arc_named(f, "diag"));
  CHECK_FALSE(testing::brute_force_weights(sys, 6).has_value());
}

TEST_CASE("two loops map gets the minimal weights") {
  auto f = fixture("two_loops.json");
  auto cert = solve_positive(balance_constraints(f));
  REQUIRE(cert.feasible());
  CHECK(cert.weights == std::vector<std::int64_t>{1, 1, 2, 1, 1});
  CHECK(cert.index == 2);
  CHECK(verify_certificate(f, cert));
}

TEST_CASE("union with 1, 2 and 3 point fibers is weightable with index 3") {
  auto f = fixture("union123.json");
  auto cert = solve_positive(balance_constraints(f));
  REQUIRE(cert.feasible());
  CHECK(cert.index == 3);
  CHECK(cert.weights[arc_named(f, "diagLower")] == 2);
  CHECK(verify_certificate(f, cert));
}

TEST_CASE("identity has an empty system") {
  auto f = fixture("identity.json");
  auto sys = balance_constraints(f);
  CHECK(sys.equations.empty());
  auto cert = solve_positive(sys);
  REQUIRE(cert.feasible());
  CHECK(cert.weights == std::vector<std::int64_t>{1});
  CHECK(cert.index == 1);
}

TEST_CASE("point weights and weighted index") {
  auto f = fixture("two_loops.json").with_weights(std::vector<std::int64_t>{1, 1, 2, 1, 1});
  auto at_half = point_weights(f, q("1/2"));
  REQUIRE(at_half.size() == 1);
  CHECK(at_half.begin()->second == 2);
  CHECK(weighted_index(f) == 2);
  auto bad = fixture("two_loops.json").with_weights(std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(weighted_index(bad), PreconditionError);
}

TEST_CASE("certificate checks reject tampering") {
  auto f = fixture("two_loops.json");
  auto sys = balance_constraints(f);
  auto cert = solve_positive(sys);
  auto wrong = cert;
  wrong.weights[2] = 3;
  CHECK_FALSE(verify_certificate(f, wrong));
  wrong = cert;
  wrong.index = 4;
  CHECK_FALSE(verify_certificate(f, wrong));

  auto fork = balance_constraints(fixture("fork.json"));
  auto witness = solve_positive(fork).witness;
  witness.multipliers[0].second *= -1;
  CHECK_FALSE(verify_witness(fork, witness));
}

TEST_CASE("solver agrees with brute force on random systems") {
  testing::Rng rng(31);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto arcs = static_cast<std::size_t>(2 + trial % 5);
    auto sys = testing::random_system(rng, arcs, 1 + static_cast<std::size_t>(trial % 3));
    auto cert = solve_positive(sys);
    auto oracle = testing::brute_force_weights(sys, 6);
    INFO("trial " << trial);
    if (oracle) REQUIRE(cert.feasible());
    if (cert.feasible()) {
      ++feasible;
      REQUIRE(cert.weights.size() == arcs);
      REQUIRE(std::all_of(cert.weights.begin(), cert.weights.end(),
                          [](auto w) { return w >= 1; }));
      REQUIRE(sys.satisfied_by(cert.weights));
    } else {
      ++infeasible;
      REQUIRE(verify_witness(sys, cert.witness));
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("graphs built from sheets carry their sheet counts as weights") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    auto domain = trial % 2 ? DomainKind::Circle : DomainKind::Interval;
    auto sheets = testing::random_crossing_sheets(rng, 1 + trial % 3, domain);
    auto g = sheets_to_graph(sheets.n, domain, sheets.nfold().sheets);
    auto sys = balance_constraints(g);
    INFO("trial " << trial);
    REQUIRE(sys.satisfied_by(g.weights()));
    REQUIRE(weighted_index(g) == sheets.n);
    auto cert = solve_positive(balance_constraints(g.without_weights()));
    REQUIRE(cert.feasible());
    REQUIRE(verify_certificate(g, cert));
  }
}

TEST_CASE("equicardinal maps take the all-ones weights") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    auto domain = trial % 2 ? DomainKind::Circle : DomainKind::Interval;
    auto sheets = testing::random_band_sheets(rng, 1 + trial % 4, domain);
    auto g = sheets_to_graph(sheets.n, domain, sheets.nfold().sheets).without_weights();
    REQUIRE(is_equicardinal(g));
    auto sys = balance_constraints(g);
    std::vector<std::int64_t> ones(g.arc_count(), 1);
    REQUIRE(sys.satisfied_by(ones));
    auto cert = solve_positive(sys);
    REQUIRE(cert.feasible());
    REQUIRE(cert.weights == ones);
    REQUIRE(cert.index == sheets.n);
  }
}

TEST_CASE("multiples of a feasible certificate stay valid") {
  for (const char* name : {"two_loops.json", "union123.json", "half_turn.json"}) {
    auto f = fixture(name);
    auto cert = solve_positive(balance_constraints(f));
    REQUIRE(cert.feasible());
    for (std::int64_t k = 1; k <= 5; ++k) {
      auto scaled = cert;
      for (auto& w : scaled.weights) w *= k;
      scaled.index *= k;
      INFO(name << " times " << k);
      CHECK(verify_certificate(f, scaled));
    }
  }
}
