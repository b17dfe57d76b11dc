#include <catch_amalgamated.hpp>

#include <array>

#include "cn/presentation.hpp"
#include "generators.hpp"

using namespace cn;

namespace {

using Mat = std::array<std::int64_t, 4>;

Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Sanov's faithful representation of the free group on two generators.
Mat image(const Word& w) {
  static const Mat gens[2][2] = {{{1, 2, 0, 1}, {1, -2, 0, 1}}, {{1, 0, 2, 1}, {1, 0, -2, 1}}};
  Mat m{1, 0, 0, 1};
  for (const auto& l : w) m = mul(m, gens[l.generator][l.exponent > 0 ? 0 : 1]);
  return m;
}

Word random_word(testing::Rng& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  for (std::size_t i = len(rng); i > 0; --i) {
    w.push_back({static_cast<std::size_t>(bit(rng)), bit(rng) ? 1 : -1});
  }
  return w;
}

bool freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

Word word(std::initializer_list<std::pair<std::size_t, int>> letters) {
  Word w;
  for (auto [g, e] : letters) w.push_back({g, e});
  return w;
}

}  // namespace

TEST_CASE("free reduction preserves the group element") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = random_word(rng, 10);
    auto r = free_reduce(w);
    REQUIRE(freely_reduced(r));
    REQUIRE(image(r) == image(w));
    REQUIRE(free_reduce(r) == r);
    REQUIRE(image(free_reduce(inverse(w))) == image(inverse(r)));
    REQUIRE(free_reduce(word({})) == Word{});
  }
}

TEST_CASE("cyclic reduction yields a conjugate") {
  testing::Rng rng(62);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = random_word(rng, 10);
    auto c = cyclic_reduce(w);
    REQUIRE(freely_reduced(c));
    if (c.size() > 1) REQUIRE_FALSE(c.front() == c.back().inverse());
    // c = u^-1 w u for the prefix u that was stripped: trace is a conjugation invariant.
    auto m = image(w);
    auto n = image(c);
    REQUIRE(m[0] + m[3] == n[0] + n[3]);
  }
}

TEST_CASE("words print with exponents") {
  GroupPresentation p{{"alpha", "beta"}, {}};
  CHECK(p.word_str(word({{0, 1}, {0, 1}, {1, -1}})) == "alpha^2 beta^-1");
  CHECK(p.word_str(word({{0, 1}, {1, 1}, {0, -1}})) == "alpha beta alpha^-1");
  CHECK(p.word_str({}) == "1");
}

TEST_CASE("boundary words of the two faces") {
  auto n = 5;
  std::vector<CellId> edges{{1, CellKind::NonExtremal}, {1, CellKind::Extremal}};
  // <b0,b1,b2>: all three edges non-extremal.
  CHECK(free_reduce(two_face_boundary_word(SimplexFace(n, {0, 1, 2}), edges)) ==
        word({{0, 1}}));
  // <b0,b1,b5>: the long edge <b0,b5> is extremal.
  CHECK(free_reduce(two_face_boundary_word(SimplexFace(n, {0, 1, 5}), edges)) ==
        word({{0, 1}, {0, 1}, {1, -1}}));
}

TEST_CASE("edge-path presentations") {
  CHECK(pi1_presentation(1).str() == "< beta | >");
  CHECK(pi1_presentation(2).str() == "< alpha, beta | alpha^2 beta^-1 >");
  for (int n = 3; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(pi1_presentation(n).str() == "< alpha, beta | alpha, alpha^2 beta^-1 >");
  }
}

TEST_CASE("simplifier verdicts") {
  for (int n = 1; n <= 2; ++n) {
    auto r = simplify_presentation(pi1_presentation(n));
    CHECK(r.kind == SimplifyResult::Kind::Free);
    CHECK(r.free_rank == 1);
    CHECK(r.str() == "free of rank 1");
  }
  for (int n = 3; n <= 8; ++n) {
    CHECK(simplify_presentation(pi1_presentation(n)).kind == SimplifyResult::Kind::Trivial);
  }
}

TEST_CASE("simplifier leaves hard presentations inconclusive") {
  // < a, b | a b a^-1 b^-1 > is Z^2, not free and not trivial.
  GroupPresentation p{{"a", "b"}, {word({{0, 1}, {1, 1}, {0, -1}, {1, -1}})}};
  auto r = simplify_presentation(p);
  CHECK(r.kind == SimplifyResult::Kind::Inconclusive);
  // < a | a^2 > is Z/2.
  GroupPresentation z2{{"a"}, {word({{0, 1}, {0, 1}})}};
  CHECK(simplify_presentation(z2).kind == SimplifyResult::Kind::Inconclusive);
  // < a, b | a b > is free of rank 1.
  GroupPresentation f1{{"a", "b"}, {word({{0, 1}, {1, 1}})}};
  auto r1 = simplify_presentation(f1);
  CHECK(r1.kind == SimplifyResult::Kind::Free);
  CHECK(r1.free_rank == 1);
}

TEST_CASE("presentations reject unknown generators") {
  GroupPresentation p{{"a"}, {word({{1, 1}})}};
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
}
