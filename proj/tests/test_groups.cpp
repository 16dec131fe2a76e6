#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "infhecke/groups.hpp"

using namespace infhecke;

namespace {

ReflectionGroup make(const char* spec) { return ReflectionGroup::build(parse_group(spec)); }

// Rank of g − 1 for the monomial matrix of g over Z[ζ_m], computed by
// Gaussian elimination over complex doubles. Independent of the cycle rule.
int matrix_codim(const WreathElement& g, int m) {
  const std::size_t n = g.perm.size();
  using C = std::complex<double>;
  std::vector<std::vector<C>> a(n, std::vector<C>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    // Column i of (σ,c) maps e_i to ζ^{c_i} e_{σ(i)}.
    a[g.perm[i]][i] = std::polar(1.0, 2.0 * M_PI * g.colors[i] / m);
  }
  for (std::size_t i = 0; i < n; ++i) a[i][i] -= 1.0;
  int rank = 0;
  for (std::size_t col = 0; col < n && rank < static_cast<int>(n); ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    }
    if (std::abs(a[best][col]) < 1e-9) continue;
    std::swap(a[best], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      C f = a[r][col] / a[rank][col];
      for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("parse_group aliases and errors") {
  auto s4 = parse_group("S4");
  CHECK(s4.family == Family::symmetric);
  CHECK(s4.n == 4);
  auto d5 = parse_group("D5");
  CHECK(d5.m == 2);
  CHECK(d5.p == 2);
  CHECK(d5.n == 5);
  auto a3 = parse_group("A3");
  CHECK(a3.n == 4);
  auto b3 = parse_group("B3");
  CHECK((b3.m == 2 && b3.p == 1 && b3.n == 3));
  auto i5 = parse_group("I2(5)");
  CHECK((i5.m == 5 && i5.p == 5 && i5.n == 2));
  CHECK_THROWS_AS(parse_group("G(4,1,3)"), group_error);
  CHECK_THROWS_WITH(parse_group("G(4,1,3)"), doctest::Contains("contains reflections of order > 2"));
  CHECK_THROWS_AS(parse_group("X7"), group_error);
  CHECK_THROWS_AS(parse_group("G(4,3,2)"), group_error);
  CHECK_NOTHROW(parse_group("G(4,2,3)"));
  CHECK_NOTHROW(parse_group(" G( 6 , 3 , 2 ) "));
}

TEST_CASE("G(4,1,3) really has a reflection of order 4") {
  // Brute force over the full wreath product Z/4 ≀ S_3 without the admissibility filter.
  const int m = 4;
  bool found = false;
  std::vector<std::uint8_t> perm{0, 1, 2};
  do {
    for (int code = 0; code < 64; ++code) {
      WreathElement g{perm, {static_cast<std::uint8_t>(code % 4), static_cast<std::uint8_t>(code / 4 % 4),
                             static_cast<std::uint8_t>(code / 16)}};
      if (matrix_codim(g, m) == 1 && element_order(g, m) > 2) found = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);
}

TEST_CASE("group orders and reflection counts") {
  struct Row {
    const char* spec;
    std::size_t order;
    std::size_t reflections;
  };
  for (auto [spec, order, refl] : {Row{"S4", 24, 6}, Row{"B3", 48, 9}, Row{"I2(5)", 10, 5}, Row{"D4", 192, 12},
                                   Row{"S3", 6, 3}, Row{"G(4,2,3)", 192, 15}, Row{"I2(6)", 12, 6}}) {
    CAPTURE(std::string(spec));
    auto g = make(spec);
    CHECK(g.order() == order);
    CHECK(g.reflections().size() == refl);
  }
}

TEST_CASE("identity first and codimensions") {
  auto s5 = make("S5");
  CHECK(s5.element(0) == WreathElement::identity(5));
  CHECK(s5.codim_fixed(0) == 0);
  for (int s : s5.reflections()) CHECK(s5.codim_fixed(s) == 1);
  int five_cycle = s5.index_of(WreathElement{{1, 2, 3, 4, 0}, {0, 0, 0, 0, 0}});
  REQUIRE(five_cycle >= 0);
  CHECK(s5.codim_fixed(five_cycle) == 4);
  CHECK(matrix_codim(s5.element(five_cycle), 1) == 4);
}

TEST_CASE("codim rule agrees with matrix rank") {
  for (const char* spec : {"B3", "D4", "G(4,2,3)", "G(3,3,3)", "I2(7)"}) {
    CAPTURE(std::string(spec));
    auto g = make(spec);
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.codim_fixed(static_cast<int>(i)) == matrix_codim(g.element(static_cast<int>(i)), g.modulus()));
    }
  }
}

TEST_CASE("sign character is a morphism, -1 on reflections") {
  std::mt19937 rng(7);
  for (const char* spec : {"S5", "B4", "D4", "I2(6)", "G(4,2,3)", "G(6,3,2)", "G(3,3,4)"}) {
    CAPTURE(std::string(spec));
    auto g = make(spec);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
    for (int t = 0; t < 1000; ++t) {
      int a = pick(rng);
      int b = pick(rng);
      CHECK(g.sign(g.multiply(a, b)) == g.sign(a) * g.sign(b));
    }
    for (int s : g.reflections()) {
      CHECK(g.sign(s) == -1);
      CHECK(g.element_order(s) == 2);
    }
    CHECK(rotation_subgroup(g).size() * 2 == g.order());
  }
}

TEST_CASE("multiplication is associative with inverses") {
  std::mt19937 rng(11);
  auto g = make("G(4,2,3)");
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
  for (int t = 0; t < 500; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(g.multiply(a, g.inverse(a)) == 0);
  }
}

TEST_CASE("reflections are closed under conjugation") {
  for (const char* spec : {"S4", "B3", "D4", "G(4,4,3)"}) {
    auto g = make(spec);
    for (std::size_t w = 0; w < g.order(); ++w) {
      for (int s : g.reflections()) CHECK(g.is_reflection(g.conjugate(static_cast<int>(w), s)));
    }
  }
}

TEST_CASE("rotation subgroup sizes") {
  CHECK(rotation_subgroup(make("S4")).size() == 12);
  CHECK(rotation_subgroup(make("D5")).size() == 960);
  CHECK(rotation_subgroup(make("I2(3)")).size() == 3);
}

TEST_CASE("conjugacy partitions") {
  auto s5 = make("S5");
  auto refl = s5.reflections();
  std::vector<int> all(s5.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(conjugacy_partition(s5, refl, all).size() == 1);
  CHECK(reflection_classes(make("I2(5)")).size() == 1);
  CHECK(reflection_classes(make("I2(6)")).size() == 2);
  CHECK(reflection_classes(make("B3")).size() == 2);
  CHECK(reflection_classes(make("D4")).size() == 1);
}

TEST_CASE("generated subgroups") {
  auto s5 = make("S5");
  CHECK(generated_subgroup(s5, noncommuting_products(s5)).size() == 60);
  CHECK(generated_subgroup(s5, std::vector<int>{}).size() == 1);
}

TEST_CASE("reflection length diameters") {
  CHECK(reflection_length_diameter(make("S5")) == 4);
  CHECK(reflection_length_diameter(make("G(3,3,3)")) == 4);
  CHECK(reflection_length_diameter(make("G(4,2,2)")) == 3);
}

TEST_CASE("element cap") {
  CHECK_THROWS_AS(ReflectionGroup::build(parse_group("S6"), 100), resource_error);
}

TEST_CASE("parse_element inverts to_string") {
  for (const char* spec : {"S5", "B3", "D4", "G(4,2,3)", "I2(6)"}) {
    auto g = make(spec);
    CAPTURE(std::string(spec));
    for (std::size_t i = 0; i < g.order(); ++i) {
      auto e = g.element(static_cast<int>(i));
      REQUIRE(g.index_of(parse_element(to_string(e), g.degree())) == static_cast<int>(i));
    }
  }
  auto s4 = make("S4");
  CHECK(s4.element_order(s4.index_of(parse_element("(1 2 3)", 4))) == 3);
  CHECK(s4.index_of(parse_element("", 4)) == s4.index_of(parse_element("()", 4)));
  CHECK_THROWS_AS(parse_element("(1 5)", 4), group_error);
  CHECK_THROWS_AS(parse_element("(1 2", 4), group_error);
}

TEST_CASE("reflection length equals codimension of the fixed space in real groups") {
  for (const char* spec : {"S5", "B3", "B4", "D4", "I2(5)", "I2(6)"}) {
    auto g = make(spec);
    auto dist = reflection_lengths(g);
    CAPTURE(std::string(spec));
    for (std::size_t i = 0; i < g.order(); ++i) REQUIRE(dist[i] == g.codim_fixed(static_cast<int>(i)));
  }
  // Fails for genuinely complex groups: G(3,3,3) has rank 3 but m(W) = 4.
  CHECK(reflection_length_diameter(make("G(3,3,3)")) > make("G(3,3,3)").descriptor().rank());
}
