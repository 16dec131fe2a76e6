#include <doctest.h>

#include "infhecke/closure.hpp"

using namespace infhecke;

namespace {

GroupPtr make(const char* spec) {
  return std::make_shared<const ReflectionGroup>(ReflectionGroup::build(parse_group(spec)));
}

using Sizes = std::vector<std::size_t>;

// Oracle for a Lie closure: brute-force fixed point that brackets the whole
// current basis (not just the new rows) with every generator, without any
// coordinate compression.
template <class F>
std::size_t naive_lie_dim(const F& field, const BasisPtr& basis, const std::vector<SparseGenerator>& gens) {
  SpanBasis<F> span(field, basis->size());
  for (const auto& g : gens) {
    auto v = from_generator(field, basis, g);
    span.insert(v.coeffs());
  }
  while (true) {
    std::size_t before = span.rank();
    std::vector<std::vector<typename F::scalar_type>> rows;
    for (std::size_t i = 0; i < span.rank(); ++i) rows.push_back(span.row(i));
    for (const auto& r : rows) {
      AlgebraVector<F> v(field, basis, r);
      for (const auto& g : gens) span.insert(bracket_gen(g, v).coeffs());
    }
    if (span.rank() == before) return before;
  }
}

// Oracle for a unital associative closure: multiplies every pair of basis
// rows through the group table until nothing new appears.
std::size_t naive_assoc_dim(const BasisPtr& basis, const std::vector<SparseGenerator>& gens) {
  const auto& group = basis->group();
  const std::size_t n = basis->size();
  SpanBasis<Rationals> span({}, n);
  std::vector<mpq_class> one(n);
  one[static_cast<std::size_t>(basis->position(group.index_of(WreathElement::identity(group.degree()))))] = 1;
  span.insert(one);
  for (const auto& g : gens) span.insert(from_generator(Rationals{}, basis, g).coeffs());
  while (true) {
    const std::size_t before = span.rank();
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t i = 0; i < before; ++i) rows.push_back(span.row(i));
    for (const auto& a : rows) {
      for (const auto& b : rows) {
        std::vector<mpq_class> prod(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(a[i]) == 0) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (sgn(b[j]) == 0) continue;
            int k = basis->position(group.multiply(basis->element(i), basis->element(j)));
            prod[static_cast<std::size_t>(k)] += a[i] * b[j];
          }
        }
        span.insert(prod);
      }
    }
    if (span.rank() == before) return before;
  }
}

}  // namespace

TEST_CASE("grading tables of small groups") {
  struct Row {
    const char* spec;
    Sizes hgr;
    std::size_t even, odd, z;
  };
  for (const auto& row : {Row{"S3", {3, 1, 2}, 1, 2, 1}, Row{"S4", {6, 4, 7}, 4, 7, 1},
                          Row{"S5", {10, 10, 19, 16, 23}, 16, 23, 1}, Row{"B3", {9, 7, 12}, 7, 12, 2},
                          Row{"D4", {12, 16, 35, 32, 46}, 32, 46, 1}}) {
    CAPTURE(std::string(row.spec));
    auto g = make(row.spec);
    for (auto result : {grading(g, PrimeField{113}).report, grading(g, Rationals{}).report}) {
      CHECK(result.converged);
      CHECK(result.dims_Hgr == row.hgr);
      CHECK(result.stable_even == row.even);
      CHECK(result.stable_odd == row.odd);
      CHECK(result.dim_Z == row.z);
      CHECK(result.dim_H() == result.stable_even + result.stable_odd + result.dim_Z);
    }
  }
}

TEST_CASE("S4 filtration by hand") {
  auto r = grading(make("S4"), Rationals{}).report;
  CHECK(r.dims_M == Sizes{6, 10, 12});
  CHECK(r.stabilization_degree == 2);
  CHECK(r.hgr(4) == 4);
  CHECK(r.hgr(9) == 7);
}

TEST_CASE("dihedral closed forms") {
  for (int m = 3; m <= 12; ++m) {
    CAPTURE(m);
    auto g = make(("I2(" + std::to_string(m) + ")").c_str());
    auto r = grading(g, Rationals{}).report;
    const std::size_t z = m % 2 == 1 ? 1 : 2;
    CHECK(r.dim_Z == z);
    CHECK(r.hgr(1) == static_cast<std::size_t>(m));
    CHECK(r.hgr(2) == static_cast<std::size_t>((m - 1) / 2));
    CHECK(r.hgr(3) == m - z);
    for (int n = 2; n <= 8; ++n) CHECK(r.hgr(n) == r.hgr(n + 2));
  }
}

TEST_CASE("full H dimension against a naive closure") {
  for (const char* spec : {"S3", "S4", "B3", "I2(6)"}) {
    CAPTURE(std::string(spec));
    auto g = make(spec);
    auto full = GroupBasis::full(g);
    std::vector<SparseGenerator> gens;
    for (int s : g->reflections()) gens.push_back(SparseGenerator::element(s));
    CHECK(grading(g, Rationals{}).report.dim_H() == naive_lie_dim(Rationals{}, full, gens));
  }
  CHECK(grading(make("S3"), Rationals{}).report.dim_H() == 4);
  CHECK(grading(make("S5"), PrimeField{113}).report.dim_H() == 40);
}

TEST_CASE("rotation algebras") {
  PrimeField f{113};
  auto s4 = make("S4");
  auto a4 = rotation_algebra(s4, Rationals{});
  CHECK(a4.span.rank() == 4);
  CHECK(centralizer_dim_within(a4.span, a4.chart, a4.basis, a4.generators, Rationals{}) == 1);
  CHECK(naive_lie_dim(Rationals{}, a4.basis, commutator_generators(*s4)) == 4);

  auto s5 = make("S5");
  auto a5 = rotation_algebra(s5, Rationals{});
  CHECK(a5.span.rank() == 16);
  CHECK(centralizer_dim_within(a5.span, a5.chart, a5.basis, a5.generators, Rationals{}) == 0);
  CHECK(associative_closure_dim(a5.generators, a5.basis, Rationals{}) == 60);
  CHECK(naive_lie_dim(f, a5.basis, commutator_generators(*s5)) == 16);

  auto d4 = rotation_algebra(make("D4"), f);
  CHECK(d4.span.rank() == 31);
  CHECK(centralizer_dim_within(d4.span, d4.chart, d4.basis, d4.generators, f) == 1);
}

TEST_CASE("closure edge cases") {
  auto s5 = make("S5");
  auto basis = GroupBasis::subgroup(s5, rotation_subgroup(*s5), "O");
  auto chart = CoordinateMap::identity(basis->size());
  // A single element spans itself; brackets with itself vanish.
  int three_cycle = s5->multiply(s5->reflections()[0], s5->reflections()[1]);
  auto single = lie_generated(Rationals{}, basis, {SparseGenerator::element(three_cycle)}, chart);
  CHECK(single.span.rank() == 1);
  CHECK(associative_closure_dim({}, basis, Rationals{}) == 1);
  // An involution in O: span{1, g}.
  int involution = -1;
  for (std::size_t j = 0; j < basis->size(); ++j) {
    int g = basis->element(j);
    if (s5->element_order(g) == 2) involution = g;
  }
  REQUIRE(involution >= 0);
  CHECK(associative_closure_dim({SparseGenerator::element(involution)}, basis, Rationals{}) == 2);
  SpanBasis<Rationals> zero({}, basis->size());
  CHECK(centralizer_dim_within(zero, chart, basis, single.generators, Rationals{}) == 0);
}

TEST_CASE("L1 spans") {
  auto s3 = make("S3");
  auto full = GroupBasis::full(s3);
  CHECK(l1_span(full, Parity::even, Rationals{}).rank() == 1);
  CHECK(l1_span(full, Parity::odd, Rationals{}).rank() == 3);
}

TEST_CASE("associative closure of A in dihedral groups") {
  // O = C_m and A is spanned by x^k - x^-k. The characters x -> ζ^j and
  // x -> ζ^j' agree on all of them iff sin(2πjk/m) = sin(2πj'k/m) for every
  // k, which for j != j' happens only for {0, m/2}.
  for (int m = 3; m <= 10; ++m) {
    auto g = make(("I2(" + std::to_string(m) + ")").c_str());
    auto a = rotation_algebra(g, Rationals{});
    CAPTURE(m);
    CHECK(associative_closure_dim(a.generators, a.basis, Rationals{}) ==
          static_cast<std::size_t>(m % 2 ? m : m - 1));
  }
}

TEST_CASE("associative closure of A against a pairwise-product oracle") {
  for (const char* spec : {"S4", "B3", "D4", "I2(5)", "I2(6)"}) {
    auto a = rotation_algebra(make(spec), Rationals{});
    CAPTURE(std::string(spec));
    CHECK(associative_closure_dim(a.generators, a.basis, Rationals{}) == naive_assoc_dim(a.basis, a.generators));
  }
  auto b3 = rotation_algebra(make("B3"), Rationals{});
  CHECK(naive_assoc_dim(b3.basis, b3.generators) == 21);
}
