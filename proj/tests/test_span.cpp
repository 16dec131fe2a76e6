#include <doctest.h>

#include <random>

#include "infhecke/span.hpp"

using namespace infhecke;

namespace {

template <class F>
std::vector<typename F::scalar_type> vec(const F& f, std::initializer_list<long> xs) {
  std::vector<typename F::scalar_type> out;
  for (long x : xs) out.push_back(f.from_int(x));
  return out;
}

// Plain Gaussian elimination mod p on a copy, the batch oracle.
std::size_t batch_rank_mod(std::vector<std::vector<long>> a, long p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t r = rank;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[rank]);
    long inv = 1;
    for (long e = p - 2, b = a[rank][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      long f = a[i][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE_TEMPLATE("span basics", F, Rationals, PrimeField) {
  F f{};
  SpanBasis<F> s(f, 3);
  CHECK_FALSE(s.insert(vec(f, {0, 0, 0})));
  CHECK(s.contains(vec(f, {0, 0, 0})));
  CHECK(s.insert(vec(f, {1, 0, 0})));
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.insert(vec(f, {1, 0, 0})));
  CHECK_FALSE(s.contains(vec(f, {0, 1, 0})));

  SpanBasis<F> t(f, 3);
  t.insert(vec(f, {1, 1, 0}));
  t.insert(vec(f, {0, 1, 0}));
  CHECK(t.contains(vec(f, {1, 0, 0})));
  CHECK(t.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(t.row(0) == vec(f, {1, 0, 0}));
}

TEST_CASE_TEMPLATE("sums and intersections", F, Rationals, PrimeField) {
  F f{};
  SpanBasis<F> a(f, 3), b(f, 3);
  a.insert(vec(f, {1, 0, 0}));
  b.insert(vec(f, {0, 1, 0}));
  CHECK(dim_sum(a, b) == 2);
  CHECK(dim_intersection(a, b) == 0);
  CHECK(subspace_leq(a, a));
  CHECK(dim_intersection(a, a) == 1);
  a.insert(vec(f, {0, 1, 0}));
  b.insert(vec(f, {0, 0, 1}));
  CHECK(dim_intersection(a, b) == 1);
  CHECK_FALSE(subspace_leq(a, b));
  CHECK_THROWS(dim_sum(a, SpanBasis<F>(f, 4)));
}

TEST_CASE("incremental rank equals batch rank on random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::bernoulli_distribution dense(0.4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<long>> a(20, std::vector<long>(30));
    // Low-rank mixtures exercise dependent rows.
    const int k = 1 + trial % 20;
    std::vector<std::vector<long>> base(k, std::vector<long>(30));
    for (auto& row : base)
      for (auto& x : row) x = dense(rng) ? entry(rng) : 0;
    for (auto& row : a) {
      for (int i = 0; i < k; ++i) {
        long c = entry(rng);
        for (int j = 0; j < 30; ++j) row[j] += c * base[i][j];
      }
    }
    PrimeField f{113};
    SpanBasis<PrimeField> inc(f, 30);
    SpanBasis<Rationals> q({}, 30);
    SpanBasis<PrimeField> batch(f, 30);
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto& row : a) {
      std::vector<std::uint32_t> r;
      std::vector<mpq_class> rq;
      for (long x : row) {
        r.push_back(f.from_int(x));
        rq.emplace_back(x);
      }
      inc.insert(r);
      q.insert(rq);
      rows.push_back(r);
    }
    batch.insert_batch(rows);
    CHECK(inc.rank() == batch_rank_mod(a, 113));
    CHECK(batch.rank() == inc.rank());
    CHECK(inc.rank() <= q.rank());
    for (std::size_t i = 0; i < inc.rank(); ++i) CHECK(inc.row(i) == batch.row(i));
  }
}

TEST_CASE("batch insertion reports the growing candidates in order") {
  PrimeField f{10007};
  SpanBasis<PrimeField> s(f, 4);
  std::vector<std::vector<std::uint32_t>> c{vec(f, {1, 2, 0, 0}), vec(f, {2, 4, 0, 0}), vec(f, {0, 0, 1, 0}),
                                            vec(f, {1, 2, 1, 0}), vec(f, {0, 1, 0, 0})};
  CHECK(s.insert_batch(c) == std::vector<std::size_t>{0, 2, 4});
  SpanBasis<Rationals> q({}, 4);
  std::vector<std::vector<mpq_class>> cq;
  for (auto& v : c) cq.emplace_back(v.begin(), v.end());
  CHECK(q.insert_batch(cq) == std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("result is independent of worker count") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> entry(0, 112);
  PrimeField f{113};
  std::vector<std::vector<std::uint32_t>> rows(700, std::vector<std::uint32_t>(300));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& x : rows[i]) x = (i % 3 == 0) ? entry(rng) : 0;
  SpanBasis<PrimeField> one(f, 300, 1), four(f, 300, 4);
  one.insert_batch(rows);
  four.insert_batch(rows);
  CHECK(one.rank() == four.rank());
  for (std::size_t i = 0; i < one.rank(); ++i) CHECK(one.row(i) == four.row(i));
}
