#include <doctest.h>

#include <map>

#include "infhecke/combinatorics.hpp"

using namespace infhecke;

namespace {

// Number of standard Young tableaux: remove the cell holding the largest entry.
std::uint64_t count_tableaux(const Partition& p) {
  static std::map<Partition, std::uint64_t> memo;
  if (size(p) <= 1) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;  // not a corner
    Partition q = p;
    if (--q[i] == 0) q.pop_back();
    total += count_tableaux(q);
  }
  return memo[p] = total;
}

}  // namespace

TEST_CASE("hook-length dimensions") {
  CHECK(dim_partition({5}) == 1);
  CHECK(dim_partition({3, 2}) == 5);
  CHECK(dim_partition({5, 2, 1}) == 64);
  CHECK(dim_partition({3, 3, 2}) == 42);
  // The shape [4,2,1,1] has dimension 90, not 70.
  CHECK(dim_partition({4, 2, 1, 1}) == 90);
  CHECK(count_tableaux({4, 2, 1, 1}) == 90);
  CHECK_THROWS(dim_partition({1, 2}));
}

TEST_CASE("hook formula against tableau counting and the sum of squares") {
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t sum = 0;
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    for (const auto& p : partitions(n)) {
      const auto d = dim_partition(p);
      CHECK(d == count_tableaux(p));
      sum += d * d;
      if (n >= 5 && p != Partition{n} && p != Partition(static_cast<std::size_t>(n), 1)) CHECK(d >= n - 1u);
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("transpose, hooks, diagonals") {
  CHECK(transpose({4, 2, 1, 1}) == Partition{4, 2, 1, 1});
  CHECK(transpose({3, 2}) == Partition{2, 2, 1});
  CHECK(is_hook({6, 1}));
  CHECK(is_hook({3, 1, 1}));
  CHECK_FALSE(is_hook({3, 2}));
  CHECK(diag_len({3, 2, 1}) == 2);
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(5).front() == Partition{5});
}

TEST_CASE("type A classification") {
  auto c5 = classify_type_A(5);
  CHECK(c5.lambda == std::vector<Partition>{{3, 2}});
  CHECK(c5.s_plus.empty());
  CHECK(c5.s_minus.empty());
  auto c6 = classify_type_A(6);
  CHECK(c6.s_plus == std::vector<Partition>{{3, 2, 1}});
  CHECK(c6.s_minus.empty());
  auto c7 = classify_type_A(7);
  CHECK(c7.s_plus.empty());
  CHECK(c7.s_minus.empty());
  CHECK_THROWS(classify_type_A(4));
  // Every non-hook appears exactly once among Λ, its transposes, S+ and S−.
  for (int n = 5; n <= 12; ++n) {
    auto c = classify_type_A(n);
    std::map<Partition, int> seen;
    for (auto& p : c.lambda) {
      ++seen[p];
      ++seen[transpose(p)];
    }
    for (auto& p : c.s_plus) ++seen[p];
    for (auto& p : c.s_minus) ++seen[p];
    for (auto& p : partitions(n)) CHECK(seen[p] == (is_hook(p) ? 0 : 1));
  }
}

TEST_CASE("type A rotation dimensions") {
  const std::uint64_t expected[] = {16, 112, 1002, 9115, 86949, 892531, 9924091};
  for (int n = 5; n <= 11; ++n) CHECK(type_A_rotation_dim(n).dim == expected[n - 5]);
  // The choice between λ and λ′ does not matter: dimensions agree.
  for (int n = 5; n <= 14; ++n) {
    for (const auto& p : classify_type_A(n).lambda) CHECK(dim_partition(p) == dim_partition(transpose(p)));
  }
  auto j = to_json(type_A_rotation_dim(6));
  CHECK(j["dim"] == 112);
  CHECK(j["breakdown"][0]["contribution"] == 10);
}

TEST_CASE("dim_D closed form") {
  CHECK(dim_D(3, 1) == 64);
  CHECK(dim_D(2, 1) == 35);
  CHECK(dim_D(0, 0) == 2);
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      Partition p{a + 2, 2};
      p.insert(p.end(), static_cast<std::size_t>(b), 1);
      CHECK(dim_D(a, b) == dim_partition(p));
    }
  }
}
