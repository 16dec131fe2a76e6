#include "infhecke/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace infhecke {

namespace {

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw std::overflow_error("value exceeds 64 bits");
  return std::stoull(z.get_str());
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  }
  return true;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int j = 0; j < p[0]; ++j) {
    int len = 0;
    for (int part : p) len += part > j ? 1 : 0;
    t.push_back(len);
  }
  return t;
}

bool is_hook(const Partition& p) { return p.size() <= 1 || p[1] <= 1; }

int diag_len(const Partition& p) {
  int b = 0;
  for (std::size_t i = 0; i < p.size(); ++i) b += p[i] > static_cast<int>(i) ? 1 : 0;
  return b;
}

std::uint64_t dim_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + to_string(p));
  const Partition t = transpose(p);
  mpz_class num = 1;
  mpz_class hooks = 1;
  const int n = size(p);
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      const int arm = p[i] - j - 1;
      const int leg = t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return to_u64(num / hooks);
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

TypeAClassification classify_type_A(int n) {
  if (n < 5) throw std::invalid_argument("type A classification needs n >= 5");
  TypeAClassification c;
  c.n = n;
  for (const auto& p : partitions(n)) {
    if (is_hook(p)) continue;
    const Partition t = transpose(p);
    if (p > t) {
      c.lambda.push_back(p);
    } else if (p == t) {
      ((n - diag_len(p)) / 2 % 2 == 0 ? c.s_plus : c.s_minus).push_back(p);
    }
  }
  return c;
}

TypeADimension type_A_rotation_dim(int n) {
  const auto c = classify_type_A(n);
  TypeADimension out;
  out.n = n;
  auto add = [&](Partition p, std::string kind, std::uint64_t v) {
    out.dim += v;
    out.breakdown.push_back({std::move(p), std::move(kind), v});
  };
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  add({n - 1, 1}, "standard", (nn - 1) * (nn - 2) / 2);
  for (const auto& p : c.lambda) {
    const std::uint64_t d = dim_partition(p);
    add(p, "lambda", d * (d - 1) / 2);
  }
  for (const auto& p : c.s_plus) {
    const std::uint64_t h = dim_partition(p) / 2;
    add(p, "self-conjugate+", 2 * (h * (h - 1) / 2));
  }
  for (const auto& p : c.s_minus) {
    const std::uint64_t h = dim_partition(p) / 2;
    add(p, "self-conjugate-", h * h - 1);
  }
  return out;
}

std::uint64_t dim_D(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("dim_D needs a, b >= 0");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a + b + 2), static_cast<unsigned long>(a));
  mpz_class num = mpz_class(b + 1) * binom * (a + b + 4);
  if (num % (a + 2) != 0) throw std::logic_error("dim_D is not integral");
  return to_u64(num / (a + 2));
}

nlohmann::json to_json(const TypeADimension& d) {
  nlohmann::json j{{"n", d.n}, {"dim", d.dim}, {"breakdown", nlohmann::json::array()}};
  for (const auto& t : d.breakdown) {
    j["breakdown"].push_back({{"partition", to_string(t.partition)}, {"class", t.kind}, {"contribution", t.contribution}});
  }
  return j;
}

}  // namespace infhecke
