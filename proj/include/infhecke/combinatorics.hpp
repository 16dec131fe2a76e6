#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace infhecke {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
bool is_partition(const Partition& p);
int size(const Partition& p);
Partition transpose(const Partition& p);
/// [n − k, 1^k] for some k.
bool is_hook(const Partition& p);
/// Number of diagonal cells, b(λ).
int diag_len(const Partition& p);
/// Hook-length formula; throws std::overflow_error beyond 64 bits.
std::uint64_t dim_partition(const Partition& p);
std::string to_string(const Partition& p);

struct TypeAClassification {
  int n = 0;
  std::vector<Partition> lambda;   // non-hooks with λ > λ′ lexicographically
  std::vector<Partition> s_plus;   // self-conjugate non-hooks, (n − b(λ))/2 even
  std::vector<Partition> s_minus;  // self-conjugate non-hooks, (n − b(λ))/2 odd
};

TypeAClassification classify_type_A(int n);

struct TypeATerm {
  Partition partition;
  std::string kind;  // "standard", "lambda", "self-conjugate+", "self-conjugate-"
  std::uint64_t contribution = 0;
};

struct TypeADimension {
  int n = 0;
  std::uint64_t dim = 0;
  std::vector<TypeATerm> breakdown;
};

/// so_{n−1} ⊕ ⊕_Λ so(V_λ) ⊕ ⊕_{S+} (so(V_λ+) ⊕ so(V_λ−)) ⊕ ⊕_{S−} sl(V_λ+).
TypeADimension type_A_rotation_dim(int n);

/// (b+1)/(a+2)·C(a+b+2, a)·(a+b+4), the dimension of [a+2, 2, 1^b].
std::uint64_t dim_D(int a, int b);

nlohmann::json to_json(const TypeADimension& d);

}  // namespace infhecke
