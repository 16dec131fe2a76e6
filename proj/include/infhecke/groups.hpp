#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace infhecke {

inline constexpr std::size_t kDefaultElementCap = 50000;
inline constexpr int kMaxDegree = 16;

/// Raised for malformed or inadmissible group descriptions.
class group_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed the configured element cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { symmetric, coxeter_a, coxeter_b, coxeter_d, dihedral, general };

/// A group of the infinite families, always resolved to its monomial model
/// G(m, p, n). The symmetric group S_n is realized as G(1, 1, n).
struct GroupDescriptor {
  Family family = Family::symmetric;
  int label = 0;  // the integer in the spec text: n for S/A/B/D, m for I2
  int m = 1;
  int p = 1;
  int n = 1;

  /// Canonical spec text, e.g. "S4", "B3", "I2(5)", "G(4,2,3)".
  std::string name() const;
  std::string family_name() const;
  /// Coxeter-style rank (dimension of the reflection representation).
  int rank() const;
  bool operator==(const GroupDescriptor&) const = default;
};

/// True iff every reflection of G(m, p, n) has order 2.
bool is_two_reflection(int m, int p);

/// Parses `S<n> | A<n> | B<n> | D<n> | I2(<m>) | G(<m>,<p>,<n>)`.
GroupDescriptor parse_group(std::string_view spec);

/// Element of the wreath product Z/m ≀ S_n. The permutation is stored in
/// zero-based one-line notation; `colors[i]` is a residue mod m. The product
/// is (σ,c)(τ,d) = (στ, c∘τ + d).
struct WreathElement {
  std::vector<std::uint8_t> perm;
  std::vector<std::uint8_t> colors;

  static WreathElement identity(int n);
  bool operator==(const WreathElement&) const = default;
  auto operator<=>(const WreathElement&) const = default;
};

WreathElement multiply(const WreathElement& a, const WreathElement& b, int m);
WreathElement inverse(const WreathElement& a, int m);
int permutation_sign(std::span<const std::uint8_t> perm);
/// Dimension of the fixed space in the reflection representation: the number
/// of cycles of the permutation whose total color vanishes mod m.
int fixed_dimension(const WreathElement& g, int m);
int element_order(const WreathElement& g, int m);
/// Cycle notation with one-based points; colors appended when nonzero.
std::string to_string(const WreathElement& g);
/// Inverse of to_string for degree n, e.g. "(1 2 3)" or "(1 2)[1,1,0]".
WreathElement parse_element(std::string_view text, int n);

/// A fully enumerated finite 2-reflection group. Immutable after build().
class ReflectionGroup {
 public:
  static ReflectionGroup build(const GroupDescriptor& descriptor,
                               std::size_t element_cap = kDefaultElementCap);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  std::size_t order() const { return signs_.size(); }
  int degree() const { return descriptor_.n; }
  int modulus() const { return descriptor_.m; }

  WreathElement element(int i) const;
  /// Index of g, or -1 when g does not lie in the group.
  int index_of(const WreathElement& g) const;

  int multiply(int i, int j) const;
  int inverse(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }
  int element_order(int i) const { return orders_[static_cast<std::size_t>(i)]; }
  int codim_fixed(int i) const { return codims_[static_cast<std::size_t>(i)]; }
  int conjugate(int by, int x) const { return multiply(multiply(by, x), inverse(by)); }
  bool commute(int i, int j) const { return multiply(i, j) == multiply(j, i); }

  std::span<const int> reflections() const { return reflections_; }
  bool is_reflection(int i) const { return is_reflection_[static_cast<std::size_t>(i)] != 0; }

 private:
  std::uint64_t code_of(const std::uint8_t* perm, const std::uint8_t* colors) const;
  int lookup(std::uint64_t code) const;

  GroupDescriptor descriptor_;
  std::vector<std::uint8_t> perms_;   // order × n
  std::vector<std::uint8_t> colors_;  // order × n
  std::vector<int> inverses_;
  std::vector<int> signs_;
  std::vector<int> orders_;
  std::vector<int> codims_;
  std::vector<int> reflections_;
  std::vector<std::uint8_t> is_reflection_;
  std::vector<std::uint64_t> color_weights_;
  std::vector<int> dense_index_;
  std::unordered_map<std::uint64_t, int> sparse_index_;
};

/// Index set of a subgroup together with the inverse map group index -> position.
struct Subgroup {
  std::vector<int> elements;  // ascending group indices
  std::vector<int> position;  // size |W|, -1 outside

  std::size_t size() const { return elements.size(); }
  bool contains(int g) const { return position[static_cast<std::size_t>(g)] >= 0; }
};

Subgroup make_subgroup(const ReflectionGroup& group, std::vector<int> elements);

/// The kernel O of the sign character.
Subgroup rotation_subgroup(const ReflectionGroup& group);

/// Orbits of the elements of `subset` under conjugation by the group generated
/// by `conjugators`. Classes are sorted, and ordered by their smallest element.
std::vector<std::vector<int>> conjugacy_partition(const ReflectionGroup& group,
                                                  std::span<const int> subset,
                                                  std::span<const int> conjugators);

/// Reflection classes under conjugation by the whole group.
std::vector<std::vector<int>> reflection_classes(const ReflectionGroup& group);

/// Smallest subgroup containing `generators`, as ascending indices.
std::vector<int> generated_subgroup(const ReflectionGroup& group, std::span<const int> generators);

/// Minimal number of reflections needed to write each element (BFS on the
/// Cayley graph with generating set R).
std::vector<int> reflection_lengths(const ReflectionGroup& group);
int reflection_length_diameter(const ReflectionGroup& group);

/// Standard Coxeter generators for the A/B/D/I2 families.
std::vector<int> simple_reflections(const ReflectionGroup& group);

/// Distinct products su with s, u in `reflections` and su != us.
std::vector<int> noncommuting_products(const ReflectionGroup& group, std::span<const int> reflections);
std::vector<int> noncommuting_products(const ReflectionGroup& group);
/// Distinct products su (s, u in R) whose order satisfies `pred`.
template <class Pred>
std::vector<int> reflection_products_if(const ReflectionGroup& group, Pred pred) {
  std::vector<std::uint8_t> seen(group.order(), 0);
  for (int s : group.reflections()) {
    for (int u : group.reflections()) {
      int su = group.multiply(s, u);
      if (pred(group.element_order(su))) seen[static_cast<std::size_t>(su)] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

/// {family, params, order, reflections, reflection_classes}
nlohmann::json describe(const ReflectionGroup& group);

}  // namespace infhecke
