#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace infhecke {

/// Exact rational numbers.
struct Rationals {
  using scalar_type = mpq_class;

  scalar_type from_int(long v) const { return scalar_type(v); }
  static bool is_zero(const scalar_type& a) { return sgn(a) == 0; }
  static scalar_type add(const scalar_type& a, const scalar_type& b) { return a + b; }
  static scalar_type sub(const scalar_type& a, const scalar_type& b) { return a - b; }
  static scalar_type mul(const scalar_type& a, const scalar_type& b) { return a * b; }
  static scalar_type inv(const scalar_type& a) { return 1 / a; }
  std::string name() const { return "Q"; }
  bool operator==(const Rationals&) const = default;
};

/// The prime field F_p, scalars kept as canonical residues in [0, p).
struct PrimeField {
  using scalar_type = std::uint32_t;

  std::uint32_t modulus = 113;

  scalar_type from_int(long v) const {
    long r = v % static_cast<long>(modulus);
    return static_cast<scalar_type>(r < 0 ? r + modulus : r);
  }
  static bool is_zero(scalar_type a) { return a == 0; }
  scalar_type add(scalar_type a, scalar_type b) const {
    std::uint32_t s = a + b;
    return s >= modulus ? s - modulus : s;
  }
  scalar_type sub(scalar_type a, scalar_type b) const { return a >= b ? a - b : a + modulus - b; }
  scalar_type mul(scalar_type a, scalar_type b) const {
    return static_cast<scalar_type>(static_cast<std::uint64_t>(a) * b % modulus);
  }
  scalar_type inv(scalar_type a) const;
  std::string name() const { return "F_" + std::to_string(modulus); }
  bool operator==(const PrimeField&) const = default;
};

bool is_prime(std::uint64_t n);

/// Runtime field selection, as given on the command line (`q` or `f<p>`).
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::prime;
  std::uint32_t modulus = 113;

  static FieldSpec rationals() { return {Kind::rational, 0}; }
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::rational; }
  PrimeField prime_field() const { return PrimeField{modulus}; }
  std::string name() const { return is_rational() ? "Q" : "F_" + std::to_string(modulus); }
  /// Throws std::invalid_argument when p divides the group order.
  void check_coprime(std::size_t group_order) const;
  bool operator==(const FieldSpec&) const = default;
};

/// Largest modulus accepted for prime fields. Dense reduction keeps residues
/// in doubles; a sum of 2^22 products of residues below this bound is still
/// an exactly representable integer.
inline constexpr std::uint32_t kMaxPrime = 46337;

/// Calls `f` with the concrete field type selected by `spec`.
template <class F>
decltype(auto) visit_field(const FieldSpec& spec, F&& f) {
  if (spec.is_rational()) return f(Rationals{});
  return f(spec.prime_field());
}

}  // namespace infhecke
