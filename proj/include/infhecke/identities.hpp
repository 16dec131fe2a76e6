#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "infhecke/groups.hpp"

namespace infhecke {

/// Polynomial with rational coefficients, ascending degree, no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(int k) const;
  bool is_even() const;
  /// P(−X).
  RationalPolynomial reflect() const;
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  bool operator==(const RationalPolynomial&) const = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// P of degree < N with x = P(x − x^{N−1}) in Q[x]/(x^N − 1); N must be odd.
RationalPolynomial odd_order_poly(int n);
/// P(X) + P(−X) for the odd-order polynomial, so x + x⁻¹ = P(x − x⁻¹).
RationalPolynomial even_sum_poly(int n);
/// Rank of {(x − x⁻¹)^r : 0 <= r < N} in Q[x]/(x^N − 1).
int odd_power_rank(int n);
/// The quartic of the order-3 adjoint identity.
RationalPolynomial ad3_polynomial();

enum class IdentityMode { self, sum };

/// Evaluates P at g − g⁻¹ in QW and compares with g (self) or g + g⁻¹ (sum).
bool verify_in_group(const ReflectionGroup& group, int g, const RationalPolynomial& p, IdentityMode mode);
/// Same check in Q[Z/N] for a generator.
bool verify_in_cyclic(int n, const RationalPolynomial& p, IdentityMode mode);
/// Ad(g) = Q(ad(g) − ad(g⁻¹)) on every basis vector of QW; g must have order 3.
bool verify_ad3(const ReflectionGroup& group, int g);

}  // namespace infhecke
