#include "infhecke/field.hpp"

#include <cctype>

namespace infhecke {

PrimeField::scalar_type PrimeField::inv(scalar_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = modulus - 2;
  while (e) {
    if (e & 1U) result = result * base % modulus;
    base = base * base % modulus;
    e >>= 1U;
  }
  return static_cast<scalar_type>(result);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(p));
  if (p > kMaxPrime) throw std::invalid_argument("field modulus must be at most " + std::to_string(kMaxPrime));
  return {Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::string digits(text.substr(text[1] == '_' ? 2 : 1));
    bool ok = !digits.empty() && digits.size() <= 9;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or f<p>)");
}

void FieldSpec::check_coprime(std::size_t group_order) const {
  if (!is_rational() && group_order % modulus == 0) {
    throw std::invalid_argument(name() + " has characteristic dividing the group order " +
                                std::to_string(group_order));
  }
}

}  // namespace infhecke
