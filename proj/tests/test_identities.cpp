#include <doctest.h>

#include <complex>

#include "infhecke/identities.hpp"

using namespace infhecke;

namespace {

// Numeric oracle: P(ζ − ζ⁻¹) at every N-th root of unity ζ.
bool holds_at_roots(int n, const RationalPolynomial& p, bool sum) {
  for (int k = 0; k < n; ++k) {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI * k / n);
    std::complex<double> y = z - 1.0 / z;
    std::complex<double> acc = 0.0;
    for (int d = p.degree(); d >= 0; --d) acc = acc * y + p.coeff(d).get_d();
    std::complex<double> target = sum ? z + 1.0 / z : z;
    if (std::abs(acc - target) > 1e-8) return false;
  }
  return true;
}

int find(const ReflectionGroup& g, WreathElement e) { return g.index_of(e); }

}  // namespace

TEST_CASE("odd-order polynomials") {
  CHECK(odd_order_poly(1) == RationalPolynomial({mpq_class(1)}));
  CHECK(odd_order_poly(3) == RationalPolynomial({mpq_class(1), mpq_class(1, 2), mpq_class(1, 2)}));
  CHECK(even_sum_poly(1) == RationalPolynomial({mpq_class(2)}));
  CHECK(even_sum_poly(3) == RationalPolynomial({mpq_class(2), mpq_class(0), mpq_class(1)}));
  CHECK_THROWS_AS(odd_order_poly(2), std::domain_error);
  CHECK_THROWS_AS(even_sum_poly(4), std::domain_error);
  for (int n = 1; n <= 15; n += 2) {
    CAPTURE(n);
    auto p = odd_order_poly(n);
    auto q = even_sum_poly(n);
    CHECK(p.degree() < n);
    CHECK(odd_power_rank(n) == n);
    CHECK(q.is_even());
    CHECK(verify_in_cyclic(n, p, IdentityMode::self));
    CHECK(verify_in_cyclic(n, q, IdentityMode::sum));
    CHECK(holds_at_roots(n, p, false));
    CHECK(holds_at_roots(n, q, true));
  }
  for (int n = 2; n <= 14; n += 2) CHECK(odd_power_rank(n) < n);
  CHECK(odd_order_poly(3).to_string() == "1/2 X^2 + 1/2 X + 1");
}

TEST_CASE("identities inside groups") {
  auto s5 = ReflectionGroup::build(parse_group("S5"));
  int c3 = find(s5, {{1, 2, 0, 3, 4}, {0, 0, 0, 0, 0}});
  REQUIRE(s5.element_order(c3) == 3);
  CHECK(verify_in_group(s5, c3, odd_order_poly(3), IdentityMode::self));
  CHECK(verify_in_group(s5, c3, even_sum_poly(3), IdentityMode::sum));
  int inv2 = find(s5, {{1, 0, 3, 2, 4}, {0, 0, 0, 0, 0}});
  CHECK_FALSE(verify_in_group(s5, inv2, odd_order_poly(3), IdentityMode::self));
  CHECK(verify_in_group(s5, 0, RationalPolynomial({mpq_class(1)}), IdentityMode::self));
}

TEST_CASE("order-3 adjoint identity") {
  auto s4 = ReflectionGroup::build(parse_group("S4"));
  auto s3 = ReflectionGroup::build(parse_group("S3"));
  CHECK(verify_ad3(s4, find(s4, {{1, 2, 0, 3}, {0, 0, 0, 0}})));
  CHECK(verify_ad3(s3, find(s3, {{1, 2, 0}, {0, 0, 0}})));
  CHECK_THROWS(verify_ad3(s4, s4.reflections()[0]));
  CHECK(ad3_polynomial().to_string() == "1/24 X^4 + 1/12 X^3 + 5/8 X^2 + 3/4 X + 1");
}
