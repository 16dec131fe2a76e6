#include "infhecke/identities.hpp"

#include <stdexcept>


namespace infhecke {

namespace {

using QVec = std::vector<mpq_class>;

// Product in Q[x]/(x^N − 1).
QVec cyclic_multiply(const QVec& a, const QVec& b) {
  const std::size_t n = a.size();
  QVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) != 0) out[(i + j) % n] += a[i] * b[j];
    }
  }
  return out;
}

// Columns (x − x⁻¹)^r, r = 0..N−1, as an N×N matrix stored by columns.
std::vector<QVec> odd_power_columns(int n) {
  const auto un = static_cast<std::size_t>(n);
  QVec y(un, 0);
  y[1 % un] += 1;
  y[(un - 1) % un] -= 1;
  std::vector<QVec> cols;
  QVec power(un, 0);
  power[0] = 1;
  for (int r = 0; r < n; ++r) {
    cols.push_back(power);
    power = cyclic_multiply(power, y);
  }
  return cols;
}

// Gauss–Jordan on [A | b]; returns false when A is singular.
bool solve(std::vector<QVec> a, QVec b, QVec& x) {
  const std::size_t n = a.size();
  std::vector<std::size_t> piv_col(n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = row;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    mpq_class inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      mpq_class f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    piv_col[row] = col;
    ++row;
  }
  x.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) x[piv_col[r]] = b[r];
  return true;
}

int rank_of(std::vector<QVec> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
    const QVec& pivot = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      mpq_class f = rows[r][c] / pivot[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * pivot[k];
    }
    ++rank;
  }
  return rank;
}

// Horner evaluation of P at y = g − g⁻¹ acting by left multiplication on `one`.
template <class Apply>
QVec evaluate(const RationalPolynomial& p, const QVec& one, Apply&& apply_y) {
  QVec acc(one.size(), 0);
  for (int k = p.degree(); k >= 0; --k) {
    acc = apply_y(acc);
    const mpq_class& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < one.size(); ++i) {
      if (sgn(one[i]) != 0) acc[i] += c * one[i];
    }
  }
  return acc;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coeff(int k) const {
  return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : mpq_class(0);
}

bool RationalPolynomial::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

RationalPolynomial RationalPolynomial::reflect() const {
  auto c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = a == 1 && k > 0;
    if (!unit) s += a.get_str();
    if (k > 0) s += (unit ? "" : " ") + std::string("X") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

RationalPolynomial odd_order_poly(int n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (n % 2 == 0) throw std::domain_error("no such polynomial: N = " + std::to_string(n) + " is even");
  if (n == 1) return RationalPolynomial({mpq_class(1)});
  auto cols = odd_power_columns(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<QVec> a(un, QVec(un));
  for (std::size_t r = 0; r < un; ++r)
    for (std::size_t c = 0; c < un; ++c) a[r][c] = cols[c][r];
  QVec rhs(un, 0);
  rhs[1] = 1;
  QVec x;
  if (!solve(std::move(a), std::move(rhs), x)) throw std::logic_error("powers of x - x^-1 are dependent");
  return RationalPolynomial(std::move(x));
}

RationalPolynomial even_sum_poly(int n) {
  auto p = odd_order_poly(n);
  return p + p.reflect();
}

int odd_power_rank(int n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  return rank_of(odd_power_columns(n));
}

RationalPolynomial ad3_polynomial() {
  return RationalPolynomial({mpq_class(1), mpq_class(3, 4), mpq_class(5, 8), mpq_class(1, 12), mpq_class(1, 24)});
}

bool verify_in_cyclic(int n, const RationalPolynomial& p, IdentityMode mode) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  const auto un = static_cast<std::size_t>(n);
  QVec one(un, 0);
  one[0] = 1;
  auto apply_y = [&](const QVec& v) {
    QVec out(un, 0);
    for (std::size_t i = 0; i < un; ++i) {
      if (sgn(v[i]) == 0) continue;
      out[(i + 1) % un] += v[i];
      out[(i + un - 1) % un] -= v[i];
    }
    return out;
  };
  QVec target(un, 0);
  target[1 % un] += 1;
  if (mode == IdentityMode::sum) target[(un - 1) % un] += 1;
  return evaluate(p, one, apply_y) == target;
}

bool verify_in_group(const ReflectionGroup& group, int g, const RationalPolynomial& p, IdentityMode mode) {
  const int ginv = group.inverse(g);
  const std::size_t n = group.order();
  QVec one(n, 0);
  one[0] = 1;
  auto apply_y = [&](const QVec& v) {
    QVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) == 0) continue;
      out[static_cast<std::size_t>(group.multiply(g, static_cast<int>(i)))] += v[i];
      out[static_cast<std::size_t>(group.multiply(ginv, static_cast<int>(i)))] -= v[i];
    }
    return out;
  };
  QVec target(n, 0);
  target[static_cast<std::size_t>(g)] += 1;
  if (mode == IdentityMode::sum) target[static_cast<std::size_t>(ginv)] += 1;
  return evaluate(p, one, apply_y) == target;
}

bool verify_ad3(const ReflectionGroup& group, int g) {
  if (group.element_order(g) != 3) throw std::invalid_argument("ad3 identity needs an element of order 3");
  const int ginv = group.inverse(g);
  const std::size_t n = group.order();
  // D = ad(g) − ad(g⁻¹), with ad(a)x = ax − xa.
  auto apply_d = [&](const QVec& v) {
    QVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) == 0) continue;
      const int x = static_cast<int>(i);
      out[static_cast<std::size_t>(group.multiply(g, x))] += v[i];
      out[static_cast<std::size_t>(group.multiply(x, g))] -= v[i];
      out[static_cast<std::size_t>(group.multiply(ginv, x))] -= v[i];
      out[static_cast<std::size_t>(group.multiply(x, ginv))] += v[i];
    }
    return out;
  };
  const auto q = ad3_polynomial();
  for (std::size_t h = 0; h < n; ++h) {
    QVec delta(n, 0);
    delta[h] = 1;
    QVec target(n, 0);
    target[static_cast<std::size_t>(group.conjugate(g, static_cast<int>(h)))] = 1;
    if (evaluate(q, delta, apply_d) != target) return false;
  }
  return true;
}

}  // namespace infhecke
