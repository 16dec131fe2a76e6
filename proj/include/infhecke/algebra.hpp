#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "infhecke/field.hpp"
#include "infhecke/groups.hpp"

namespace infhecke {

class basis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Left and right translation tables of one group element g on a basis:
/// left[j] is the position of g·b_j, right[j] the position of b_j·g.
struct Translation {
  std::vector<int> left;
  std::vector<int> right;
};

/// An indexed set of group elements spanning a group algebra kW or kH for a
/// subgroup H. Translation tables are built on first use and cached.
class GroupBasis {
 public:
  static std::shared_ptr<const GroupBasis> full(std::shared_ptr<const ReflectionGroup> group);
  static std::shared_ptr<const GroupBasis> subgroup(std::shared_ptr<const ReflectionGroup> group,
                                                    const Subgroup& subgroup, std::string tag);

  const ReflectionGroup& group() const { return *group_; }
  const std::shared_ptr<const ReflectionGroup>& group_ptr() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  int element(std::size_t pos) const { return elements_[pos]; }
  /// Position of a group element in the basis, -1 when outside.
  int position(int element) const { return position_[static_cast<std::size_t>(element)]; }
  bool contains(int element) const { return position(element) >= 0; }
  const std::string& tag() const { return tag_; }
  bool is_full() const { return elements_.size() == group_->order(); }

  /// Requires g to lie in the basis' subgroup.
  const Translation& translation(int g) const;

 private:
  GroupBasis() = default;

  std::shared_ptr<const ReflectionGroup> group_;
  std::vector<int> elements_;
  std::vector<int> position_;
  std::string tag_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<Translation>> cache_;
};

using BasisPtr = std::shared_ptr<const GroupBasis>;

/// A short signed sum of group elements with integer coefficients.
struct SparseGenerator {
  std::vector<std::pair<int, long>> terms;  // (group element, coefficient)

  static SparseGenerator element(int g) { return {{{g, 1}}}; }
  /// [s, u] = su - us.
  static SparseGenerator commutator(const ReflectionGroup& group, int s, int u);
  bool operator==(const SparseGenerator&) const = default;
};

/// A coefficient vector over a group basis with exact field scalars.
template <class F>
class AlgebraVector {
 public:
  using scalar_type = typename F::scalar_type;

  AlgebraVector(F field, BasisPtr basis)
      : field_(std::move(field)), basis_(std::move(basis)), coeffs_(basis_->size(), field_.from_int(0)) {}
  AlgebraVector(F field, BasisPtr basis, std::vector<scalar_type> coeffs)
      : field_(std::move(field)), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_->size()) throw basis_error("coefficient count does not match basis size");
  }

  const F& field() const { return field_; }
  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const scalar_type> coeffs() const { return coeffs_; }
  std::span<scalar_type> coeffs() { return coeffs_; }
  const scalar_type& operator[](std::size_t pos) const { return coeffs_[pos]; }
  scalar_type& operator[](std::size_t pos) { return coeffs_[pos]; }
  /// Coefficient of a group element (zero when outside the basis).
  scalar_type at_element(int g) const {
    int pos = basis_->position(g);
    return pos < 0 ? field_.from_int(0) : coeffs_[static_cast<std::size_t>(pos)];
  }

  std::size_t support_size() const {
    std::size_t k = 0;
    for (const auto& c : coeffs_) k += F::is_zero(c) ? 0 : 1;
    return k;
  }
  bool is_zero() const { return support_size() == 0; }

  AlgebraVector& operator+=(const AlgebraVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  AlgebraVector& operator-=(const AlgebraVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  AlgebraVector& operator*=(const scalar_type& c) {
    for (auto& x : coeffs_) x = field_.mul(x, c);
    return *this;
  }
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const scalar_type& c, AlgebraVector a) { return a *= c; }
  bool operator==(const AlgebraVector& o) const { return basis_ == o.basis_ && coeffs_ == o.coeffs_; }

  void check_compatible(const AlgebraVector& o) const {
    if (basis_ != o.basis_) throw basis_error("algebra vectors live on different bases");
    if (!(field_ == o.field_)) throw basis_error("algebra vectors live over different fields");
  }

 private:
  F field_;
  BasisPtr basis_;
  std::vector<scalar_type> coeffs_;
};

template <class F>
AlgebraVector<F> delta(const F& field, const BasisPtr& basis, int g) {
  AlgebraVector<F> v(field, basis);
  int pos = basis->position(g);
  if (pos < 0) throw basis_error("element outside the basis");
  v[static_cast<std::size_t>(pos)] = field.from_int(1);
  return v;
}

template <class F>
AlgebraVector<F> from_generator(const F& field, const BasisPtr& basis, const SparseGenerator& gen) {
  AlgebraVector<F> v(field, basis);
  for (auto [g, c] : gen.terms) {
    int pos = basis->position(g);
    if (pos < 0) throw basis_error("generator term outside the basis");
    v[static_cast<std::size_t>(pos)] = field.add(v[static_cast<std::size_t>(pos)], field.from_int(c));
  }
  return v;
}

/// out += sign·(gen·v) (left) or sign·(v·gen) (right), using translation tables.
template <class F>
void accumulate_translate(const SparseGenerator& gen, std::span<const typename F::scalar_type> v, const F& field,
                          const GroupBasis& basis, bool left, long sign, std::span<typename F::scalar_type> out) {
  for (auto [g, c] : gen.terms) {
    const Translation& t = basis.translation(g);
    const auto& table = left ? t.left : t.right;
    const auto coeff = field.from_int(sign * c);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (F::is_zero(v[j])) continue;
      auto& slot = out[static_cast<std::size_t>(table[j])];
      slot = field.add(slot, field.mul(coeff, v[j]));
    }
  }
}

template <class F>
AlgebraVector<F> left_multiply(const SparseGenerator& gen, const AlgebraVector<F>& v) {
  AlgebraVector<F> out(v.field(), v.basis());
  accumulate_translate(gen, v.coeffs(), v.field(), *v.basis(), true, 1, out.coeffs());
  return out;
}

template <class F>
AlgebraVector<F> right_multiply(const AlgebraVector<F>& v, const SparseGenerator& gen) {
  AlgebraVector<F> out(v.field(), v.basis());
  accumulate_translate(gen, v.coeffs(), v.field(), *v.basis(), false, 1, out.coeffs());
  return out;
}

/// gen·v − v·gen, in O(|support(gen)|·dim).
template <class F>
AlgebraVector<F> bracket_gen(const SparseGenerator& gen, const AlgebraVector<F>& v) {
  AlgebraVector<F> out(v.field(), v.basis());
  accumulate_translate(gen, v.coeffs(), v.field(), *v.basis(), true, 1, out.coeffs());
  accumulate_translate(gen, v.coeffs(), v.field(), *v.basis(), false, -1, out.coeffs());
  return out;
}

/// Full convolution product; quadratic in the supports.
template <class F>
AlgebraVector<F> multiply(const AlgebraVector<F>& a, const AlgebraVector<F>& b) {
  a.check_compatible(b);
  const auto& basis = *a.basis();
  const auto& group = basis.group();
  const F& field = a.field();
  AlgebraVector<F> out(field, a.basis());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (F::is_zero(b[j])) continue;
      int pos = basis.position(group.multiply(basis.element(i), basis.element(j)));
      out[static_cast<std::size_t>(pos)] = field.add(out[static_cast<std::size_t>(pos)], field.mul(a[i], b[j]));
    }
  }
  return out;
}

/// Σ_{g ∈ cls} g.
template <class F>
AlgebraVector<F> group_sum_class(const F& field, const BasisPtr& basis, std::span<const int> cls) {
  AlgebraVector<F> v(field, basis);
  for (int g : cls) {
    int pos = basis->position(g);
    if (pos < 0) throw basis_error("class element outside the basis");
    v[static_cast<std::size_t>(pos)] = field.add(v[static_cast<std::size_t>(pos)], field.from_int(1));
  }
  return v;
}

/// Re-indexes a vector on kW supported on a subgroup onto that subgroup's basis.
template <class F>
AlgebraVector<F> restrict_to_subgroup(const AlgebraVector<F>& v, const BasisPtr& sub) {
  const auto& from = *v.basis();
  AlgebraVector<F> out(v.field(), sub);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (F::is_zero(v[i])) continue;
    int pos = sub->position(from.element(i));
    if (pos < 0) throw basis_error("nonzero coefficient outside the subgroup");
    out[static_cast<std::size_t>(pos)] = v[i];
  }
  return out;
}

/// Pushes a vector on a subgroup basis into a larger basis of the same group.
template <class F>
AlgebraVector<F> extend_to(const AlgebraVector<F>& v, const BasisPtr& target) {
  const auto& from = *v.basis();
  AlgebraVector<F> out(v.field(), target);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (F::is_zero(v[i])) continue;
    int pos = target->position(from.element(i));
    if (pos < 0) throw basis_error("element outside the target basis");
    out[static_cast<std::size_t>(pos)] = v[i];
  }
  return out;
}

/// Reduction of an integral rational vector modulo p.
AlgebraVector<PrimeField> reduce_mod(const AlgebraVector<Rationals>& v, const PrimeField& field);

/// Coordinates on the subspace L_ε spanned by the g − ε(g)g⁻¹. Vectors of
/// L_ε satisfy v[g⁻¹] = −ε(g)·v[g], so one coordinate per inverse pair
/// determines them; coordinates forced to zero are dropped. The identity chart
/// keeps every coordinate.
class CoordinateMap {
 public:
  static CoordinateMap identity(std::size_t size);
  /// `use_sign` false gives the chart of L_1 (ε treated as trivial).
  static CoordinateMap l_epsilon(const GroupBasis& basis, bool use_sign = true);

  std::size_t full_size() const { return full_size_; }
  std::size_t size() const { return kept_.size(); }
  bool is_identity() const { return partner_.empty(); }

  template <class S>
  std::vector<S> project(std::span<const S> full) const {
    std::vector<S> out;
    out.reserve(kept_.size());
    for (int k : kept_) out.push_back(full[static_cast<std::size_t>(k)]);
    return out;
  }

  template <class F>
  std::vector<typename F::scalar_type> lift(std::span<const typename F::scalar_type> coords, const F& field) const {
    std::vector<typename F::scalar_type> full(full_size_, field.from_int(0));
    for (std::size_t k = 0; k < kept_.size(); ++k) {
      full[static_cast<std::size_t>(kept_[k])] = coords[k];
      if (!partner_.empty() && partner_[k] >= 0) {
        full[static_cast<std::size_t>(partner_[k])] =
            partner_sign_[k] > 0 ? coords[k] : field.sub(field.from_int(0), coords[k]);
      }
    }
    return full;
  }

  /// True when `full` satisfies the defining relations of the chart.
  template <class F>
  bool admits(std::span<const typename F::scalar_type> full, const F& field) const {
    auto round_trip = lift(std::span<const typename F::scalar_type>(project(full)), field);
    return std::equal(round_trip.begin(), round_trip.end(), full.begin());
  }

 private:
  std::size_t full_size_ = 0;
  std::vector<int> kept_;
  std::vector<int> partner_;
  std::vector<int> partner_sign_;
};

nlohmann::json to_json(const AlgebraVector<Rationals>& v);
nlohmann::json to_json(const AlgebraVector<PrimeField>& v);

}  // namespace infhecke
