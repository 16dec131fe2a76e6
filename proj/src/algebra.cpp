#include "infhecke/algebra.hpp"

namespace infhecke {

std::shared_ptr<const GroupBasis> GroupBasis::full(std::shared_ptr<const ReflectionGroup> group) {
  std::shared_ptr<GroupBasis> b(new GroupBasis());
  const std::size_t order = group->order();
  b->elements_.resize(order);
  b->position_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    b->elements_[i] = static_cast<int>(i);
    b->position_[i] = static_cast<int>(i);
  }
  b->tag_ = "W";
  b->group_ = std::move(group);
  return b;
}

std::shared_ptr<const GroupBasis> GroupBasis::subgroup(std::shared_ptr<const ReflectionGroup> group,
                                                       const Subgroup& subgroup, std::string tag) {
  std::shared_ptr<GroupBasis> b(new GroupBasis());
  b->elements_ = subgroup.elements;
  b->position_ = subgroup.position;
  b->tag_ = std::move(tag);
  b->group_ = std::move(group);
  return b;
}

const Translation& GroupBasis::translation(int g) const {
  std::lock_guard lock(cache_mutex_);
  auto it = cache_.find(g);
  if (it != cache_.end()) return *it->second;
  if (!contains(g)) throw basis_error("translation by an element outside the basis");
  auto t = std::make_unique<Translation>();
  t->left.resize(elements_.size());
  t->right.resize(elements_.size());
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    t->left[j] = position(group_->multiply(g, elements_[j]));
    t->right[j] = position(group_->multiply(elements_[j], g));
  }
  const Translation& ref = *t;
  cache_.emplace(g, std::move(t));
  return ref;
}

SparseGenerator SparseGenerator::commutator(const ReflectionGroup& group, int s, int u) {
  int su = group.multiply(s, u);
  int us = group.multiply(u, s);
  if (su == us) return {};
  return {{{su, 1}, {us, -1}}};
}

AlgebraVector<PrimeField> reduce_mod(const AlgebraVector<Rationals>& v, const PrimeField& field) {
  AlgebraVector<PrimeField> out(field, v.basis());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const mpq_class& c = v[i];
    if (c.get_den() != 1) throw std::domain_error("reduce_mod needs integral coefficients");
    mpz_class r = c.get_num() % static_cast<unsigned long>(field.modulus);
    if (r < 0) r += field.modulus;
    out[i] = static_cast<std::uint32_t>(r.get_ui());
  }
  return out;
}

CoordinateMap CoordinateMap::identity(std::size_t size) {
  CoordinateMap c;
  c.full_size_ = size;
  c.kept_.resize(size);
  for (std::size_t i = 0; i < size; ++i) c.kept_[i] = static_cast<int>(i);
  return c;
}

CoordinateMap CoordinateMap::l_epsilon(const GroupBasis& basis, bool use_sign) {
  const auto& group = basis.group();
  CoordinateMap c;
  c.full_size_ = basis.size();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    int g = basis.element(j);
    int eps = use_sign ? group.sign(g) : 1;
    int inv = basis.position(group.inverse(g));
    if (inv < 0) throw basis_error("basis is not closed under inversion");
    if (inv == static_cast<int>(j)) {
      // v[g] = -ε(g) v[g] forces v[g] = 0 when ε(g) = 1.
      if (eps == -1) {
        c.kept_.push_back(static_cast<int>(j));
        c.partner_.push_back(-1);
        c.partner_sign_.push_back(0);
      }
    } else if (static_cast<int>(j) < inv) {
      c.kept_.push_back(static_cast<int>(j));
      c.partner_.push_back(inv);
      c.partner_sign_.push_back(-eps);
    }
  }
  return c;
}

nlohmann::json to_json(const AlgebraVector<Rationals>& v) {
  auto out = nlohmann::json::array();
  for (const auto& c : v.coeffs()) out.push_back(c.get_str());
  return out;
}

nlohmann::json to_json(const AlgebraVector<PrimeField>& v) {
  auto out = nlohmann::json::array();
  for (auto c : v.coeffs()) out.push_back(c);
  return out;
}

}  // namespace infhecke
