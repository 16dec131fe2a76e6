#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "infhecke/field.hpp"

namespace infhecke {

/// Incremental reduced row-echelon basis of a subspace of F^ambient.
///
/// Rows are kept fully reduced; the pivot of a row is its first nonzero
/// coordinate and is normalized to 1. Because the reduced echelon form of a
/// subspace is unique, the stored basis depends only on the span, never on
/// insertion order, batching or worker count.
template <class F>
class SpanBasis;

template <>
class SpanBasis<PrimeField> {
 public:
  using scalar_type = PrimeField::scalar_type;
  using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  SpanBasis(PrimeField field, std::size_t ambient, unsigned workers = 1);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rank_; }
  void set_workers(unsigned workers) { workers_ = workers == 0 ? 1 : workers; }

  /// Returns true iff the rank grew.
  bool insert(std::span<const scalar_type> v);
  /// Inserts candidates in order; returns the indices of those that grew the
  /// span (each one measured against the span of the basis plus all earlier
  /// candidates).
  std::vector<std::size_t> insert_batch(std::span<const std::vector<scalar_type>> candidates);
  bool contains(std::span<const scalar_type> v) const;
  std::vector<scalar_type> reduce(std::span<const scalar_type> v) const;

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// i-th basis row in pivot order.
  std::vector<scalar_type> row(std::size_t i) const;

 private:
  void check_dim(std::size_t n) const;
  void reserve(std::size_t rows);
  void reduce_block(Eigen::Ref<Matrix> block) const;
  void reduce_slice(Eigen::Ref<Matrix> block) const;
  void mod_inplace(Eigen::Ref<Matrix> block) const;
  void insert_block(Matrix& block, std::vector<std::size_t>& grew, std::size_t offset);
  const std::vector<std::size_t>& order() const;

  PrimeField field_;
  std::size_t ambient_;
  std::size_t rank_ = 0;
  unsigned workers_ = 1;
  Matrix rows_;
  std::vector<Eigen::Index> row_pivot_;
  mutable std::vector<std::size_t> order_;
  mutable bool order_dirty_ = false;
};

template <>
class SpanBasis<Rationals> {
 public:
  using scalar_type = mpq_class;

  SpanBasis(Rationals field, std::size_t ambient, unsigned workers = 1);

  const Rationals& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  void set_workers(unsigned workers) { workers_ = workers == 0 ? 1 : workers; }

  bool insert(std::span<const scalar_type> v);
  std::vector<std::size_t> insert_batch(std::span<const std::vector<scalar_type>> candidates);
  bool contains(std::span<const scalar_type> v) const;
  std::vector<scalar_type> reduce(std::span<const scalar_type> v) const;

  std::vector<std::size_t> pivots() const;
  std::vector<scalar_type> row(std::size_t i) const;

 private:
  struct Row {
    std::vector<mpq_class> values;
    std::vector<std::uint32_t> support;
    std::size_t pivot;
  };
  void check_dim(std::size_t n) const;
  // Reduces v in place against rows [first, rows_.size()).
  void reduce_in_place(std::vector<mpq_class>& v, std::size_t first) const;
  bool insert_reduced(std::vector<mpq_class>&& v);
  const std::vector<std::size_t>& order() const;

  Rationals field_;
  std::size_t ambient_;
  unsigned workers_ = 1;
  std::vector<Row> rows_;
  mutable std::vector<std::size_t> order_;
  mutable bool order_dirty_ = false;
};

/// A ⊆ B.
template <class F>
bool subspace_leq(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces of different ambient spaces");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!b.contains(a.row(i))) return false;
  }
  return true;
}

template <class F>
std::size_t dim_sum(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces of different ambient spaces");
  SpanBasis<F> sum = b;
  std::vector<std::vector<typename F::scalar_type>> rows;
  rows.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) rows.push_back(a.row(i));
  sum.insert_batch(rows);
  return sum.rank();
}

/// dim A + dim B − dim(A + B).
template <class F>
std::size_t dim_intersection(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  return a.rank() + b.rank() - dim_sum(a, b);
}

}  // namespace infhecke
