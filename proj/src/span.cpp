#include "infhecke/span.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace infhecke {

namespace {

constexpr Eigen::Index kChunk = 256;

}  // namespace

// ---------------------------------------------------------------------------
// F_p: residues stored as doubles. Every intermediate of a block reduction is
// an integer of magnitude below rank·p² < 2^53, so GEMM is exact.

SpanBasis<PrimeField>::SpanBasis(PrimeField field, std::size_t ambient, unsigned workers)
    : field_(field), ambient_(ambient), workers_(workers == 0 ? 1 : workers) {
  if (field_.modulus < 3 || field_.modulus > kMaxPrime) throw std::invalid_argument("unsupported modulus");
}

void SpanBasis<PrimeField>::check_dim(std::size_t n) const {
  if (n != ambient_) throw std::invalid_argument("vector dimension does not match the ambient space");
}

void SpanBasis<PrimeField>::reserve(std::size_t rows) {
  if (rows <= static_cast<std::size_t>(rows_.rows())) return;
  std::size_t cap = std::max<std::size_t>(rows, std::min<std::size_t>(ambient_, 2 * rows_.rows() + 64));
  Matrix grown(static_cast<Eigen::Index>(cap), static_cast<Eigen::Index>(ambient_));
  if (rank_ > 0) grown.topRows(static_cast<Eigen::Index>(rank_)) = rows_.topRows(static_cast<Eigen::Index>(rank_));
  rows_.swap(grown);
}

void SpanBasis<PrimeField>::mod_inplace(Eigen::Ref<Matrix> block) const {
  const double p = field_.modulus;
  auto a = block.array();
  a -= p * (a / p).floor();
  a = (a < 0.0).select(a + p, a);
  a = (a >= p).select(a - p, a);
}

void SpanBasis<PrimeField>::reduce_slice(Eigen::Ref<Matrix> block) const {
  const auto r = static_cast<Eigen::Index>(rank_);
  Matrix coef = block(Eigen::all, row_pivot_);
  block.noalias() -= coef * rows_.topRows(r);
  mod_inplace(block);
}

void SpanBasis<PrimeField>::reduce_block(Eigen::Ref<Matrix> block) const {
  if (rank_ == 0 || block.rows() == 0) return;
  const Eigen::Index k = block.rows();
  const auto workers = static_cast<Eigen::Index>(std::min<unsigned>(workers_, static_cast<unsigned>(k)));
  if (workers <= 1) {
    reduce_slice(block);
    return;
  }
  std::vector<std::jthread> threads;
  const Eigen::Index step = (k + workers - 1) / workers;
  for (Eigen::Index start = 0; start < k; start += step) {
    const Eigen::Index len = std::min(step, k - start);
    threads.emplace_back([this, &block, start, len] { reduce_slice(block.middleRows(start, len)); });
  }
}

void SpanBasis<PrimeField>::insert_block(Matrix& block, std::vector<std::size_t>& grew, std::size_t offset) {
  reduce_block(block);
  const double p = field_.modulus;
  std::vector<Eigen::Index> fresh;  // block rows that became new basis rows
  std::vector<Eigen::Index> fresh_pivot;
  for (Eigen::Index i = 0; i < block.rows(); ++i) {
    auto row = block.row(i);
    for (std::size_t t = 0; t < fresh.size(); ++t) {
      const double c = row(fresh_pivot[t]);
      if (c != 0.0) {
        row -= c * block.row(fresh[t]);
        mod_inplace(row);
      }
    }
    Eigen::Index pivot = -1;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      if (row(j) != 0.0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) continue;
    const double inv = field_.inv(static_cast<std::uint32_t>(row(pivot)));
    if (inv != 1.0) {
      row *= inv;
      mod_inplace(row);
    }
    fresh.push_back(i);
    fresh_pivot.push_back(pivot);
    grew.push_back(offset + static_cast<std::size_t>(i));
  }
  if (fresh.empty()) return;

  // Back-substitution among the new rows.
  for (std::size_t t = fresh.size(); t-- > 1;) {
    for (std::size_t u = 0; u < t; ++u) {
      const double c = block(fresh[u], fresh_pivot[t]);
      if (c != 0.0) {
        block.row(fresh[u]) -= c * block.row(fresh[t]);
        mod_inplace(block.row(fresh[u]));
      }
    }
  }
  Matrix added = block(fresh, Eigen::all);
  // Clear the new pivot columns from the existing rows.
  if (rank_ > 0) {
    auto old = rows_.topRows(static_cast<Eigen::Index>(rank_));
    Matrix coef = old(Eigen::all, fresh_pivot);
    old.noalias() -= coef * added;
    mod_inplace(old);
  }
  (void)p;
  reserve(rank_ + fresh.size());
  rows_.middleRows(static_cast<Eigen::Index>(rank_), static_cast<Eigen::Index>(fresh.size())) = added;
  row_pivot_.insert(row_pivot_.end(), fresh_pivot.begin(), fresh_pivot.end());
  rank_ += fresh.size();
  order_dirty_ = true;
}

std::vector<std::size_t> SpanBasis<PrimeField>::insert_batch(std::span<const std::vector<scalar_type>> candidates) {
  std::vector<std::size_t> grew;
  const auto n = static_cast<Eigen::Index>(ambient_);
  for (std::size_t start = 0; start < candidates.size(); start += kChunk) {
    if (rank_ == ambient_) break;
    const std::size_t len = std::min<std::size_t>(kChunk, candidates.size() - start);
    Matrix block(static_cast<Eigen::Index>(len), n);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& v = candidates[start + i];
      check_dim(v.size());
      for (Eigen::Index j = 0; j < n; ++j) block(static_cast<Eigen::Index>(i), j) = v[static_cast<std::size_t>(j)];
    }
    insert_block(block, grew, start);
  }
  return grew;
}

bool SpanBasis<PrimeField>::insert(std::span<const scalar_type> v) {
  check_dim(v.size());
  std::vector<std::vector<scalar_type>> one{std::vector<scalar_type>(v.begin(), v.end())};
  return !insert_batch(one).empty();
}

std::vector<SpanBasis<PrimeField>::scalar_type> SpanBasis<PrimeField>::reduce(std::span<const scalar_type> v) const {
  check_dim(v.size());
  Matrix block(1, static_cast<Eigen::Index>(ambient_));
  for (std::size_t j = 0; j < ambient_; ++j) block(0, static_cast<Eigen::Index>(j)) = v[j];
  reduce_block(block);
  std::vector<scalar_type> out(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) out[j] = static_cast<scalar_type>(block(0, static_cast<Eigen::Index>(j)));
  return out;
}

bool SpanBasis<PrimeField>::contains(std::span<const scalar_type> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

const std::vector<std::size_t>& SpanBasis<PrimeField>::order() const {
  if (order_dirty_ || order_.size() != rank_) {
    order_.resize(rank_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](auto a, auto b) { return row_pivot_[a] < row_pivot_[b]; });
    order_dirty_ = false;
  }
  return order_;
}

std::vector<std::size_t> SpanBasis<PrimeField>::pivots() const {
  std::vector<std::size_t> out;
  for (auto i : order()) out.push_back(static_cast<std::size_t>(row_pivot_[i]));
  return out;
}

std::vector<SpanBasis<PrimeField>::scalar_type> SpanBasis<PrimeField>::row(std::size_t i) const {
  const auto r = static_cast<Eigen::Index>(order().at(i));
  std::vector<scalar_type> out(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) out[j] = static_cast<scalar_type>(rows_(r, static_cast<Eigen::Index>(j)));
  return out;
}

// ---------------------------------------------------------------------------
// Q: sequential reduced echelon form with sparse row supports.

SpanBasis<Rationals>::SpanBasis(Rationals field, std::size_t ambient, unsigned workers)
    : field_(field), ambient_(ambient), workers_(workers == 0 ? 1 : workers) {}

void SpanBasis<Rationals>::check_dim(std::size_t n) const {
  if (n != ambient_) throw std::invalid_argument("vector dimension does not match the ambient space");
}

void SpanBasis<Rationals>::reduce_in_place(std::vector<mpq_class>& v, std::size_t first) const {
  mpq_class c;
  mpq_class t;
  for (std::size_t r = first; r < rows_.size(); ++r) {
    const Row& row = rows_[r];
    if (sgn(v[row.pivot]) == 0) continue;
    c = v[row.pivot];
    for (auto j : row.support) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), row.values[j].get_mpq_t());
      mpq_sub(v[j].get_mpq_t(), v[j].get_mpq_t(), t.get_mpq_t());
    }
  }
}

bool SpanBasis<Rationals>::insert_reduced(std::vector<mpq_class>&& v) {
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (sgn(v[j]) != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;
  Row fresh;
  if (v[pivot] != 1) {
    mpq_class inv = 1 / v[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j) {
      if (sgn(v[j]) != 0) v[j] *= inv;
    }
  }
  fresh.pivot = pivot;
  for (std::size_t j = pivot; j < ambient_; ++j) {
    if (sgn(v[j]) != 0) fresh.support.push_back(static_cast<std::uint32_t>(j));
  }
  fresh.values = std::move(v);

  mpq_class c;
  mpq_class t;
  for (Row& row : rows_) {
    if (sgn(row.values[pivot]) == 0) continue;
    c = row.values[pivot];
    for (auto j : fresh.support) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), fresh.values[j].get_mpq_t());
      mpq_sub(row.values[j].get_mpq_t(), row.values[j].get_mpq_t(), t.get_mpq_t());
    }
    row.support.clear();
    for (std::size_t j = row.pivot; j < ambient_; ++j) {
      if (sgn(row.values[j]) != 0) row.support.push_back(static_cast<std::uint32_t>(j));
    }
  }
  rows_.push_back(std::move(fresh));
  order_dirty_ = true;
  return true;
}

bool SpanBasis<Rationals>::insert(std::span<const scalar_type> v) {
  check_dim(v.size());
  std::vector<mpq_class> w(v.begin(), v.end());
  reduce_in_place(w, 0);
  return insert_reduced(std::move(w));
}

std::vector<std::size_t> SpanBasis<Rationals>::insert_batch(std::span<const std::vector<scalar_type>> candidates) {
  for (const auto& v : candidates) check_dim(v.size());
  std::vector<std::size_t> grew;
  constexpr std::size_t chunk = 64;
  for (std::size_t start = 0; start < candidates.size(); start += chunk) {
    if (rows_.size() == ambient_) break;
    const std::size_t len = std::min(chunk, candidates.size() - start);
    const std::size_t frozen = rows_.size();
    // Reduction against the frozen basis is independent per candidate.
    std::vector<std::vector<mpq_class>> work(len);
    auto reduce_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        work[i].assign(candidates[start + i].begin(), candidates[start + i].end());
        reduce_in_place(work[i], 0);
      }
    };
    const unsigned workers = std::min<unsigned>(workers_, static_cast<unsigned>(len));
    if (workers <= 1) {
      reduce_range(0, len);
    } else {
      std::vector<std::jthread> threads;
      const std::size_t step = (len + workers - 1) / workers;
      for (std::size_t lo = 0; lo < len; lo += step) threads.emplace_back(reduce_range, lo, std::min(len, lo + step));
    }
    for (std::size_t i = 0; i < len; ++i) {
      // Rows appended during this chunk carry pivots the frozen reduction
      // has not seen yet; older rows already vanish at them.
      reduce_in_place(work[i], frozen);
      if (insert_reduced(std::move(work[i]))) grew.push_back(start + i);
    }
  }
  return grew;
}

std::vector<mpq_class> SpanBasis<Rationals>::reduce(std::span<const scalar_type> v) const {
  check_dim(v.size());
  std::vector<mpq_class> w(v.begin(), v.end());
  reduce_in_place(w, 0);
  return w;
}

bool SpanBasis<Rationals>::contains(std::span<const scalar_type> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

const std::vector<std::size_t>& SpanBasis<Rationals>::order() const {
  if (order_dirty_ || order_.size() != rows_.size()) {
    order_.resize(rows_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](auto a, auto b) { return rows_[a].pivot < rows_[b].pivot; });
    order_dirty_ = false;
  }
  return order_;
}

std::vector<std::size_t> SpanBasis<Rationals>::pivots() const {
  std::vector<std::size_t> out;
  for (auto i : order()) out.push_back(rows_[i].pivot);
  return out;
}

std::vector<mpq_class> SpanBasis<Rationals>::row(std::size_t i) const { return rows_[order().at(i)].values; }

}  // namespace infhecke
