#include "infhecke/closure.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace infhecke {

namespace {

template <class F>
using Vec = std::vector<typename F::scalar_type>;

// Candidate batches are flushed into the span once they reach this many bytes.
constexpr std::size_t kBatchBytes = std::size_t{64} << 20;

template <class F>
std::size_t batch_limit(std::size_t width) {
  const std::size_t per = std::max<std::size_t>(1, width * sizeof(typename F::scalar_type));
  return std::max<std::size_t>(256, kBatchBytes / per);
}

template <class F>
bool all_zero(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return F::is_zero(x); });
}

template <class F>
void bracket_into(const SparseGenerator& gen, const Vec<F>& v, const F& field, const GroupBasis& basis, Vec<F>& out) {
  out.assign(basis.size(), field.from_int(0));
  accumulate_translate(gen, std::span<const typename F::scalar_type>(v), field, basis, true, 1,
                       std::span<typename F::scalar_type>(out));
  accumulate_translate(gen, std::span<const typename F::scalar_type>(v), field, basis, false, -1,
                       std::span<typename F::scalar_type>(out));
}

template <class F>
Vec<F> generator_vector(const F& field, const BasisPtr& basis, const SparseGenerator& gen) {
  auto v = from_generator(field, basis, gen);
  return Vec<F>(v.coeffs().begin(), v.coeffs().end());
}

template <class F>
std::string field_name(const F& field) {
  return field.name();
}

template <class F>
FieldSpec field_spec(const F& field) {
  if constexpr (std::is_same_v<F, Rationals>) {
    (void)field;
    return FieldSpec::rationals();
  } else {
    return FieldSpec::prime(field.modulus);
  }
}

GradingReport make_grading_report(const std::vector<std::size_t>& m, bool converged, std::size_t dim_z) {
  GradingReport r;
  r.dims_M = m;
  r.dim_Z = dim_z;
  r.converged = converged;
  const int rounds = static_cast<int>(m.size());
  if (rounds == 0) return r;
  auto m_at = [&](int n) { return static_cast<long>(m[static_cast<std::size_t>(std::min(n, rounds) - 1)]); };
  const int top = converged ? rounds + 2 : rounds;
  std::vector<long> h(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 1; n <= top; ++n) {
    if (n == 1) {
      h[1] = m_at(1);
    } else if (n == 2) {
      h[2] = m_at(2) - m_at(1);
    } else {
      h[n] = m_at(n) - h[static_cast<std::size_t>(n - 1)] - static_cast<long>(dim_z);
    }
    if (h[static_cast<std::size_t>(n)] < 0) throw std::logic_error("negative graded dimension");
  }
  if (!converged) {
    for (int n = 1; n <= rounds; ++n) r.dims_Hgr.push_back(static_cast<std::size_t>(h[static_cast<std::size_t>(n)]));
    return r;
  }
  // Past M's last growth the recursion is 2-periodic; find where the period starts.
  int s = rounds;
  while (s > 1 && h[static_cast<std::size_t>(s - 1)] == h[static_cast<std::size_t>(s + 1)]) --s;
  r.stabilization_degree = s;
  for (int n = 1; n <= s + 1; ++n) r.dims_Hgr.push_back(static_cast<std::size_t>(h[static_cast<std::size_t>(n)]));
  const int even = s % 2 == 0 ? s : s + 1;
  r.stable_even = static_cast<std::size_t>(h[static_cast<std::size_t>(even)]);
  r.stable_odd = static_cast<std::size_t>(h[static_cast<std::size_t>(s % 2 == 1 ? s : s + 1)]);
  return r;
}

}  // namespace

std::size_t GradingReport::hgr(int n) const {
  if (n < 1) throw std::out_of_range("graded degree must be positive");
  if (static_cast<std::size_t>(n) <= dims_Hgr.size()) return dims_Hgr[static_cast<std::size_t>(n - 1)];
  if (!converged) throw std::out_of_range("degree beyond an unconverged grading");
  return n % 2 == 0 ? stable_even : stable_odd;
}

std::string certification_note(const FieldSpec& field) {
  if (field.is_rational()) return "exact rank over Q";
  return "rank over " + field.name() + ", a lower bound for the rational rank";
}

std::vector<SparseGenerator> commutator_generators(const ReflectionGroup& group) {
  std::vector<SparseGenerator> out;
  std::set<int> seen;
  for (int s : group.reflections()) {
    for (int u : group.reflections()) {
      int su = group.multiply(s, u);
      if (su == group.multiply(u, s) || !seen.insert(su).second) continue;
      out.push_back(SparseGenerator::commutator(group, s, u));
    }
  }
  return out;
}

template <class F>
ClosureResult<F> lie_closure(const F& field, const BasisPtr& basis, std::vector<SparseGenerator> gens,
                             const std::vector<Vec<F>>& initial, CoordinateMap chart, const ClosureOptions& options) {
  ClosureResult<F> out{SpanBasis<F>(field, chart.size(), options.workers), std::move(chart), basis, {}, false,
                       std::move(gens)};
  auto& span = out.span;
  const auto& ch = out.chart;
  const std::size_t limit = batch_limit<F>(ch.size());

  std::vector<Vec<F>> fresh;
  {
    std::vector<Vec<F>> proj;
    for (const auto& v : initial) {
      if (v.size() != basis->size()) throw basis_error("initial vector does not match the basis");
      if (!ch.admits(std::span<const typename F::scalar_type>(v), field))
        throw basis_error("initial vector outside the coordinate chart");
      proj.push_back(ch.project(std::span<const typename F::scalar_type>(v)));
    }
    for (auto i : span.insert_batch(proj)) fresh.push_back(initial[i]);
  }
  out.steps.push_back(span.rank());

  Vec<F> scratch;
  for (int round = 1; round <= options.max_steps; ++round) {
    if (fresh.empty() || span.rank() == ch.size()) {
      out.converged = true;
      break;
    }
    std::vector<Vec<F>> next;
    std::vector<Vec<F>> pending;
    auto flush = [&] {
      for (auto i : span.insert_batch(pending)) {
        next.push_back(ch.lift(std::span<const typename F::scalar_type>(pending[i]), field));
      }
      pending.clear();
    };
    for (const auto& v : fresh) {
      for (const auto& g : out.generators) {
        bracket_into(g, v, field, *basis, scratch);
        if (all_zero<F>(scratch)) continue;
        pending.push_back(ch.project(std::span<const typename F::scalar_type>(scratch)));
        if (pending.size() >= limit) flush();
      }
    }
    flush();
    if (next.empty()) {
      out.converged = true;
      break;
    }
    out.steps.push_back(span.rank());
    fresh = std::move(next);
  }
  return out;
}

template <class F>
ClosureResult<F> lie_generated(const F& field, const BasisPtr& basis, const std::vector<SparseGenerator>& gens,
                               const CoordinateMap& chart, const ClosureOptions& options) {
  std::vector<Vec<F>> vectors;
  std::vector<Vec<F>> proj;
  for (const auto& g : gens) {
    vectors.push_back(generator_vector(field, basis, g));
    proj.push_back(chart.project(std::span<const typename F::scalar_type>(vectors.back())));
  }
  SpanBasis<F> probe(field, chart.size());
  std::vector<SparseGenerator> kept;
  std::vector<Vec<F>> initial;
  for (auto i : probe.insert_batch(proj)) {
    kept.push_back(gens[i]);
    initial.push_back(std::move(vectors[i]));
  }
  return lie_closure(field, basis, std::move(kept), initial, chart, options);
}

template <class F>
GradingResult<F> grading(const GroupPtr& group, const F& field, int max_degree, unsigned workers) {
  if (max_degree < 3) throw std::invalid_argument("max degree must be at least 3");
  const auto start = std::chrono::steady_clock::now();
  auto full = GroupBasis::full(group);
  auto chart = CoordinateMap::l_epsilon(*full, true);
  std::vector<SparseGenerator> gens;
  std::vector<Vec<F>> initial;
  for (int s : group->reflections()) {
    gens.push_back(SparseGenerator::element(s));
    initial.push_back(generator_vector(field, full, gens.back()));
  }
  ClosureOptions options{max_degree, workers};
  auto closure = lie_closure(field, full, std::move(gens), initial, std::move(chart), options);
  GradingReport report = make_grading_report(closure.steps, closure.converged, reflection_classes(*group).size());
  report.group = group->descriptor().name();
  report.field = field_name(field);
  report.certification = certification_note(field_spec(field));
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return GradingResult<F>{std::move(report), std::move(closure)};
}

template <class F>
std::vector<SpanBasis<F>> graded_pieces(const GroupPtr& group, const BasisPtr& full, const CoordinateMap& chart,
                                        const F& field, int upto, unsigned workers) {
  std::vector<SpanBasis<F>> pieces;
  if (upto < 1) return pieces;
  {
    SpanBasis<F> g1(field, chart.size(), workers);
    std::vector<Vec<F>> proj;
    for (int s : group->reflections()) {
      auto v = generator_vector(field, full, SparseGenerator::element(s));
      proj.push_back(chart.project(std::span<const typename F::scalar_type>(v)));
    }
    g1.insert_batch(proj);
    pieces.push_back(std::move(g1));
  }
  const std::size_t limit = batch_limit<F>(chart.size());
  Vec<F> scratch;
  for (int r = 2; r <= upto; ++r) {
    const auto& prev = pieces.back();
    SpanBasis<F> next(field, chart.size(), workers);
    std::vector<Vec<F>> pending;
    for (std::size_t i = 0; i < prev.rank(); ++i) {
      auto v = chart.lift(std::span<const typename F::scalar_type>(prev.row(i)), field);
      for (int s : group->reflections()) {
        bracket_into(SparseGenerator::element(s), v, field, *full, scratch);
        if (all_zero<F>(scratch)) continue;
        pending.push_back(chart.project(std::span<const typename F::scalar_type>(scratch)));
        if (pending.size() >= limit) {
          next.insert_batch(pending);
          pending.clear();
        }
      }
    }
    next.insert_batch(pending);
    pieces.push_back(std::move(next));
  }
  return pieces;
}

template <class F>
ClosureResult<F> rotation_algebra(const GroupPtr& group, const F& field, const ClosureOptions& options) {
  auto basis = GroupBasis::subgroup(group, rotation_subgroup(*group), "O");
  auto chart = CoordinateMap::l_epsilon(*basis, false);
  return lie_generated(field, basis, commutator_generators(*group), chart, options);
}

template <class F>
std::vector<Vec<F>> lifted_rows(const SpanBasis<F>& span, const CoordinateMap& chart, const F& field) {
  std::vector<Vec<F>> rows;
  rows.reserve(span.rank());
  for (std::size_t i = 0; i < span.rank(); ++i) {
    rows.push_back(chart.lift(std::span<const typename F::scalar_type>(span.row(i)), field));
  }
  return rows;
}

template <class F>
SpanBasis<F> span_in_basis(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& from,
                           const BasisPtr& to, const F& field) {
  SpanBasis<F> out(field, to->size());
  std::vector<Vec<F>> rows;
  for (auto& row : lifted_rows(span, chart, field)) {
    AlgebraVector<F> v(field, from, std::move(row));
    auto w = extend_to(v, to);
    rows.emplace_back(w.coeffs().begin(), w.coeffs().end());
  }
  out.insert_batch(rows);
  return out;
}

template <class F>
std::size_t centralizer_dim_within(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& basis,
                                   const std::vector<SparseGenerator>& gens, const F& field) {
  if (span.rank() == 0) return 0;
  const std::size_t n = basis->size();
  SpanBasis<F> image(field, n * gens.size());
  Vec<F> scratch;
  std::vector<Vec<F>> stacked;
  for (auto& row : lifted_rows(span, chart, field)) {
    Vec<F> t;
    t.reserve(n * gens.size());
    for (const auto& g : gens) {
      bracket_into(g, row, field, *basis, scratch);
      t.insert(t.end(), scratch.begin(), scratch.end());
    }
    stacked.push_back(std::move(t));
  }
  image.insert_batch(stacked);
  return span.rank() - image.rank();
}

template <class F>
std::size_t associative_closure_dim(const std::vector<SparseGenerator>& gens, const BasisPtr& basis, const F& field,
                                    int max_steps) {
  const std::size_t n = basis->size();
  SpanBasis<F> span(field, n);
  Vec<F> one(n, field.from_int(0));
  int e = basis->position(0);
  if (e < 0) throw basis_error("basis does not contain the identity");
  one[static_cast<std::size_t>(e)] = field.from_int(1);
  span.insert(one);
  std::vector<Vec<F>> fresh{one};
  for (int step = 0; step < max_steps; ++step) {
    std::vector<Vec<F>> candidates;
    for (const auto& v : fresh) {
      for (const auto& g : gens) {
        Vec<F> w(n, field.from_int(0));
        accumulate_translate(g, std::span<const typename F::scalar_type>(v), field, *basis, false, 1,
                             std::span<typename F::scalar_type>(w));
        if (!all_zero<F>(w)) candidates.push_back(std::move(w));
      }
    }
    std::vector<Vec<F>> next;
    for (auto i : span.insert_batch(candidates)) next.push_back(std::move(candidates[i]));
    if (next.empty()) return span.rank();
    fresh = std::move(next);
  }
  throw convergence_error("associative closure did not converge");
}

template <class F>
SpanBasis<F> l1_span(const BasisPtr& full, Parity part, const F& field) {
  const auto& group = full->group();
  const std::size_t n = full->size();
  SpanBasis<F> span(field, n);
  std::vector<Vec<F>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    int g = full->element(j);
    bool rotation = group.sign(g) == 1;
    if (rotation != (part == Parity::even)) continue;
    int inv = full->position(group.inverse(g));
    if (part == Parity::even && inv <= static_cast<int>(j)) continue;  // g = g⁻¹ gives 0; pairs once
    if (part == Parity::odd && inv < static_cast<int>(j)) continue;
    Vec<F> v(n, field.from_int(0));
    v[j] = field.from_int(1);
    auto& partner = v[static_cast<std::size_t>(inv)];
    partner = field.add(partner, field.from_int(part == Parity::even ? -1 : 1));
    rows.push_back(std::move(v));
  }
  span.insert_batch(rows);
  return span;
}

template <class F>
SpanBasis<F> bracket_span(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& basis,
                          const std::vector<SparseGenerator>& gens, const F& field) {
  SpanBasis<F> out(field, chart.size());
  const std::size_t limit = batch_limit<F>(chart.size());
  std::vector<Vec<F>> pending;
  Vec<F> scratch;
  for (const auto& row : lifted_rows(span, chart, field)) {
    for (const auto& g : gens) {
      bracket_into(g, row, field, *basis, scratch);
      if (all_zero<F>(scratch)) continue;
      if (!chart.admits(std::span<const typename F::scalar_type>(scratch), field))
        throw basis_error("chart is not stable under the bracket");
      pending.push_back(chart.project(std::span<const typename F::scalar_type>(scratch)));
      if (pending.size() >= limit) {
        out.insert_batch(pending);
        pending.clear();
      }
    }
  }
  out.insert_batch(pending);
  return out;
}

template <class F>
SpanBasis<F> project_span(const SpanBasis<F>& full_span, const CoordinateMap& chart, const F& field) {
  if (full_span.ambient() != chart.full_size()) throw basis_error("span does not match the chart");
  SpanBasis<F> out(field, chart.size());
  std::vector<Vec<F>> rows;
  for (std::size_t i = 0; i < full_span.rank(); ++i) {
    auto row = full_span.row(i);
    if (!chart.admits(std::span<const typename F::scalar_type>(row), field))
      throw basis_error("span leaves the chart's subspace");
    rows.push_back(chart.project(std::span<const typename F::scalar_type>(row)));
  }
  out.insert_batch(rows);
  return out;
}

#define INFHECKE_INSTANTIATE(F)                                                                                    \
  template ClosureResult<F> lie_closure<F>(const F&, const BasisPtr&, std::vector<SparseGenerator>,               \
                                           const std::vector<Vec<F>>&, CoordinateMap, const ClosureOptions&);     \
  template ClosureResult<F> lie_generated<F>(const F&, const BasisPtr&, const std::vector<SparseGenerator>&,      \
                                             const CoordinateMap&, const ClosureOptions&);                        \
  template GradingResult<F> grading<F>(const GroupPtr&, const F&, int, unsigned);                                 \
  template std::vector<SpanBasis<F>> graded_pieces<F>(const GroupPtr&, const BasisPtr&, const CoordinateMap&,     \
                                                      const F&, int, unsigned);                                   \
  template ClosureResult<F> rotation_algebra<F>(const GroupPtr&, const F&, const ClosureOptions&);                \
  template std::size_t centralizer_dim_within<F>(const SpanBasis<F>&, const CoordinateMap&, const BasisPtr&,      \
                                                 const std::vector<SparseGenerator>&, const F&);                  \
  template std::size_t associative_closure_dim<F>(const std::vector<SparseGenerator>&, const BasisPtr&, const F&, \
                                                  int);                                                           \
  template SpanBasis<F> l1_span<F>(const BasisPtr&, Parity, const F&);                                            \
  template std::vector<Vec<F>> lifted_rows<F>(const SpanBasis<F>&, const CoordinateMap&, const F&);              \
  template SpanBasis<F> span_in_basis<F>(const SpanBasis<F>&, const CoordinateMap&, const BasisPtr&,              \
                                         const BasisPtr&, const F&);                                           \
  template SpanBasis<F> bracket_span<F>(const SpanBasis<F>&, const CoordinateMap&, const BasisPtr&,               \
                                        const std::vector<SparseGenerator>&, const F&);                           \
  template SpanBasis<F> project_span<F>(const SpanBasis<F>&, const CoordinateMap&, const F&);

INFHECKE_INSTANTIATE(Rationals)
INFHECKE_INSTANTIATE(PrimeField)

#undef INFHECKE_INSTANTIATE

}  // namespace infhecke
