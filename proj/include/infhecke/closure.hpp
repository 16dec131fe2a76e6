#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "infhecke/algebra.hpp"
#include "infhecke/field.hpp"
#include "infhecke/groups.hpp"
#include "infhecke/span.hpp"

namespace infhecke {

using GroupPtr = std::shared_ptr<const ReflectionGroup>;

class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions of the filtration M_r and of the graded pieces H_gr^r.
struct GradingReport {
  std::string group;
  std::string field;
  std::vector<std::size_t> dims_M;    // M_1, M_2, ... up to the first repeat (excluded)
  std::vector<std::size_t> dims_Hgr;  // H^1 .. H^{s+1}, s the stabilization degree
  std::size_t dim_Z = 0;
  std::size_t stable_even = 0;
  std::size_t stable_odd = 0;
  int stabilization_degree = 0;  // first s with H^n = H^{n+2} for all n >= s
  bool converged = false;
  double elapsed_ms = 0;
  std::string certification;

  std::size_t dim_H() const { return dims_M.empty() ? 0 : dims_M.back(); }
  /// H^n for any n >= 1, extended 2-periodically past the computed range.
  std::size_t hgr(int n) const;
  bool operator==(const GradingReport&) const = default;
};

/// Per-step dimensions V^(1) ⊆ V^(2) ⊆ ... of a Lie closure.
struct ClosureReport {
  std::string group;
  std::string field;
  std::string generators;
  std::vector<std::size_t> steps;
  std::size_t final_dim = 0;
  bool converged = false;
  double elapsed_ms = 0;
  std::string certification;
  long centralizer_dim = -1;  // -1 when not computed

  bool operator==(const ClosureReport&) const = default;
};

/// Span (in chart coordinates) produced by a closure run.
template <class F>
struct ClosureResult {
  SpanBasis<F> span;
  CoordinateMap chart;
  BasisPtr basis;
  std::vector<std::size_t> steps;
  bool converged = false;
  std::vector<SparseGenerator> generators;  // independent subset actually bracketed
};

struct ClosureOptions {
  int max_steps = 64;
  unsigned workers = 1;
};

/// V^(1) = span(initial), V^(i+1) = V^(i) + [gens, V^(i)], bracketing each
/// round only the vectors that enlarged the span in the previous round.
/// `initial` is given in full basis coordinates; every vector must lie in the
/// subspace described by `chart`, which must be stable under the brackets.
template <class F>
ClosureResult<F> lie_closure(const F& field, const BasisPtr& basis, std::vector<SparseGenerator> gens,
                             const std::vector<std::vector<typename F::scalar_type>>& initial, CoordinateMap chart,
                             const ClosureOptions& options = {});

/// Lie subalgebra generated by short generators; those that are linearly
/// dependent on earlier ones are dropped before bracketing.
template <class F>
ClosureResult<F> lie_generated(const F& field, const BasisPtr& basis, const std::vector<SparseGenerator>& gens,
                               const CoordinateMap& chart, const ClosureOptions& options = {});

template <class F>
struct GradingResult {
  GradingReport report;
  ClosureResult<F> closure;  // the final M, i.e. H itself
};

template <class F>
GradingResult<F> grading(const GroupPtr& group, const F& field, int max_degree = kMaxDegree, unsigned workers = 1);

/// Graded pieces by the direct route G_1 = kR, G_{r+1} = [R, G_r], for
/// r = 1..upto. Spans are in L_ε chart coordinates of the full basis.
template <class F>
std::vector<SpanBasis<F>> graded_pieces(const GroupPtr& group, const BasisPtr& full, const CoordinateMap& chart,
                                        const F& field, int upto, unsigned workers = 1);

/// The rotation algebra A ⊂ kO generated by the [s,u], su != us.
template <class F>
ClosureResult<F> rotation_algebra(const GroupPtr& group, const F& field, const ClosureOptions& options = {});

/// dim of {x in span : [x, g] = 0 for all g in gens}; span rows in `chart` coordinates over `basis`.
template <class F>
std::size_t centralizer_dim_within(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& basis,
                                   const std::vector<SparseGenerator>& gens, const F& field);

/// Dimension of the unital associative subalgebra generated by gens.
template <class F>
std::size_t associative_closure_dim(const std::vector<SparseGenerator>& gens, const BasisPtr& basis, const F& field,
                                    int max_steps = 256);

enum class Parity { even, odd };

/// even: span of g − g⁻¹ over g in O; odd: span of b + b⁻¹ over b outside O.
/// Full coordinates of the kW basis.
template <class F>
SpanBasis<F> l1_span(const BasisPtr& full, Parity part, const F& field);

/// Span rows lifted to full basis coordinates.
template <class F>
std::vector<std::vector<typename F::scalar_type>> lifted_rows(const SpanBasis<F>& span, const CoordinateMap& chart,
                                                              const F& field);

/// Span of lifted rows re-expressed in full coordinates of another basis.
template <class F>
SpanBasis<F> span_in_basis(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& from,
                           const BasisPtr& to, const F& field);

/// span{[g, x] : g in gens, x in span}, in the same chart. With gens = R and
/// span = H this is the derived algebra H' = [H, H].
template <class F>
SpanBasis<F> bracket_span(const SpanBasis<F>& span, const CoordinateMap& chart, const BasisPtr& basis,
                          const std::vector<SparseGenerator>& gens, const F& field);

/// Re-expresses a span given in full coordinates in chart coordinates; throws
/// if some row lies outside the chart's subspace.
template <class F>
SpanBasis<F> project_span(const SpanBasis<F>& full_span, const CoordinateMap& chart, const F& field);

/// The generators [s,u] = su − us over all ordered pairs with su != us.
std::vector<SparseGenerator> commutator_generators(const ReflectionGroup& group);

std::string certification_note(const FieldSpec& field);

}  // namespace infhecke
