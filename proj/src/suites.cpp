#include "infhecke/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "infhecke/closure.hpp"
#include "infhecke/combinatorics.hpp"
#include "infhecke/identities.hpp"

namespace infhecke {

namespace {

using Sizes = std::vector<std::size_t>;

GroupPtr build(const std::string& spec, std::size_t cap = kDefaultElementCap) {
  return std::make_shared<const ReflectionGroup>(ReflectionGroup::build(parse_group(spec), cap));
}

std::string join(const Sizes& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

template <class T>
Check expect_eq(std::string name, const T& got, const T& want) {
  std::ostringstream d;
  d << "got " << got << ", expected " << want;
  return {std::move(name), got == want, d.str()};
}

Check expect_sizes(std::string name, const Sizes& got, const Sizes& want) {
  return {std::move(name), got == want, "got (" + join(got) + "), expected (" + join(want) + ")"};
}

// Runs f once per field of the certification set; F_113 and F_10007 always,
// Q when requested.
template <class Fn>
void for_fields(bool rational, Fn&& fn) {
  fn(PrimeField{113});
  fn(PrimeField{10007});
  if (rational) fn(Rationals{});
}

struct TableRow {
  const char* group;
  Sizes hgr;
  std::size_t even, odd;
};

// Table of graded dimensions H^1 .. H^{s+1}; the last two entries repeat.
const std::vector<TableRow>& grading_table() {
  static const std::vector<TableRow> rows{
      {"S3", {3, 1, 2}, 1, 2},
      {"S4", {6, 4, 7}, 4, 7},
      {"S5", {10, 10, 19, 16, 23}, 16, 23},
      {"S6", {15, 20, 44, 56, 92, 92, 122, 112, 136}, 112, 136},
      {"B3", {9, 7, 12}, 7, 12},
      {"B4", {16, 22, 50, 53, 77, 59, 80}, 59, 80},
      {"D4", {12, 16, 35, 32, 46}, 32, 46},
      {"D5", {20, 40, 119, 216, 372, 381, 445, 391, 449}, 391, 449},
  };
  return rows;
}

void check_grading(Suite& out, const GradingReport& r, const Sizes& hgr, std::size_t even, std::size_t odd) {
  const std::string tag = r.group + " over " + r.field;
  out.push_back({"grading " + tag + " converged", r.converged, "dims_M (" + join(r.dims_M) + ")"});
  out.push_back(expect_sizes("grading " + tag + " row", r.dims_Hgr, hgr));
  out.push_back(expect_sizes("grading " + tag + " stable pair", {r.stable_even, r.stable_odd}, {even, odd}));
}

std::size_t class_count(const ReflectionGroup& g) { return reflection_classes(g).size(); }

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool all_passed(const Suite& suite) {
  return std::all_of(suite.begin(), suite.end(), [](const Check& c) { return c.passed; });
}

Suite grading_table_checks(const SuiteOptions& options) {
  Suite out;
  for (const auto& row : grading_table()) {
    auto g = build(row.group);
    for_fields(g->order() <= 720, [&](auto field) {
      check_grading(out, grading(g, field, kMaxDegree, options.workers).report, row.hgr, row.even, row.odd);
    });
  }
  return out;
}

Suite dihedral_checks() {
  Suite out;
  for (int m = 3; m <= 12; ++m) {
    const std::string name = "I2(" + std::to_string(m) + ")";
    auto g = build(name);
    auto r = grading(g, Rationals{}).report;
    const std::size_t z = class_count(*g);
    out.push_back(expect_eq(name + " dim H^1 = m", r.hgr(1), static_cast<std::size_t>(m)));
    out.push_back(expect_eq(name + " dim H^2 = floor((m-1)/2)", r.hgr(2), static_cast<std::size_t>((m - 1) / 2)));
    out.push_back(expect_eq(name + " dim H^3 = m - classes", r.hgr(3), static_cast<std::size_t>(m) - z));
    bool periodic = r.converged;
    for (int n = 2; n <= 12 && periodic; ++n) periodic = r.hgr(n) == r.hgr(n + 2);
    out.push_back({name + " 2-periodic from degree 2", periodic,
                   "stable (" + std::to_string(r.stable_even) + "," + std::to_string(r.stable_odd) + ")"});
    out.push_back(expect_eq(name + " reflection classes", z, static_cast<std::size_t>(m % 2 == 0 ? 2 : 1)));
  }
  return out;
}

Suite rotation_dim_checks(const SuiteOptions& options) {
  Suite out;
  ClosureOptions copts{64, options.workers};
  struct Row {
    const char* group;
    std::size_t dim;
    long centralizer;  // -1: not checked
    bool rational;
  };
  for (const auto& row : {Row{"S4", 4, 1, true}, Row{"S5", 16, -1, true}, Row{"S6", 112, -1, true},
                          Row{"D4", 31, 1, true}}) {
    auto g = build(row.group);
    for_fields(row.rational, [&](auto field) {
      auto a = rotation_algebra(g, field, copts);
      const std::string tag = std::string(row.group) + " over " + field.name();
      out.push_back(expect_eq("rotation algebra " + tag, a.span.rank(), row.dim));
      if (row.centralizer >= 0) {
        auto c = centralizer_dim_within(a.span, a.chart, a.basis, a.generators, field);
        out.push_back(expect_eq("centralizer of A in A, " + tag, c, static_cast<std::size_t>(row.centralizer)));
      }
    });
  }
  {
    auto a = rotation_algebra(build("S7"), PrimeField{113}, copts);
    out.push_back(expect_sizes("rotation algebra S7 over F_113 steps", a.steps, {35, 161, 533, 987, 1002}));
  }
  {
    auto g = build("D5");
    for_fields(true, [&](auto field) {
      auto a = rotation_algebra(g, field, copts);
      const std::size_t dim = a.span.rank();
      const bool list = dim == 390;
      const bool table = dim == 391;
      std::string which = list ? "matches 390 (dimension list), not 391 (stable even grading entry)"
                                : table ? "matches 391 (stable even grading entry), not 390 (dimension list)"
                                        : "matches neither published value";
      out.push_back({"rotation algebra D5 over " + field.name() + " against 390/391", list != table,
                     "dim A = " + std::to_string(dim) + ", steps (" + join(a.steps) + "); " + which});
    });
  }
  return out;
}

Suite type_a_checks(const SuiteOptions& options) {
  Suite out;
  const Sizes expected{16, 112, 1002, 9115, 86949, 892531, 9924091};
  for (int n = 5; n <= 11; ++n) {
    out.push_back(expect_eq("type A formula n=" + std::to_string(n), type_A_rotation_dim(n).dim,
                            static_cast<std::uint64_t>(expected[static_cast<std::size_t>(n - 5)])));
  }
  ClosureOptions copts{64, options.workers};
  for (int n : {5, 6}) {
    auto a = rotation_algebra(build("S" + std::to_string(n)), Rationals{}, copts);
    out.push_back(expect_eq("type A formula n=" + std::to_string(n) + " vs closure over Q",
                            static_cast<std::uint64_t>(a.span.rank()), type_A_rotation_dim(n).dim));
  }
  auto a7 = rotation_algebra(build("S7"), PrimeField{113}, copts);
  out.push_back(expect_eq("type A formula n=7 vs closure over F_113", static_cast<std::uint64_t>(a7.span.rank()),
                          type_A_rotation_dim(7).dim));
  return out;
}

Suite mw_checks() {
  Suite out;
  for (const char* spec : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "D4", "D5"}) {
    auto g = build(spec);
    out.push_back(expect_eq(std::string("m(W) = rank for ") + spec, reflection_length_diameter(*g),
                            g->descriptor().rank()));
  }
  struct Row {
    const char* group;
    int mw;
  };
  for (auto [spec, mw] : {Row{"G(3,3,3)", 4}, Row{"G(4,4,3)", 4}, Row{"G(5,5,3)", 4}, Row{"G(3,3,4)", 5},
                          Row{"G(4,4,4)", 6}, Row{"G(4,2,2)", 3}, Row{"G(4,2,3)", 4}, Row{"G(6,3,2)", 3},
                          Row{"G(6,3,3)", 5}}) {
    auto g = build(spec);
    const int got = reflection_length_diameter(*g);
    out.push_back(expect_eq(std::string("m(W) for ") + spec, got, mw));
    out.push_back({std::string("m(W) > rank for ") + spec, got > g->descriptor().rank(),
                   "m(W) = " + std::to_string(got) + ", rank " + std::to_string(g->descriptor().rank())});
  }
  return out;
}

Suite generation_checks() {
  Suite out;
  auto check_o = [&](const std::string& what, const ReflectionGroup& g, const std::vector<int>& gens) {
    auto got = generated_subgroup(g, gens);
    auto o = rotation_subgroup(g).elements;
    out.push_back({what + " generate O in " + g.descriptor().name(), got == o,
                   std::to_string(gens.size()) + " generators, subgroup of order " + std::to_string(got.size()) +
                       ", |O| = " + std::to_string(o.size())});
  };
  for (const char* spec : {"S4", "S5", "B3", "D4", "G(3,3,3)"}) {
    auto g = build(spec);
    check_o("products su != us", *g, noncommuting_products(*g));
  }
  for (const char* spec : {"S4", "S5", "B3", "B4", "D4", "D5"}) {
    auto g = build(spec);
    check_o("simple-pair products", *g, noncommuting_products(*g, simple_reflections(*g)));
    if (class_count(*g) == 1) {
      check_o("odd-order products", *g, reflection_products_if(*g, [](int k) { return k % 2 == 1 && k > 1; }));
    }
  }
  auto order3 = [](int k) { return k == 3; };
  for (const char* spec : {"G(3,3,3)", "G(4,4,3)"}) {
    auto g = build(spec);
    check_o("order-3 products", *g, reflection_products_if(*g, order3));
  }
  for (const char* spec : {"G(4,2,2)", "G(4,2,3)", "G(6,3,2)"}) {
    auto g = build(spec);
    const auto d = g->descriptor();
    // Rotation subgroup of G(2e, 2e, n) with 2e = m, embedded in G(m, m/2, n).
    auto big = build("G(" + std::to_string(d.m) + "," + std::to_string(d.m) + "," + std::to_string(d.n) + ")");
    std::vector<int> target;
    for (int x : rotation_subgroup(*big).elements) target.push_back(g->index_of(big->element(x)));
    target = sorted(target);
    auto got = generated_subgroup(*g, reflection_products_if(*g, order3));
    const std::size_t index = got.empty() ? 0 : g->order() / got.size();
    out.push_back({"order-3 products in " + d.name() + " generate the rotation subgroup of G(" +
                       std::to_string(d.m) + "," + std::to_string(d.m) + "," + std::to_string(d.n) + ")",
                   got == target && index == 4 && g->order() % got.size() == 0,
                   "generated order " + std::to_string(got.size()) + " (index " + std::to_string(index) +
                       "), target order " + std::to_string(target.size())});
  }
  return out;
}

Suite conjugacy_checks() {
  Suite out;
  struct Row {
    const char* group;
    std::size_t classes;
  };
  for (auto [spec, classes] : {Row{"S4", 2}, Row{"D4", 2}, Row{"S5", 1}, Row{"S6", 1}, Row{"D5", 1}}) {
    auto g = build(spec);
    auto o = rotation_subgroup(*g).elements;
    auto parts = conjugacy_partition(*g, noncommuting_products(*g), o);
    out.push_back(expect_eq(std::string("classes of su != us in O for ") + spec, parts.size(), classes));
  }
  return out;
}

Suite polynomial_checks() {
  Suite out;
  for (int n : {1, 3, 5, 7, 9, 15}) {
    const std::string tag = "N=" + std::to_string(n);
    auto p = odd_order_poly(n);
    auto q = even_sum_poly(n);
    out.push_back({"odd-order polynomial in Z/" + std::to_string(n), verify_in_cyclic(n, p, IdentityMode::self),
                   p.to_string()});
    out.push_back({"even-sum polynomial in Z/" + std::to_string(n),
                   verify_in_cyclic(n, q, IdentityMode::sum) && q.is_even(), q.to_string()});
    out.push_back(expect_eq("rank of powers of x - x^-1 for " + tag, odd_power_rank(n), n));
  }
  for (int n : {2, 4, 6}) {
    bool rejected = false;
    std::string what = "accepted";
    try {
      odd_order_poly(n);
    } catch (const std::domain_error& e) {
      rejected = true;
      what = e.what();
    }
    out.push_back({"even N=" + std::to_string(n) + " rejected", rejected, what});
  }
  auto s7 = build("S7");
  for (int len : {3, 5, 7}) {
    WreathElement e = WreathElement::identity(7);
    for (int i = 0; i < len; ++i) e.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % len);
    int g = s7->index_of(e);
    out.push_back({std::to_string(len) + "-cycle in S7, x = P(x - x^-1)",
                   verify_in_group(*s7, g, odd_order_poly(len), IdentityMode::self), to_string(e)});
    out.push_back({std::to_string(len) + "-cycle in S7, x + x^-1 = P(x - x^-1)",
                   verify_in_group(*s7, g, even_sum_poly(len), IdentityMode::sum), to_string(e)});
  }
  for (const char* spec : {"S3", "S4"}) {
    auto g = build(spec);
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t x = 0; x < g->order(); ++x) {
      if (g->element_order(static_cast<int>(x)) != 3) continue;
      ++count;
      ok = ok && verify_ad3(*g, static_cast<int>(x));
    }
    out.push_back({std::string("ad3 identity in ") + spec, ok && count > 0,
                   std::to_string(count) + " elements of order 3, Q = " + ad3_polynomial().to_string()});
  }
  return out;
}

namespace {

template <class F>
void consistency_for(Suite& out, const GroupPtr& g, const F& field) {
  const std::string tag = g->descriptor().name() + " over " + field.name();
  auto gr = grading(g, field);
  const auto& rep = gr.report;
  const auto& h = gr.closure;
  out.push_back(expect_eq("dim H = stable_even + stable_odd + classes, " + tag, rep.dim_H(),
                          rep.stable_even + rep.stable_odd + class_count(*g)));

  const int s = rep.stabilization_degree;
  const int even = s % 2 == 0 ? s : s + 1;
  const int upto = std::max(8, even + 2);
  auto pieces = graded_pieces(g, h.basis, h.chart, field, upto);
  Sizes direct, recursion;
  for (int r = 1; r <= upto; ++r) {
    direct.push_back(pieces[static_cast<std::size_t>(r - 1)].rank());
    recursion.push_back(rep.hgr(r));
  }
  out.push_back(expect_sizes("graded pieces [R, H^r] agree with the recursion, " + tag, direct, recursion));

  auto derived = bracket_span(h.span, h.chart, h.basis, h.generators, field);
  // Degree 1: H^1 = Z ⊕ (H' ∩ H^1) and H' ∩ H^1 ⊆ H^3.
  const auto& h1 = pieces[0];
  const auto& h3 = pieces[2];
  const std::size_t h1_derived = dim_intersection(h1, derived);
  const std::size_t h1_h3 = dim_intersection(h1, h3);
  const bool h3_in_derived = subspace_leq(h3, derived);
  out.push_back({"H^1 = Z + (H' ∩ H^1) and H' ∩ H^1 ⊆ H^3, " + tag,
                 h1_derived + rep.dim_Z == h1.rank() && h3_in_derived && h1_h3 == h1_derived,
                 "dim H^1 = " + std::to_string(h1.rank()) + ", dim H' ∩ H^1 = " + std::to_string(h1_derived) +
                     ", dim H^1 ∩ H^3 = " + std::to_string(h1_h3) + "; H^1 ⊆ H^3 literally: " +
                     (subspace_leq(h1, h3) ? "yes" : "no (the centre is not in H^3)")});
  bool nested = true;
  std::string bad;
  for (int r = 2; r <= 6; ++r) {
    if (!subspace_leq(pieces[static_cast<std::size_t>(r - 1)], pieces[static_cast<std::size_t>(r + 1)])) {
      nested = false;
      bad += " r=" + std::to_string(r);
    }
  }
  out.push_back({"H^r ⊆ H^{r+2} for 2 <= r <= 6, " + tag, nested, nested ? "all contained" : "fails at" + bad});

  auto a = rotation_algebra(g, field);
  auto a_in_w = project_span(span_in_basis(a.span, a.chart, a.basis, h.basis, field), h.chart, field);
  const auto& stable_even_span = pieces[static_cast<std::size_t>(even - 1)];
  out.push_back({"A ⊆ H^{2∞}, " + tag, subspace_leq(a_in_w, stable_even_span),
                 "dim A = " + std::to_string(a.span.rank()) + ", dim H^" + std::to_string(even) + " = " +
                     std::to_string(stable_even_span.rank())});

  auto l1 = project_span(l1_span(h.basis, Parity::even, field), h.chart, field);
  out.push_back(expect_eq("dim(H ∩ L_1(O)) = stable_even, " + tag, dim_intersection(h.span, l1), rep.stable_even));

  const std::size_t assoc = associative_closure_dim(a.generators, a.basis, field);
  auto check = expect_eq("associative closure of A = |O|, " + tag, assoc, a.basis->size());
  // The generation statement assumes a single reflection class; with two
  // classes a linear character of O killing every su - us can survive.
  const auto classes = reflection_classes(*g).size();
  if (classes > 1) check.detail += " (" + std::to_string(classes) + " reflection classes)";
  out.push_back(std::move(check));
}

}  // namespace

Suite consistency_checks(const SuiteOptions& options) {
  (void)options;
  Suite out;
  for (const char* spec : {"S4", "S5", "B3", "D4", "I2(5)", "I2(6)"}) {
    auto g = build(spec);
    for_fields(true, [&](auto field) { consistency_for(out, g, field); });
  }
  // A = L_1(O) ∩ H for the symmetric groups; for D5 both sides are compared with 390 and 391.
  for (const char* spec : {"S5", "S6", "D5"}) {
    auto g = build(spec);
    PrimeField f{113};
    auto gr = grading(g, f);
    const auto& h = gr.closure;
    auto l1 = project_span(l1_span(h.basis, Parity::even, f), h.chart, f);
    const std::size_t inter = dim_intersection(h.span, l1);
    const std::size_t a = rotation_algebra(g, f).span.rank();
    if (std::string(spec) != "D5") {
      out.push_back(expect_eq(std::string("dim A = dim(H ∩ L_1(O)) for ") + spec, a, inter));
    } else {
      out.push_back({"D5: dim A and dim(H ∩ L_1(O)) against 390/391", (a == 390) != (a == 391),
                     "dim A = " + std::to_string(a) + ", dim(H ∩ L_1(O)) = " + std::to_string(inter) +
                         " (390 is the dimension list value, 391 the stable even grading entry)"});
    }
  }
  // Mod-p rank never exceeds the rational rank.
  std::mt19937 rng(113);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<int> shape(2, 9);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const int rows = shape(rng), cols = shape(rng);
    SpanBasis<Rationals> q({}, static_cast<std::size_t>(cols));
    SpanBasis<PrimeField> p(PrimeField{113}, static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
      std::vector<mpq_class> vq;
      std::vector<std::uint32_t> vp;
      for (int j = 0; j < cols; ++j) {
        // Multiples of 113 make rank drops mod p likely.
        long x = entry(rng) * ((t % 2) ? 113 : 1) + ((t % 2) ? entry(rng) * (j % 2) : 0);
        vq.emplace_back(x);
        vp.push_back(PrimeField{113}.from_int(x));
      }
      q.insert(vq);
      p.insert(vp);
    }
    if (p.rank() > q.rank()) ++bad;
  }
  out.push_back({"rank over F_113 <= rank over Q on 100 random instances", bad == 0,
                 std::to_string(bad) + " violations"});
  return out;
}

Suite long_checks(const SuiteOptions& options) {
  Suite out;
  const std::size_t cap = options.allow_large ? std::size_t{1} << 24 : kDefaultElementCap;
  {
    auto r = grading(build("S7", cap), PrimeField{113}, kMaxDegree, options.workers).report;
    out.push_back({"grading S7 over F_113 ends with (1002,1087)", r.converged && r.stable_even == 1002 &&
                                                                      r.stable_odd == 1087,
                   "row (" + join(r.dims_Hgr) + ")"});
  }
  check_grading(out, grading(build("B5", cap), PrimeField{113}, kMaxDegree, options.workers).report,
                {25, 50, 153, 301, 591, 701, 842, 761, 869}, 761, 869);
  if (options.allow_large) {
    auto a = rotation_algebra(build("D6", cap), PrimeField{113}, {64, options.workers});
    out.push_back(expect_eq("rotation algebra D6 over F_113", a.span.rank(), std::size_t{5314}));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"grading-tables",         "rotation-dims",          "generation-lemmas",
                                              "polynomial-identities",  "consistency-identities", "conjugacy-classes",
                                              "mw-tables",              "long"};
  return names;
}

Suite run_suite(const std::string& name, const SuiteOptions& options) {
  Suite out;
  auto append = [&](Suite s) { out.insert(out.end(), s.begin(), s.end()); };
  if (name == "grading-tables") {
    append(grading_table_checks(options));
    append(dihedral_checks());
  } else if (name == "rotation-dims") {
    append(rotation_dim_checks(options));
    append(type_a_checks(options));
  } else if (name == "generation-lemmas") {
    append(generation_checks());
  } else if (name == "polynomial-identities") {
    append(polynomial_checks());
  } else if (name == "consistency-identities") {
    append(consistency_checks(options));
  } else if (name == "conjugacy-classes") {
    append(conjugacy_checks());
  } else if (name == "mw-tables") {
    append(mw_checks());
  } else if (name == "long") {
    append(long_checks(options));
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return out;
}

}  // namespace infhecke
