// Command-line front end: gradings, rotation algebras, m(W), type-A dimensions,
// polynomial identities and the verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "infhecke/closure.hpp"
#include "infhecke/combinatorics.hpp"
#include "infhecke/identities.hpp"
#include "infhecke/report.hpp"
#include "infhecke/suites.hpp"

using namespace infhecke;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr std::size_t kLargeOrder = 20000;
constexpr std::size_t kLargeElementCap = std::size_t{1} << 22;

class check_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string field = "default";  // "default" runs F_113 and F_10007
  int max_degree = kMaxDegree;
  std::string format = "table";
  std::string cache_dir;
  unsigned workers = 1;
  bool allow_large = false;
};

GroupPtr load_group(const std::string& spec, const RunConfig& cfg, bool for_closure) {
  auto desc = parse_group(spec);
  auto g = std::make_shared<const ReflectionGroup>(
      ReflectionGroup::build(desc, cfg.allow_large ? kLargeElementCap : kDefaultElementCap));
  if (for_closure && g->order() > kLargeOrder && !cfg.allow_large) {
    throw resource_error(desc.name() + " has order " + std::to_string(g->order()) +
                         "; closures on groups of order > " + std::to_string(kLargeOrder) + " need --allow-large");
  }
  return g;
}

std::vector<FieldSpec> fields_of(const RunConfig& cfg, const ReflectionGroup& g) {
  std::vector<FieldSpec> out;
  if (cfg.field == "default") {
    out = {FieldSpec::prime(113), FieldSpec::prime(10007)};
  } else {
    out = {FieldSpec::parse(cfg.field)};
  }
  for (const auto& f : out) f.check_coprime(g.order());
  return out;
}

std::optional<ReportCache> cache_of(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return ReportCache(cfg.cache_dir);
  if (const char* env = std::getenv("INFHECKE_CACHE_DIR"); env && *env) return ReportCache(env);
  return std::nullopt;
}

// Looks the report up in the cache or computes and stores it.
json cached(const RunConfig& cfg, const std::string& command, const std::string& group, const std::string& options,
            const std::function<json()>& compute) {
  auto cache = cache_of(cfg);
  const auto key = ReportCache::key(command, group, cfg.field, options);
  if (cache) {
    if (auto hit = cache->load(key)) return *hit;
  }
  json report = compute();
  if (cache) cache->store(key, report);
  return report;
}

GradingReport grading_report(const GroupPtr& g, const FieldSpec& f, const RunConfig& cfg) {
  return visit_field(f, [&](auto field) { return grading(g, field, cfg.max_degree, cfg.workers).report; });
}

ClosureReport rotation_report(const GroupPtr& g, const FieldSpec& f, const RunConfig& cfg, bool centralizer) {
  return visit_field(f, [&](auto field) {
    const auto start = std::chrono::steady_clock::now();
    auto a = rotation_algebra(g, field, {cfg.max_degree * 4, cfg.workers});
    ClosureReport r;
    r.group = g->descriptor().name();
    r.field = field.name();
    r.generators = "[s,u] = su - us for reflections with su != us (" + std::to_string(a.generators.size()) +
                   " independent)";
    r.steps = a.steps;
    r.final_dim = a.span.rank();
    r.converged = a.converged;
    r.certification = certification_note(f);
    if (centralizer) {
      r.centralizer_dim = static_cast<long>(centralizer_dim_within(a.span, a.chart, a.basis, a.generators, field));
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
}

std::string agreement_note(const std::vector<FieldSpec>& fields) {
  return "ranks over " + fields[0].name() + " and " + fields[1].name() +
         " agree; each is a lower bound for the rational rank";
}

json run_grading(const GroupPtr& g, const RunConfig& cfg) {
  auto fields = fields_of(cfg, *g);
  auto opts = "max_degree=" + std::to_string(cfg.max_degree);
  return cached(cfg, "grading", g->descriptor().name(), opts, [&] {
    std::vector<GradingReport> reports;
    for (const auto& f : fields) reports.push_back(grading_report(g, f, cfg));
    GradingReport out = reports[0];
    if (reports.size() > 1) {
      auto& b = reports[1];
      if (b.dims_M != out.dims_M || b.dims_Hgr != out.dims_Hgr || b.dim_Z != out.dim_Z) {
        throw check_failure("gradings over " + out.field + " and " + b.field + " disagree: " + render_table(out) +
                            " vs " + render_table(b));
      }
      out.field = out.field + "+" + b.field;
      out.elapsed_ms += b.elapsed_ms;
      out.certification = agreement_note(fields);
    }
    return to_json(out);
  });
}

json run_rotation(const GroupPtr& g, const RunConfig& cfg, bool centralizer) {
  auto fields = fields_of(cfg, *g);
  auto opts = "max_steps=" + std::to_string(cfg.max_degree * 4) + ";centralizer=" + (centralizer ? "1" : "0");
  return cached(cfg, "rotation", g->descriptor().name(), opts, [&] {
    std::vector<ClosureReport> reports;
    for (const auto& f : fields) reports.push_back(rotation_report(g, f, cfg, centralizer));
    ClosureReport out = reports[0];
    if (reports.size() > 1) {
      auto& b = reports[1];
      if (b.steps != out.steps || b.centralizer_dim != out.centralizer_dim) {
        throw check_failure("rotation algebras over " + out.field + " and " + b.field + " disagree");
      }
      out.field = out.field + "+" + b.field;
      out.elapsed_ms += b.elapsed_ms;
      out.certification = agreement_note(fields);
    }
    return to_json(out);
  });
}

void emit_grading(const json& j, const RunConfig& cfg) {
  auto r = grading_from_json(j);
  if (cfg.format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << render_csv(r);
  } else {
    std::cout << render_table(r) << '\n';
  }
  if (!r.converged) throw check_failure("grading did not stabilize within degree " + std::to_string(cfg.max_degree));
}

void emit_rotation(const json& j, const RunConfig& cfg) {
  auto r = closure_from_json(j);
  if (cfg.format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << render_csv(r);
  } else {
    std::cout << render_table(r) << '\n';
  }
  if (!r.converged) throw check_failure("closure did not converge");
}

void emit_suite(const std::string& name, const Suite& suite, const RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << json{{"suite", name}, {"passed", all_passed(suite)}, {"checks", to_json(suite)}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "suite,check,passed,detail\n";
    for (const auto& c : suite) {
      std::string detail = c.detail;
      for (auto& ch : detail)
        if (ch == '"') ch = '\'';
      std::cout << name << ",\"" << c.name << "\"," << (c.passed ? "true" : "false") << ",\"" << detail << "\"\n";
    }
  } else {
    std::size_t failed = 0;
    for (const auto& c : suite) {
      failed += c.passed ? 0 : 1;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " — " << c.detail << '\n';
    }
    std::cout << name << ": " << suite.size() - failed << "/" << suite.size() << " checks passed\n";
  }
}

int element_argument(const ReflectionGroup& g, const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(c); })) {
    long i = std::stol(text);
    if (i < 0 || static_cast<std::size_t>(i) >= g.order()) throw group_error("element index out of range");
    return static_cast<int>(i);
  }
  int i = g.index_of(parse_element(text, g.degree()));
  if (i < 0) throw group_error("element " + text + " does not lie in " + g.descriptor().name());
  return i;
}

json poly_json(int n, const RationalPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"N", n}, {"coefficients", coeffs}, {"polynomial", p.to_string()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact gradings and rotation algebras of finite 2-reflection groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "q, or f<p> for the prime field F_p (default: F_113 and F_10007)");
  app.add_option("--max-degree", cfg.max_degree, "Degree / step cap for closures")->check(CLI::Range(3, 1000));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Report cache directory (default: $INFHECKE_CACHE_DIR)");
  app.add_option("--workers", cfg.workers, "Worker threads for span reduction")->check(CLI::Range(1u, 256u));
  app.add_flag("--allow-large", cfg.allow_large, "Allow closures on groups of order > 20000");

  std::string group_spec;
  auto* group_cmd = app.add_subcommand("group", "Describe a group");
  group_cmd->add_option("group", group_spec)->required();

  auto* grading_cmd = app.add_subcommand("grading", "Graded dimensions of the infinitesimal Hecke algebra");
  grading_cmd->add_option("group", group_spec)->required();

  bool centralizer = false;
  auto* rotation_cmd = app.add_subcommand("rotation", "Dimension of the rotation algebra");
  rotation_cmd->add_option("group", group_spec)->required();
  rotation_cmd->add_flag("--centralizer", centralizer, "Also report the centre of the algebra");

  auto* mw_cmd = app.add_subcommand("mw", "Maximal reflection length m(W)");
  mw_cmd->add_option("group", group_spec)->required();

  int typea_n = 0;
  auto* typea_cmd = app.add_subcommand("typea-dim", "Closed-form type A rotation algebra dimension");
  typea_cmd->add_option("n", typea_n)->required()->check(CLI::Range(5, 60));

  auto* identity_cmd = app.add_subcommand("identity", "Polynomial identities");
  identity_cmd->require_subcommand(1);
  int poly_n = 0;
  auto* odd_cmd = identity_cmd->add_subcommand("odd-poly", "P with x = P(x - x^-1) in Q[x]/(x^N - 1)");
  odd_cmd->add_option("N", poly_n)->required()->check(CLI::Range(1, 99));
  auto* even_cmd = identity_cmd->add_subcommand("even-poly", "Even P with x + x^-1 = P(x - x^-1)");
  even_cmd->add_option("N", poly_n)->required()->check(CLI::Range(1, 99));
  std::string element_text;
  auto* ad3_cmd = identity_cmd->add_subcommand("ad3", "Check Ad(g) = Q(ad g - ad g^-1) for g of order 3");
  ad3_cmd->add_option("group", group_spec)->required();
  ad3_cmd->add_option("element", element_text, "Index or cycle notation, e.g. \"(1 2 3)\"")->required();

  std::string suite_name;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite_name)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.field != "default") FieldSpec::parse(cfg.field);
    if (*group_cmd) {
      auto g = load_group(group_spec, cfg, false);
      json d = describe(*g);
      if (cfg.format == "json") {
        std::cout << d.dump(2) << '\n';
      } else {
        std::cout << g->descriptor().name() << ": order " << g->order() << ", " << g->reflections().size()
                  << " reflections in " << d["reflection_classes"].get<std::size_t>() << " classes\n";
      }
    } else if (*grading_cmd) {
      auto g = load_group(group_spec, cfg, true);
      emit_grading(run_grading(g, cfg), cfg);
    } else if (*rotation_cmd) {
      auto g = load_group(group_spec, cfg, true);
      emit_rotation(run_rotation(g, cfg, centralizer), cfg);
    } else if (*mw_cmd) {
      auto g = load_group(group_spec, cfg, false);
      const int mw = reflection_length_diameter(*g);
      if (cfg.format == "json") {
        std::cout << json{{"group", g->descriptor().name()}, {"mw", mw}, {"rank", g->descriptor().rank()}}.dump(2)
                  << '\n';
      } else if (cfg.format == "csv") {
        std::cout << "group,mw,rank\n" << g->descriptor().name() << ',' << mw << ',' << g->descriptor().rank() << '\n';
      } else {
        std::cout << mw << '\n';
      }
    } else if (*typea_cmd) {
      auto d = type_A_rotation_dim(typea_n);
      if (cfg.format == "json") {
        std::cout << to_json(d).dump(2) << '\n';
      } else if (cfg.format == "csv") {
        std::cout << "partition,class,contribution\n";
        for (const auto& t : d.breakdown)
          std::cout << '"' << to_string(t.partition) << "\"," << t.kind << ',' << t.contribution << '\n';
        std::cout << "total,," << d.dim << '\n';
      } else {
        for (const auto& t : d.breakdown) std::cout << to_string(t.partition) << ' ' << t.kind << ' ' << t.contribution << '\n';
        std::cout << d.dim << '\n';
      }
    } else if (*identity_cmd) {
      if (*odd_cmd || *even_cmd) {
        auto p = *odd_cmd ? odd_order_poly(poly_n) : even_sum_poly(poly_n);
        if (cfg.format == "json") {
          std::cout << poly_json(poly_n, p).dump(2) << '\n';
        } else {
          std::cout << p.to_string() << '\n';
        }
      } else {
        auto g = load_group(group_spec, cfg, false);
        const int x = element_argument(*g, element_text);
        const bool ok = verify_ad3(*g, x);
        if (cfg.format == "json") {
          std::cout << json{{"group", g->descriptor().name()}, {"element", to_string(g->element(x))},
                            {"polynomial", ad3_polynomial().to_string()}, {"holds", ok}}
                           .dump(2)
                    << '\n';
        } else {
          std::cout << (ok ? "true" : "false") << '\n';
        }
        if (!ok) return kExitCheck;
      }
    } else if (*verify_cmd) {
      if (suite_name == "long" && !cfg.allow_large) throw resource_error("the long suite needs --allow-large");
      auto suite = run_suite(suite_name, {cfg.workers, cfg.allow_large});
      emit_suite(suite_name, suite, cfg);
      return all_passed(suite) ? kExitOk : kExitCheck;
    }
  } catch (const check_failure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheck;
  } catch (const convergence_error& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return kExitCheck;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheck;
  }
  return kExitOk;
}
