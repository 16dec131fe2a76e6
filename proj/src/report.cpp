#include "infhecke/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace infhecke {

namespace {

constexpr const char* kCacheVersion = "v1";

std::string spaced(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

nlohmann::json to_json(const GradingReport& r) {
  return {{"group", r.group},
          {"field", r.field},
          {"dims_M", r.dims_M},
          {"dims_Hgr", r.dims_Hgr},
          {"dim_Z", r.dim_Z},
          {"stable_even", r.stable_even},
          {"stable_odd", r.stable_odd},
          {"stabilization_degree", r.stabilization_degree},
          {"dim_H", r.dim_H()},
          {"converged", r.converged},
          {"elapsed_ms", r.elapsed_ms},
          {"certification", r.certification}};
}

GradingReport grading_from_json(const nlohmann::json& j) {
  GradingReport r;
  j.at("group").get_to(r.group);
  j.at("field").get_to(r.field);
  j.at("dims_M").get_to(r.dims_M);
  j.at("dims_Hgr").get_to(r.dims_Hgr);
  j.at("dim_Z").get_to(r.dim_Z);
  j.at("stable_even").get_to(r.stable_even);
  j.at("stable_odd").get_to(r.stable_odd);
  j.at("stabilization_degree").get_to(r.stabilization_degree);
  j.at("converged").get_to(r.converged);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("certification").get_to(r.certification);
  return r;
}

nlohmann::json to_json(const ClosureReport& r) {
  nlohmann::json j{{"group", r.group},
                   {"field", r.field},
                   {"generators", r.generators},
                   {"steps", r.steps},
                   {"final_dim", r.final_dim},
                   {"converged", r.converged},
                   {"elapsed_ms", r.elapsed_ms},
                   {"certification", r.certification}};
  j["centralizer_dim"] = r.centralizer_dim >= 0 ? nlohmann::json(r.centralizer_dim) : nlohmann::json(nullptr);
  return j;
}

ClosureReport closure_from_json(const nlohmann::json& j) {
  ClosureReport r;
  j.at("group").get_to(r.group);
  j.at("field").get_to(r.field);
  j.at("generators").get_to(r.generators);
  j.at("steps").get_to(r.steps);
  j.at("final_dim").get_to(r.final_dim);
  j.at("converged").get_to(r.converged);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  j.at("certification").get_to(r.certification);
  r.centralizer_dim = j.at("centralizer_dim").is_null() ? -1 : j.at("centralizer_dim").get<long>();
  return r;
}

nlohmann::json to_json(const Suite& suite) {
  auto out = nlohmann::json::array();
  for (const auto& c : suite) out.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

std::string render_table(const GradingReport& r) {
  std::ostringstream out;
  out << spaced(r.dims_Hgr) << " | ";
  if (r.converged) {
    out << "stable (" << r.stable_even << "," << r.stable_odd << ")";
  } else {
    out << "unconverged";
  }
  return out.str();
}

std::string render_table(const ClosureReport& r) {
  std::ostringstream out;
  out << spaced(r.steps) << " | dim " << r.final_dim;
  if (!r.converged) out << " (unconverged)";
  if (r.centralizer_dim >= 0) out << " | centralizer " << r.centralizer_dim;
  return out.str();
}

std::string render_csv(const GradingReport& r) {
  std::ostringstream out;
  out << "group,field,dims_M,dims_Hgr,dim_Z,stable_even,stable_odd,stabilization_degree,dim_H,converged,elapsed_ms,"
         "certification\n";
  out << csv_field(r.group) << ',' << r.field << ',' << spaced(r.dims_M) << ',' << spaced(r.dims_Hgr) << ','
      << r.dim_Z << ',' << r.stable_even << ',' << r.stable_odd << ',' << r.stabilization_degree << ',' << r.dim_H()
      << ',' << (r.converged ? "true" : "false") << ',' << r.elapsed_ms << ',' << csv_field(r.certification)
      << '\n';
  return out.str();
}

std::string render_csv(const ClosureReport& r) {
  std::ostringstream out;
  out << "group,field,generators,steps,final_dim,converged,centralizer_dim,elapsed_ms,certification\n";
  out << csv_field(r.group) << ',' << r.field << ',' << csv_field(r.generators) << ',' << spaced(r.steps) << ','
      << r.final_dim << ',' << (r.converged ? "true" : "false") << ','
      << (r.centralizer_dim >= 0 ? std::to_string(r.centralizer_dim) : "") << ',' << r.elapsed_ms << ','
      << csv_field(r.certification) << '\n';
  return out.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string ReportCache::key(const std::string& command, const std::string& group, const std::string& field,
                             const std::string& options) {
  return std::string(kCacheVersion) + "|" + command + "|" + group + "|" + field + "|" + options;
}

std::filesystem::path ReportCache::path_for(const std::string& key) const { return dir_ / (fnv1a_hex(key) + ".json"); }

std::optional<nlohmann::json> ReportCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.value("key", "") != key) return std::nullopt;  // hash collision or stale file
    return j.at("report");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const std::string& key, const nlohmann::json& report) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"key", key}, {"report", report}}.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace infhecke
