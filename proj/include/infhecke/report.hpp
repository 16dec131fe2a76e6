#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "infhecke/closure.hpp"
#include "infhecke/suites.hpp"

namespace infhecke {

nlohmann::json to_json(const GradingReport& r);
GradingReport grading_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClosureReport& r);
ClosureReport closure_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Suite& suite);

/// "6 4 7 | stable (4,7)"; unconverged rows end in "| unconverged".
std::string render_table(const GradingReport& r);
std::string render_table(const ClosureReport& r);
std::string render_csv(const GradingReport& r);
std::string render_csv(const ClosureReport& r);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& text);

/// JSON files keyed by a hash of the run key; one file per computation.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  static std::string key(const std::string& command, const std::string& group, const std::string& field,
                         const std::string& options);
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& report) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace infhecke
