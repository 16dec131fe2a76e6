#pragma once

#include <string>
#include <vector>

namespace infhecke {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Suite = std::vector<Check>;

struct SuiteOptions {
  unsigned workers = 1;
  bool allow_large = false;
};

/// Suite names accepted by run_suite; "long" needs allow_large.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
Suite run_suite(const std::string& name, const SuiteOptions& options = {});

Suite grading_table_checks(const SuiteOptions& options = {});
Suite dihedral_checks();
Suite rotation_dim_checks(const SuiteOptions& options = {});
Suite type_a_checks(const SuiteOptions& options = {});
Suite mw_checks();
Suite generation_checks();
Suite conjugacy_checks();
Suite polynomial_checks();
Suite consistency_checks(const SuiteOptions& options = {});
Suite long_checks(const SuiteOptions& options = {});

bool all_passed(const Suite& suite);

}  // namespace infhecke
