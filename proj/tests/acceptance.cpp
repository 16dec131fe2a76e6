// Acceptance runner: one PASS/FAIL line per criterion. With an argument only
// that criterion runs (this is how ctest registers them); exit status is the
// number of failed criteria, capped at 1.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "infhecke/combinatorics.hpp"
#include "infhecke/suites.hpp"

using namespace infhecke;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // wall-clock limit; 0 = none
  std::function<Suite()> run;
};

Suite type_a_with_formula_timing() {
  Suite out = type_a_checks();
  const auto start = std::chrono::steady_clock::now();
  for (int n = 5; n <= 11; ++n) (void)type_A_rotation_dim(n);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.push_back({"closed formula for n = 5..11 under 1 s", s < 1.0, std::to_string(s) + " s"});
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "grading tables", 600, [] { return grading_table_checks(); }},
      {2, "dihedral closed forms", 1, [] { return dihedral_checks(); }},
      {3, "rotation-algebra dimensions", 0, [] { return rotation_dim_checks(); }},
      {4, "type-A formula", 0, type_a_with_formula_timing},
      {5, "m(W) values", 60, [] { return mw_checks(); }},
      {6, "generation lemmas", 0, [] { return generation_checks(); }},
      {7, "conjugacy classes of su", 0, [] { return conjugacy_checks(); }},
      {8, "polynomial identities", 0, [] { return polynomial_checks(); }},
      {9, "consistency identities", 0, [] { return consistency_checks(); }},
  };
  return all;
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Suite suite;
  std::string error;
  try {
    suite = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failed = 0;
  for (const auto& check : suite) failed += check.passed ? 0 : 1;
  const bool in_time = c.limit_s == 0 || s < c.limit_s;
  const bool ok = error.empty() && failed == 0 && !suite.empty() && in_time;

  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " — "
            << suite.size() - failed << "/" << suite.size() << " checks, " << s << " s";
  if (c.limit_s > 0) std::cout << " (limit " << c.limit_s << " s)";
  std::cout << '\n';
  if (!error.empty()) std::cout << "    error: " << error << '\n';
  for (const auto& check : suite) {
    if (!check.passed) std::cout << "    failed: " << check.name << " — " << check.detail << '\n';
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    try {
      only = std::stoi(argv[1]);
    } catch (const std::exception&) {
      only = -1;
    }
    if (only < 1 || only > static_cast<int>(criteria().size())) {
      std::cerr << "usage: acceptance [1-" << criteria().size() << "]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : criteria()) {
    if (only == 0 || only == c.id) failed += run(c) ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
