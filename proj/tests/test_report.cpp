#include <doctest.h>

#include <filesystem>
#include <random>

#include "infhecke/closure.hpp"
#include "infhecke/report.hpp"

using namespace infhecke;

namespace {

GroupPtr make(const char* spec) {
  return std::make_shared<const ReflectionGroup>(ReflectionGroup::build(parse_group(spec)));
}

std::filesystem::path scratch_dir() {
  std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("infhecke-test-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("grading report survives a JSON round trip") {
  auto r = grading(make("B3"), PrimeField(113)).report;
  auto back = grading_from_json(to_json(r));
  CHECK(back == r);
  CHECK(render_table(back) == render_table(r));
  CHECK(render_csv(back) == render_csv(r));
  CHECK(to_json(r)["dim_H"] == 21);
}

TEST_CASE("closure report survives a JSON round trip") {
  ClosureReport r;
  r.group = "S4";
  r.field = "Q";
  r.generators = "[s,u]";
  r.steps = {4};
  r.final_dim = 4;
  r.converged = true;
  r.elapsed_ms = 1.25;
  CHECK(closure_from_json(to_json(r)) == r);
  CHECK(to_json(r)["centralizer_dim"].is_null());
  r.centralizer_dim = 1;
  CHECK(closure_from_json(to_json(r)) == r);
  CHECK(render_table(r) == "4 | dim 4 | centralizer 1");
}

TEST_CASE("cache hit returns the stored report") {
  auto dir = scratch_dir();
  ReportCache cache(dir);
  auto key = ReportCache::key("grading", "S4", "Q", "max_degree=16");
  CHECK_FALSE(cache.load(key).has_value());
  auto report = to_json(grading(make("S4"), Rationals{}).report);
  cache.store(key, report);
  auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(hit->dump() == report.dump());
  CHECK(render_table(grading_from_json(*hit)) == "6 4 7 | stable (4,7)");
  // A different key maps elsewhere or is rejected on validation.
  CHECK_FALSE(cache.load(ReportCache::key("grading", "S4", "F_113", "max_degree=16")).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("fnv1a matches reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
