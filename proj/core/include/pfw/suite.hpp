#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfw {

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct CheckReport {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::pass;
  // On failure, enough JSON to replay the instance.
  nlohmann::json witness;
  std::string detail;
};
nlohmann::json to_json(CheckReport const& r);

struct SuiteConfig {
  std::uint64_t seed = 0;
  // Exhaustive frame catalog: frames with at most max_ji join-irreducibles.
  std::size_t max_ji = 3;
  // Exhaustive Frith catalog: frames with at most max_elements elements.
  std::size_t max_elements = 6;
  // Exhaustive Pervin catalog: universes of at most max_universe points.
  std::size_t max_universe = 3;

  std::size_t random_frames = 200;
  std::size_t random_frame_max_ji = 5;
  std::size_t quni_instances = 100;
  std::size_t quni_max_ji = 4;
  std::size_t random_pervin = 500;
  std::size_t random_universe = 4;
  std::size_t coreflection_instances = 20;
  // Frames with at most this many elements in the limit/colimit scan.
  std::size_t limit_max_elements = 4;
};

// Overrides fields of `base` from a JSON object with the same field names;
// unknown keys and non-integer values throw InvalidInput.
SuiteConfig parse_suite_config(nlohmann::json const& j, SuiteConfig base = {});
nlohmann::json to_json(SuiteConfig const& c);

using ReportSink = std::function<void(CheckReport const&)>;

struct Check {
  std::string id;
  std::string summary;
  std::function<void(SuiteConfig const&, ReportSink const&)> run;
};

// Every registered check, in a fixed order.
std::vector<Check> const& check_registry();
// Checks whose id contains `filter` (all for an empty filter).
std::vector<Check const*> select_checks(std::string const& filter);

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  bool ok() const { return fail == 0; }
};
// Runs the selected checks in registry order. Reports are delivered to the
// sink in a deterministic order.
SuiteSummary run_suite(std::string const& filter, SuiteConfig const& cfg, ReportSink const& sink);

}  // namespace pfw
