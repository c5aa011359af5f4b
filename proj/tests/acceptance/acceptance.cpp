// Acceptance run: one line per criterion, each backed by suite checks with
// pinned instance counts and wall-clock limits. A skipped instance counts as
// a failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pfw/pfw.hpp"

namespace {

struct Part {
  std::string check;
  std::size_t instances;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Part> parts;
  double limit_seconds;
};

// Default SuiteConfig: frames with at most 3 join-irreducibles plus 200
// random ones with at most 5, 100 (K, R) instances, Frith frames with at
// most 6 elements, Pervin spaces with at most 3 points plus 500 random
// 4-point ones, 20 coreflection instances.
std::vector<Criterion> const& criteria() {
  static std::vector<Criterion> const list = {
      {1, "nabla/delta laws", {{"congruence.nabla-delta-laws", 9 + 200}}, 10},
      {2, "unique extension along nabla", {{"congruence.extension-unique", 9 * 9}}, 60},
      {3, "witness sublattices of E_R", {{"entourage.witness-sublattices", 100}}, 120},
      {4, "sublattice recovery and partition witnesses", {{"entourage.sublattice-recovery", 100}}, 120},
      {5,
       "categorical oracle agreement",
       {{"pervin.oracle-agreement", 35 * 35}, {"frith.oracle-agreement", 13 * 13}},
       600},
      {6, "T_D four-way equivalence", {{"pervin.td-equivalence", 35 + 500}}, 600},
      {7, "symmetrization coherence", {{"frith.symmetrization", 13}}, 600},
      {8, "completion characterization", {{"completion.characterization", 13}}, 600},
      {9, "Perv/Frith adjunction", {{"spectrum.adjunction", 35 * 13}}, 600},
      {10, "coreflection universal property", {{"entourage.coreflection", 20}}, 600},
  };
  return list;
}

}  // namespace

int main() {
  pfw::SuiteConfig cfg;
  int failures = 0;
  for (auto const& c : criteria()) {
    std::size_t pass = 0, fail = 0, skipped = 0, expected = 0;
    std::string first_problem;
    auto start = std::chrono::steady_clock::now();
    for (auto const& part : c.parts) {
      expected += part.instances;
      auto s = pfw::run_suite(part.check, cfg, [&](pfw::CheckReport const& r) {
        if (r.check != part.check) return;
        if (r.verdict != pfw::Verdict::pass && first_problem.empty())
          first_problem = r.check + " " + r.instance + ": " + r.detail;
      });
      pass += s.pass;
      fail += s.fail;
      skipped += s.skipped;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = fail == 0 && skipped == 0 && pass == expected && seconds < c.limit_seconds;
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %-44s %zu/%zu passed, %zu failed, %zu skipped, %.2f s (limit %.0f s)\n", c.number,
                ok ? "PASS" : "FAIL", c.title.c_str(), pass, expected, fail, skipped, seconds, c.limit_seconds);
    if (!first_problem.empty()) std::printf("    %s\n", first_problem.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria().size());
  return failures == 0 ? 0 : 1;
}
