// Acceptance runner: `facecount_acceptance [N ...]` checks criteria N (all when
// none are given) and prints one PASS/FAIL line per criterion.

#include "facecount/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace facecount;

namespace {

struct Criterion {
  int id;
  const char* name;
  std::function<std::vector<CheckReport>()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "small-case f-vectors", [] { return std::vector{check_reproductions()}; }},
      {2, "formula-oracle equivalence d<=7", [] { return std::vector{check_formula_vs_oracle(7)}; }},
      {3, "tightness at 2d+2 vertices d in 3..7", [] { return std::vector{check_tightness(3, 7)}; }},
      {4, "tau minimality over d+2-facet polytopes d<=60", [] { return std::vector{check_tau_minimality(60)}; }},
      {5, "eta/tau dichotomy and auxiliary inequalities d<=60", [] { return std::vector{check_dichotomy(60)}; }},
      {6, "monotonicity with strictness iff d<=30", [] { return std::vector{check_monotonicity(30)}; }},
      {7, "existence iff d+1 composite and d!=3, d<=200", [] { return std::vector{check_existence(200)}; }},
      {8, "corpus properties d<=6", [] { return std::vector{check_properties(6)}; }},
      {9, "Barnette equality on truncation polytopes d<=6", [] { return std::vector{check_barnette_truncations(6)}; }},
  };
  return all;
}

bool report_line(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> reports;
  std::string error;
  try {
    reports = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = error.empty();
  std::uint64_t points = 0, failures = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    points += r.points_checked;
    failures += r.failures.size();
  }
  std::printf("criterion %d %s: %s (points=%llu failures=%llu time=%.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.name,
              static_cast<unsigned long long>(points), static_cast<unsigned long long>(failures), secs);
  if (!error.empty()) std::printf("  error: %s\n", error.c_str());
  for (const auto& r : reports) {
    if (!r.passed()) {
      std::map<std::string, std::size_t> by_kind;
      for (const auto& f : r.failures) ++by_kind[f.kind];
      for (const auto& [kind, n] : by_kind) std::printf("  %s: %zu\n", kind.c_str(), n);
      for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) {
        const auto& f = r.failures[i];
        std::printf("  e.g. %s expected %s, got %s\n", f.params.c_str(), f.expected.c_str(), f.actual.c_str());
      }
    }
    for (const auto& f : r.findings) std::printf("  finding: %s\n", f.c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    all_ok = report_line(c) && all_ok;
  }
  return all_ok ? 0 : 1;
}
