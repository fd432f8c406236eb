#ifndef PATHIDEAL_VERIFY_HPP
#define PATHIDEAL_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pathideal/engine.hpp"

namespace pathideal {

enum class Family { tree, unicyclic };
Family family_from_string(const std::string& name);
const char* to_string(Family f);

enum class CheckStatus { pass, fail, warn, skip };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct InstanceReport {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int cycle_m = 0;          // 0 for trees
  int branch = 0;           // closed-form regularity branch: 1 (m=3 mod 4, proximal),
                            // 2 (m=2 mod 4, proximal), 3 (otherwise); 0 = n/a
  std::string edges;        // edge-list text, for reproduction
  std::vector<CheckResult> checks;
  bool failed() const;
};

struct VerifyOptions {
  Family family = Family::tree;
  int n_min = 5;
  int n_max = 13;
  int count = 300;
  std::uint64_t seed = 42;
  bool include_triangles = false;  // allow m = 3 (closed-form deviations warn)
  bool branch_balance = true;      // steer part of the run at the regularity branches
  std::vector<std::int64_t> fields = {2, 32003};
  int fallback_n = 10;
  int threads = 0;  // 0 = hardware concurrency
  OracleBudget budget;
  MatchingBudget matching_budget;
};

struct VerifySummary {
  VerifyOptions options;
  std::vector<InstanceReport> instances;
  std::size_t pass = 0, fail = 0, warn = 0, skip = 0;
  std::map<std::string, int> branch_counts;  // "m3-proximal", "m2-proximal", "otherwise"
  int splitting_equation_checks = 0;  // instances with the oracle Betti-splitting check run
  int hilbert_checks = 0;             // Betti tables that went through the Hilbert check
  bool ok() const { return fail == 0; }
};

/// Runs the full per-instance check battery on `count` seeded random graphs:
/// nu3 recursion vs brute force, colon formula vs generic colon, splitting
/// and scaffold identities, oracle Betti-splitting equations, engine vs
/// oracle pd/reg over every configured field, closed-form regularity, and
/// the sandwich / lower-bound inequalities. Instances run concurrently with
/// per-index seeds; output ordering is by instance index.
VerifySummary run_verify(const VerifyOptions& options);

/// One-line-per-check text rendering plus the summary footer.
std::string format_verify_text(const VerifySummary& summary, bool per_instance = false);

}  // namespace pathideal

#endif
