#ifndef PATHIDEAL_JSON_IO_HPP
#define PATHIDEAL_JSON_IO_HPP

#include <string>

#include "pathideal/betti.hpp"
#include "pathideal/engine.hpp"
#include "pathideal/matching.hpp"
#include "pathideal/verify.hpp"

namespace pathideal {

/// JSON renderings of the report types ("schema": 1). Output is
/// deterministic: keys are sorted and no timing or environment data is
/// included, so identical inputs give byte-identical text.
std::string invariant_report_json(const Graph& g, const InvariantReport& report);
std::string betti_table_json(const BettiTable& table);
std::string matching_json(const Graph& g, int t, const MatchingResult& result,
                          const std::string& method);
std::string verify_summary_json(const VerifySummary& summary);
std::string conjecture_probe_json(const Graph& g, const ConjectureProbe& probe);

}  // namespace pathideal

#endif
