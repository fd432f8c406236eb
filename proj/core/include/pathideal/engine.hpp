#ifndef PATHIDEAL_ENGINE_HPP
#define PATHIDEAL_ENGINE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathideal/betti.hpp"
#include "pathideal/classify.hpp"
#include "pathideal/matching.hpp"
#include "pathideal/splitting.hpp"

namespace pathideal {

struct EngineConfig {
  int fallback_n = 10;      // components at or below this size go to the oracle
  std::int64_t field = 2;   // prime for oracle fallbacks
  OracleBudget budget;
  MatchingBudget matching_budget;
  bool with_trace = true;
};

/// One recursion event: either an oracle evaluation or a formula
/// application with its recorded child values, enough to replay the max.
struct TraceStep {
  std::string op;                 // "pd" | "reg" | "nu3"
  std::uint64_t subgraph = 0;     // vertex mask within the session's root graph
  int n = 0;
  std::string method;             // "oracle" | "level2.s>0" | "level1.s=0" | "components" | ...
  std::string detail;             // chosen z0/y0/anchor, fallback reason, ...
  struct Child {
    std::string role;             // "G1".."G4" or "component"
    std::uint64_t subgraph;
    int value;
  };
  std::vector<Child> children;
  std::vector<int> params;        // formula constants: s, |N(x0)| or n2/nm
  int result = 0;
};

enum class Proximality { yes, no, not_applicable };

struct InvariantReport {
  int nu3 = 0;
  std::optional<int> pd_ideal, reg_ideal, pd_quotient, reg_quotient;
  Proximality proximal = Proximality::not_applicable;
  std::string method;  // recursion | oracle | closed-form | mixed
  std::vector<TraceStep> trace;
  std::vector<std::string> warnings;
};

/// Memoized pd/reg/nu3 evaluation for induced subgraphs of one root graph.
/// All recursion children are induced subgraphs, so the vertex mask is an
/// exact key. Thread-safe as a linearizable insert-if-absent map.
class EngineSession {
 public:
  EngineSession(const Graph& g, EngineConfig cfg = {});

  /// pd / reg of I_3 on the induced subgraph; throws ValidationError on a
  /// zero ideal or a component that is neither a tree nor unicyclic.
  int pd_ideal(VertexSet sub);
  int reg_ideal(VertexSet sub);
  bool ideal_is_zero(VertexSet sub) const;
  int nu3(VertexSet sub);

  const Graph& graph() const { return *graph_; }
  const EngineConfig& config() const { return config_; }
  std::vector<TraceStep> take_trace();
  /// True when at least one formula application (not just oracle calls)
  /// happened since construction.
  bool used_recursion() const { return used_recursion_; }
  bool used_oracle() const { return used_oracle_; }

 private:
  enum class Kind { pd, reg };
  int value(Kind kind, VertexSet sub);
  int component_value(Kind kind, VertexSet comp);
  int oracle_component(Kind kind, VertexSet comp, const std::string& reason);
  void record(TraceStep step);

  struct MemoEntry {
    std::optional<int> pd, reg;
  };

  const Graph* graph_;
  EngineConfig config_;
  std::unordered_map<std::uint64_t, MemoEntry> memo_;
  Nu3Memo nu3_memo_;
  std::vector<TraceStep> trace_;
  bool used_recursion_ = false;
  bool used_oracle_ = false;
  mutable std::recursive_mutex mutex_;
};

/// pd(I_3(G)) by the deepest-leaf recursion with oracle fallbacks.
int pd_recursive(const Graph& g, const EngineConfig& cfg = {});
/// reg(I_3(G)) likewise.
int reg_recursive(const Graph& g, const EngineConfig& cfg = {});

/// The closed-form regularity of the quotient S/I_3(G):
///   2 nu3 + 2  if m > 3, m = 3 mod 4, and G is 3-proximal,
///   2 nu3 + 1  if m > 3, m = 2 mod 4, and G is 3-proximal,
///   2 nu3      otherwise (trees included; m = 3 carries a warning upstream).
/// Requires a connected tree or unicyclic graph; nullopt when I_3 = 0.
std::optional<int> reg_closed_form(const Graph& g);

enum class Method { automatic, recursion, oracle, closed_form };
Method method_from_string(const std::string& name);
const char* to_string(Method m);
const char* to_string(Proximality p);

/// Full report: nu3, pd/reg of ideal and quotient, proximality, method used,
/// derivation trace and warnings. `automatic` runs the recursion and
/// cross-checks the closed form, recording any mismatch as a warning (never
/// silently reconciled).
InvariantReport invariants(const Graph& g, Method method, const EngineConfig& cfg = {});

/// Experimental probe of the t >= 4 conjecture: oracle regularity vs the
/// branch prediction from nu_t and t-proximality. Reported, never asserted.
struct ConjectureProbe {
  int t = 0;
  bool ideal_is_zero = false;
  std::optional<int> reg_quotient;     // oracle
  int nu_t = 0;                        // brute force
  Proximality proximal = Proximality::not_applicable;
  std::optional<int> predicted;        // branch value; needs the cycle's data
  std::optional<bool> matches;
  std::vector<std::string> notes;
};
ConjectureProbe conjecture_probe(const Graph& g, int t, const EngineConfig& cfg = {});

}  // namespace pathideal

#endif
