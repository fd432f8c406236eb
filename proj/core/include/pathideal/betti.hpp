#ifndef PATHIDEAL_BETTI_HPP
#define PATHIDEAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pathideal/ideal.hpp"

namespace pathideal {

/// Graded Betti numbers of a squarefree monomial ideal I over GF(p), in the
/// ideal convention: beta_{0,j} counts degree-j minimal generators,
/// pd(I) = max{i : beta_i != 0}, reg(I) = max{j - i : beta_{i,j} != 0}.
/// Quotient numbers follow from beta_i(S/I) = beta_{i-1}(I) for i >= 1.
struct BettiTable {
  std::int64_t field = 2;
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  std::int64_t total(int i) const {
    std::int64_t sum = 0;
    for (const auto& [key, value] : entries)
      if (key.first == i) sum += value;
    return sum;
  }
  int pd_ideal() const;
  int reg_ideal() const;
  int pd_quotient() const { return pd_ideal() + 1; }
  int reg_quotient() const { return reg_ideal() - 1; }
  /// Degree histogram of the minimal generators (the beta_{0,j} row).
  std::map<int, std::int64_t> generator_degrees() const;
};

struct OracleBudget {
  std::size_t max_lattice = 5'000'000;  // distinct generator-support unions
  int max_slice_width = 16;             // per-union face enumeration is 2^width
  std::size_t max_kpoly_nodes = 4'000'000;
};

/// Exact Betti table of a nonzero ideal over GF(p) via Hochster's formula:
/// for every union W of generator supports (the only multidegrees where
/// Betti numbers live), the reduced homology of the restricted
/// Stanley-Reisner complex is computed by boundary-matrix rank over GF(p).
BettiTable betti_table(const SquarefreeIdeal& ideal, std::int64_t p,
                       const OracleBudget& budget = {});

/// pd and reg of I and S/I; all fields empty for the zero ideal.
struct PdReg {
  std::optional<int> pd_ideal, reg_ideal, pd_quotient, reg_quotient;
  bool defined() const { return pd_ideal.has_value(); }
};
PdReg pd_reg(const SquarefreeIdeal& ideal, std::int64_t p, const OracleBudget& budget = {});

/// Numerical check of the Betti-splitting equation
///   beta_{i,j}(P) = beta_{i,j}(A) + beta_{i,j}(B) + beta_{i-1,j}(A /\ B)
/// for P = A + B, degreewise and totalwise. Lists every violating (i, j).
struct SplittingCheck {
  bool holds = false;
  struct Violation {
    int i, j;
    std::int64_t lhs, rhs;
  };
  std::vector<Violation> violations;
  BettiTable whole, a, b, meet;  // meet is empty when A /\ B = 0
};
SplittingCheck verify_betti_splitting(const SquarefreeIdeal& p_ideal, const SquarefreeIdeal& a,
                                      const SquarefreeIdeal& b, std::int64_t p,
                                      const OracleBudget& budget = {});

/// Numerator of the Hilbert series of S/I by the colon exact-sequence
/// recursion; coefficient of t^j at index j.
std::vector<std::int64_t> hilbert_numerator(const SquarefreeIdeal& ideal,
                                            const OracleBudget& budget = {});

/// Independent consistency check: the alternating Betti sums of S/I must
/// match the Hilbert-series numerator in every degree.
bool hilbert_numerator_check(const SquarefreeIdeal& ideal, const BettiTable& table,
                             const OracleBudget& budget = {});

}  // namespace pathideal

#endif
