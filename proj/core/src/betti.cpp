#include "pathideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_set>

#include "pathideal/errors.hpp"

namespace pathideal {

int BettiTable::pd_ideal() const {
  int pd = 0;
  for (const auto& [key, value] : entries)
    if (value > 0) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::reg_ideal() const {
  int reg = 0;
  for (const auto& [key, value] : entries)
    if (value > 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::map<int, std::int64_t> BettiTable::generator_degrees() const {
  std::map<int, std::int64_t> out;
  for (const auto& [key, value] : entries)
    if (key.first == 0 && value > 0) out[key.second] += value;
  return out;
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

// Rank over GF(2); columns are sorted row-index lists.
std::size_t rank_gf2(std::size_t rows, const std::vector<std::vector<std::int32_t>>& cols) {
  std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot_col(rows);
  std::size_t rank = 0;
  std::vector<std::uint64_t> work(words);
  for (const auto& col : cols) {
    std::fill(work.begin(), work.end(), 0);
    for (std::int32_t r : col) work[static_cast<std::size_t>(r) >> 6] ^= 1ull << (r & 63);
    for (;;) {
      std::size_t w = 0;
      while (w < words && work[w] == 0) ++w;
      if (w == words) break;  // reduced to zero
      std::size_t r = (w << 6) + static_cast<std::size_t>(std::countr_zero(work[w]));
      if (pivot_col[r].empty()) {
        pivot_col[r] = work;
        ++rank;
        break;
      }
      const auto& pv = pivot_col[r];
      for (std::size_t i = w; i < words; ++i) work[i] ^= pv[i];
    }
  }
  return rank;
}

// Rank over GF(p), p odd prime; columns are sorted (row, value) lists.
using SparseCol = std::vector<std::pair<std::int32_t, std::int64_t>>;

std::size_t rank_modp(std::size_t rows, std::vector<SparseCol>& cols, std::int64_t p) {
  std::vector<SparseCol> pivot_col(rows);  // normalized: leading value 1
  std::vector<char> has_pivot(rows, 0);
  std::size_t rank = 0;
  SparseCol merged;
  for (auto& col : cols) {
    while (!col.empty()) {
      std::int32_t r = col.front().first;
      if (!has_pivot[static_cast<std::size_t>(r)]) {
        std::int64_t inv = mod_inv(col.front().second, p);
        for (auto& [row, val] : col) val = val * inv % p;
        pivot_col[static_cast<std::size_t>(r)] = std::move(col);
        has_pivot[static_cast<std::size_t>(r)] = 1;
        ++rank;
        break;
      }
      // col -= lead * pivot
      const SparseCol& pv = pivot_col[static_cast<std::size_t>(r)];
      std::int64_t c = col.front().second;
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < pv.size()) {
        if (j == pv.size() || (i < col.size() && col[i].first < pv[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || pv[j].first < col[i].first) {
          std::int64_t v = (p - c) * pv[j].second % p;
          if (v) merged.emplace_back(pv[j].first, v);
          ++j;
        } else {
          std::int64_t v = (col[i].second + (p - c) * pv[j].second) % p;
          if (v) merged.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col = merged;
    }
  }
  return rank;
}

// Reduced homology dimensions over GF(p) of the simplicial complex on
// {0..k-1} whose faces are the subsets containing none of `local_gens`.
// Returns h indexed by face size s: h[s] = dim H-tilde_{s-1}.
std::vector<std::int64_t> slice_reduced_homology(int k, const std::vector<std::uint32_t>& local_gens,
                                                 std::int64_t p) {
  std::size_t space = std::size_t{1} << k;
  std::vector<std::uint8_t> nonface(space, 0);
  for (std::uint32_t g : local_gens) nonface[g] = 1;
  for (int b = 0; b < k; ++b) {
    std::uint32_t bit = 1u << b;
    for (std::uint32_t s = 0; s < space; ++s)
      if ((s & bit) && nonface[s ^ bit]) nonface[s] = 1;
  }

  std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(k) + 1);
  for (std::uint32_t s = 0; s < space; ++s)
    if (!nonface[s]) faces[static_cast<std::size_t>(std::popcount(s))].push_back(s);

  // rank[s] = rank of the boundary map from size-s chains to size-(s-1).
  std::vector<std::size_t> rank(static_cast<std::size_t>(k) + 2, 0);
  std::vector<std::int32_t> index(space, -1);
  for (int s = 1; s <= k; ++s) {
    const auto& domain = faces[static_cast<std::size_t>(s)];
    const auto& codomain = faces[static_cast<std::size_t>(s - 1)];
    if (domain.empty()) continue;
    for (std::size_t i = 0; i < codomain.size(); ++i)
      index[codomain[i]] = static_cast<std::int32_t>(i);
    if (p == 2) {
      std::vector<std::vector<std::int32_t>> cols;
      cols.reserve(domain.size());
      for (std::uint32_t f : domain) {
        std::vector<std::int32_t> col;
        col.reserve(static_cast<std::size_t>(s));
        for (std::uint32_t rest = f; rest; rest &= rest - 1)
          col.push_back(index[f ^ (rest & ~(rest - 1))]);
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
      rank[static_cast<std::size_t>(s)] = rank_gf2(codomain.size(), cols);
    } else {
      std::vector<SparseCol> cols;
      cols.reserve(domain.size());
      for (std::uint32_t f : domain) {
        SparseCol col;
        col.reserve(static_cast<std::size_t>(s));
        int position = 0;
        for (std::uint32_t rest = f; rest; rest &= rest - 1, ++position) {
          std::int64_t sign = (position % 2 == 0) ? 1 : p - 1;
          col.emplace_back(index[f ^ (rest & ~(rest - 1))], sign);
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
      rank[static_cast<std::size_t>(s)] = rank_modp(codomain.size(), cols, p);
    }
  }

  std::vector<std::int64_t> h(static_cast<std::size_t>(k) + 1, 0);
  for (int s = 0; s <= k; ++s)
    h[static_cast<std::size_t>(s)] =
        static_cast<std::int64_t>(faces[static_cast<std::size_t>(s)].size()) -
        static_cast<std::int64_t>(rank[static_cast<std::size_t>(s)]) -
        static_cast<std::int64_t>(rank[static_cast<std::size_t>(s) + 1]);
  return h;
}

}  // namespace

BettiTable betti_table(const SquarefreeIdeal& ideal, std::int64_t p, const OracleBudget& budget) {
  if (ideal.is_zero()) throw ValidationError("betti_table: zero ideal has no Betti table");
  if (ideal.is_unit()) throw ValidationError("betti_table: unit ideal");
  if (!is_prime(p)) throw ValidationError("betti_table: field order must be prime");

  const auto& gens = ideal.generators();

  // Closure of generator supports under union (the lcm lattice minus bottom).
  std::unordered_set<std::uint64_t> lattice;
  std::queue<std::uint64_t> work;
  for (VertexSet g : gens)
    if (lattice.insert(g.bits()).second) work.push(g.bits());
  while (!work.empty()) {
    std::uint64_t w = work.front();
    work.pop();
    for (VertexSet g : gens) {
      std::uint64_t u = w | g.bits();
      if (u == w) continue;
      if (lattice.size() >= budget.max_lattice)
        throw BudgetError("betti_table: lcm lattice exceeds " +
                          std::to_string(budget.max_lattice) + " elements");
      if (lattice.insert(u).second) work.push(u);
    }
  }

  std::vector<std::uint64_t> degrees(lattice.begin(), lattice.end());
  std::sort(degrees.begin(), degrees.end());

  BettiTable table;
  table.field = p;
  for (std::uint64_t w_bits : degrees) {
    VertexSet w(w_bits);
    int k = w.count();
    if (k > budget.max_slice_width)
      throw BudgetError("betti_table: multidegree of width " + std::to_string(k) +
                        " exceeds the slice budget of " + std::to_string(budget.max_slice_width));

    // Remap the generators contained in W to local bit positions.
    std::vector<int> verts = w.members();
    std::vector<std::uint32_t> local_gens;
    for (VertexSet g : gens) {
      if (!g.subset_of(w)) continue;
      std::uint32_t local = 0;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (g.contains(verts[i])) local |= 1u << i;
      local_gens.push_back(local);
    }

    std::vector<std::int64_t> h = slice_reduced_homology(k, local_gens, p);
    // Hochster: beta_{i,W}(S/I) = dim H-tilde_{|W|-i-1}; shift to the ideal.
    for (int s = 0; s <= k; ++s) {
      std::int64_t dim = h[static_cast<std::size_t>(s)];
      if (dim <= 0) continue;
      int ideal_i = k - s - 1;
      if (ideal_i < 0) continue;
      table.entries[{ideal_i, k}] += dim;
    }
  }
  return table;
}

PdReg pd_reg(const SquarefreeIdeal& ideal, std::int64_t p, const OracleBudget& budget) {
  PdReg out;
  if (ideal.is_zero()) return out;
  BettiTable table = betti_table(ideal, p, budget);
  out.pd_ideal = table.pd_ideal();
  out.reg_ideal = table.reg_ideal();
  out.pd_quotient = table.pd_quotient();
  out.reg_quotient = table.reg_quotient();
  return out;
}

SplittingCheck verify_betti_splitting(const SquarefreeIdeal& p_ideal, const SquarefreeIdeal& a,
                                      const SquarefreeIdeal& b, std::int64_t p,
                                      const OracleBudget& budget) {
  if (!(p_ideal == sum(a, b)))
    throw ValidationError("verify_betti_splitting: P != A + B");
  if (a.is_zero() || b.is_zero())
    throw ValidationError("verify_betti_splitting: splitting parts must be nonzero");

  SplittingCheck check;
  check.whole = betti_table(p_ideal, p, budget);
  check.a = betti_table(a, p, budget);
  check.b = betti_table(b, p, budget);
  SquarefreeIdeal meet = intersect(a, b);
  if (!meet.is_zero()) check.meet = betti_table(meet, p, budget);
  check.meet.field = p;

  int max_i = std::max({check.whole.pd_ideal(), check.a.pd_ideal(), check.b.pd_ideal(),
                        check.meet.pd_ideal() + 1});
  int max_j = 0;
  for (const auto* t : {&check.whole, &check.a, &check.b, &check.meet})
    for (const auto& [key, value] : t->entries) max_j = std::max(max_j, key.second);

  check.holds = true;
  for (int i = 0; i <= max_i; ++i)
    for (int j = 0; j <= max_j; ++j) {
      std::int64_t lhs = check.whole.beta(i, j);
      std::int64_t rhs = check.a.beta(i, j) + check.b.beta(i, j) +
                         (i >= 1 ? check.meet.beta(i - 1, j) : 0);
      if (lhs != rhs) {
        check.holds = false;
        check.violations.push_back({i, j, lhs, rhs});
      }
    }
  return check;
}

namespace {

// Accumulates coeff * t^shift * K(S/(gens)) into acc.
void kpoly_rec(std::vector<VertexSet> gens, int nvars, std::vector<std::int64_t>& acc,
               std::int64_t coeff, int shift, std::size_t& nodes, std::size_t max_nodes) {
  if (++nodes > max_nodes) throw BudgetError("hilbert_numerator: recursion budget exceeded");
  if (gens.empty()) {
    acc[static_cast<std::size_t>(shift)] += coeff;
    return;
  }
  if (gens.size() == 1) {
    acc[static_cast<std::size_t>(shift)] += coeff;
    acc[static_cast<std::size_t>(shift + gens[0].count())] -= coeff;
    return;
  }
  // 0 -> S/(J:m) (-deg m) -> S/J -> S/(J + m) -> 0 with m the last generator.
  VertexSet m = gens.back();
  gens.pop_back();
  std::vector<VertexSet> colon;
  colon.reserve(gens.size());
  for (VertexSet g : gens) colon.push_back(g - m);
  SquarefreeIdeal colon_min = SquarefreeIdeal::from_generators(nvars, std::move(colon));
  kpoly_rec(gens, nvars, acc, coeff, shift, nodes, max_nodes);
  kpoly_rec(colon_min.generators(), nvars, acc, -coeff, shift + m.count(), nodes, max_nodes);
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const SquarefreeIdeal& ideal,
                                            const OracleBudget& budget) {
  std::vector<std::int64_t> acc(static_cast<std::size_t>(2 * ideal.nvars() + 2), 0);
  std::size_t nodes = 0;
  kpoly_rec(ideal.generators(), ideal.nvars(), acc, 1, 0, nodes, budget.max_kpoly_nodes);
  return acc;
}

bool hilbert_numerator_check(const SquarefreeIdeal& ideal, const BettiTable& table,
                             const OracleBudget& budget) {
  std::vector<std::int64_t> expect = hilbert_numerator(ideal, budget);
  std::vector<std::int64_t> alt(expect.size(), 0);
  alt[0] = 1;  // beta_{0,0}(S/I)
  for (const auto& [key, value] : table.entries) {
    auto [i, j] = key;
    // beta_{i+1, j}(S/I) with sign (-1)^{i+1}
    std::int64_t sign = (i % 2 == 0) ? -1 : 1;
    if (static_cast<std::size_t>(j) < alt.size()) alt[static_cast<std::size_t>(j)] += sign * value;
  }
  return alt == expect;
}

}  // namespace pathideal
