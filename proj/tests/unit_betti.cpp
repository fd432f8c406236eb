#include <doctest.h>

#include <random>

#include "pathideal/betti.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/random_gen.hpp"
#include "testutil.hpp"

using namespace pathideal;

namespace {
SquarefreeIdeal on8(std::initializer_list<std::uint64_t> masks) {
  std::vector<VertexSet> gens;
  for (std::uint64_t m : masks) gens.push_back(VertexSet(m));
  return SquarefreeIdeal::from_generators(8, std::move(gens));
}
}  // namespace

TEST_CASE("frozen tables for the small fixtures") {
  // principal ideal
  BettiTable principal = betti_table(on8({0b0111}), 2);
  CHECK(principal.entries == decltype(principal.entries){{{0, 3}, 1}});
  CHECK(principal.pd_ideal() == 0);
  CHECK(principal.reg_ideal() == 3);
  CHECK(principal.reg_quotient() == 2);

  BettiTable p4 = betti_table(path_ideal(make_path(4), 3), 2);
  CHECK(p4.entries == decltype(p4.entries){{{0, 3}, 2}, {{1, 4}, 1}});
  CHECK(p4.pd_ideal() == 1);
  CHECK(p4.reg_ideal() == 3);

  BettiTable p5 = betti_table(path_ideal(make_path(5), 3), 2);
  CHECK(p5.entries == decltype(p5.entries){{{0, 3}, 3}, {{1, 4}, 2}});

  BettiTable c4 = betti_table(path_ideal(make_cycle(4), 3), 2);
  CHECK(c4.entries == decltype(c4.entries){{{0, 3}, 4}, {{1, 4}, 3}});
  CHECK(c4.reg_quotient() == 2);  // = 2 nu3(C4)

  CHECK(betti_table(path_ideal(make_cycle(6), 3), 2).reg_quotient() == 3);
  CHECK(betti_table(path_ideal(make_cycle(7), 3), 2).reg_quotient() == 4);
}

TEST_CASE("beta0 rows count generators by degree") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 30; ++iter) {
    SquarefreeIdeal ideal = random_squarefree_ideal(7, 4, 4, rng);
    BettiTable t = betti_table(ideal, 2);
    std::map<int, std::int64_t> expect;
    for (VertexSet g : ideal.generators()) ++expect[g.count()];
    CHECK(t.generator_degrees() == expect);
  }
}

TEST_CASE("field independence on path-ideal instances") {
  for (const Graph& g : {make_path(6), make_cycle(5), testutil::spider()}) {
    BettiTable a = betti_table(path_ideal(g, 3), 2);
    BettiTable b = betti_table(path_ideal(g, 3), 32003);
    CHECK(a.entries == b.entries);
  }
}

TEST_CASE("pd_reg and the quotient conversion") {
  PdReg r = pd_reg(path_ideal(make_path(5), 3), 2);
  REQUIRE(r.defined());
  CHECK(*r.pd_ideal == 1);
  CHECK(*r.reg_ideal == 3);
  CHECK(*r.pd_quotient == 2);
  CHECK(*r.reg_quotient == 2);

  PdReg zero = pd_reg(SquarefreeIdeal::zero(4), 2);
  CHECK(!zero.defined());
}

TEST_CASE("zero and unit ideals are rejected") {
  CHECK_THROWS_AS(betti_table(SquarefreeIdeal::zero(4), 2), ValidationError);
  CHECK_THROWS_AS(betti_table(partial_star(on8({0b1})), 2), ValidationError);
  CHECK_THROWS_AS(betti_table(on8({0b11}), 4), ValidationError);  // field not prime
}

TEST_CASE("budget errors") {
  OracleBudget tiny;
  tiny.max_lattice = 3;
  CHECK_THROWS_AS(betti_table(path_ideal(make_path(8), 3), 2, tiny), BudgetError);
  OracleBudget narrow;
  narrow.max_slice_width = 4;
  CHECK_THROWS_AS(betti_table(path_ideal(make_path(8), 3), 2, narrow), BudgetError);
}

TEST_CASE("betti splitting verification") {
  // P4 leaf splitting
  SquarefreeIdeal whole = on8({0b0111, 0b1110});
  SplittingCheck check = verify_betti_splitting(whole, on8({0b0111}), on8({0b1110}), 2);
  CHECK(check.holds);
  CHECK(check.violations.empty());

  // splitting an edge ideal at one edge; the equation genuinely holds and
  // the report confirms it
  SquarefreeIdeal edges = on8({0b011, 0b110});
  SplittingCheck edge_check = verify_betti_splitting(edges, on8({0b011}), on8({0b110}), 2);
  CHECK(edge_check.holds);

  // splitting off one edge of a triangle is a Betti splitting too
  SquarefreeIdeal triangle = on8({0b011, 0b110, 0b101});
  CHECK(verify_betti_splitting(triangle, on8({0b011}), on8({0b110, 0b101}), 2).holds);

  // a decomposition that genuinely fails the equation: P = A = B = (x)
  // double-counts beta_0; the report lists the violation
  SplittingCheck degenerate = verify_betti_splitting(on8({0b1}), on8({0b1}), on8({0b1}), 2);
  CHECK(!degenerate.holds);
  CHECK(!degenerate.violations.empty());

  CHECK_THROWS_AS(verify_betti_splitting(whole, on8({0b0111}), on8({0b0111}), 2),
                  ValidationError);
}

TEST_CASE("hilbert numerator check on the frozen fixtures") {
  SquarefreeIdeal p4 = path_ideal(make_path(4), 3);
  std::vector<std::int64_t> k = hilbert_numerator(p4);
  CHECK(k[0] == 1);
  CHECK(k[3] == -2);
  CHECK(k[4] == 1);
  CHECK(hilbert_numerator_check(p4, betti_table(p4, 2)));

  SquarefreeIdeal c4 = path_ideal(make_cycle(4), 3);
  std::vector<std::int64_t> kc = hilbert_numerator(c4);
  CHECK(kc[3] == -4);
  CHECK(kc[4] == 3);
  CHECK(hilbert_numerator_check(c4, betti_table(c4, 2)));

  CHECK(hilbert_numerator_check(on8({0b0111}), betti_table(on8({0b0111}), 2)));

  // a corrupted table fails the check
  BettiTable bad = betti_table(p4, 2);
  bad.entries[{1, 4}] += 1;
  CHECK(!hilbert_numerator_check(p4, bad));
}

TEST_CASE("multiplying by a fresh variable shifts reg and keeps pd") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 25; ++iter) {
    SquarefreeIdeal small = random_squarefree_ideal(9, 4, 4, rng);  // vars 0..8
    SquarefreeIdeal wide = SquarefreeIdeal::from_generators(10, small.generators());
    SquarefreeIdeal scaled = scale(wide, VertexSet::single(9));  // fresh var 9
    BettiTable a = betti_table(wide, 2);
    BettiTable b = betti_table(scaled, 2);
    CHECK(b.pd_ideal() == a.pd_ideal());
    CHECK(b.reg_ideal() == a.reg_ideal() + 1);
  }
}

TEST_CASE("disjoint-union additivity of pd and reg") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 20; ++iter) {
    SquarefreeIdeal a = random_squarefree_ideal(5, 3, 3, rng);
    SquarefreeIdeal b_small = random_squarefree_ideal(5, 3, 3, rng);
    // shift b into variables 5..9
    std::vector<VertexSet> shifted;
    for (VertexSet g : b_small.generators()) shifted.push_back(VertexSet(g.bits() << 5));
    SquarefreeIdeal a10 = SquarefreeIdeal::from_generators(10, a.generators());
    SquarefreeIdeal b10 = SquarefreeIdeal::from_generators(10, shifted);
    BettiTable ta = betti_table(a10, 2), tb = betti_table(b10, 2);
    BettiTable tsum = betti_table(sum(a10, b10), 2);
    CHECK(tsum.pd_ideal() == ta.pd_ideal() + tb.pd_ideal() + 1);
    CHECK(tsum.reg_ideal() == ta.reg_ideal() + tb.reg_ideal() - 1);
  }
}

TEST_CASE("scaffold pd/reg shift identities at sample scale") {
  // Q_s = (zi zj) + (z1..zs) P: pd + s - 1, reg + 1
  std::mt19937_64 rng(808);
  for (int s : {1, 2, 3}) {
    SquarefreeIdeal p_small = random_squarefree_ideal(6, 3, 3, rng);
    int nv = 6 + s;
    SquarefreeIdeal p = SquarefreeIdeal::from_generators(nv, p_small.generators());
    std::vector<VertexSet> gens;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        gens.push_back(VertexSet::single(6 + i) | VertexSet::single(6 + j));
    for (int i = 0; i < s; ++i)
      for (VertexSet g : p.generators()) gens.push_back(g | VertexSet::single(6 + i));
    SquarefreeIdeal q = SquarefreeIdeal::from_generators(nv, gens);
    BettiTable tp = betti_table(p, 2), tq = betti_table(q, 2);
    CHECK(tq.pd_ideal() == tp.pd_ideal() + s - 1);
    CHECK(tq.reg_ideal() == tp.reg_ideal() + 1);

    // Q = (z1..zs) + P: pd + s, reg unchanged
    std::vector<VertexSet> vgens = p.generators();
    for (int i = 0; i < s; ++i) vgens.push_back(VertexSet::single(6 + i));
    BettiTable tv = betti_table(SquarefreeIdeal::from_generators(nv, vgens), 2);
    CHECK(tv.pd_ideal() == tp.pd_ideal() + s);
    CHECK(tv.reg_ideal() == tp.reg_ideal());
  }
}
