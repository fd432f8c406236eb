#include <doctest.h>

#include <random>

#include "pathideal/errors.hpp"
#include "pathideal/random_gen.hpp"
#include "pathideal/splitting.hpp"
#include "testutil.hpp"

using namespace pathideal;
using testutil::mono;

namespace {
LeafContext context_of(const Graph& g) {
  auto ctx = deepest_leaf(g, classify(g));
  REQUIRE(ctx.has_value());
  return *ctx;
}
}  // namespace

TEST_CASE("leaf splitting on P4") {
  Graph p4 = make_path(4);
  LeafContext ctx = context_of(p4);  // z0 = endpoint 3, y0 = 2
  SplitParts parts = leaf_splitting(p4, ctx);
  CHECK(parts.left == testutil::ideal_of(p4, {VertexSet(0b1110)}));
  CHECK(parts.right == testutil::ideal_of(p4, {VertexSet(0b0111)}));
  CHECK(parts.intersection == testutil::ideal_of(p4, {VertexSet(0b1111)}));
  CHECK(parts.intersection == intersect(parts.left, parts.right));
  CHECK(parts.certified);
  CHECK(parts.tor_into_right == TorCheck::syntactic_pass);
  CHECK(parts.tor_into_left == TorCheck::oracle_deferred);
}

TEST_CASE("leaf splitting on the spider") {
  Graph g = testutil::spider();
  SplitParts parts = leaf_splitting(g, context_of(g));
  CHECK(parts.left ==
        testutil::ideal_of(g, {mono(g, {"z0", "y0", "z1"}), mono(g, {"z0", "y0", "x0"})}));
  CHECK(parts.right ==
        testutil::ideal_of(g, {mono(g, {"w", "x0", "y0"}), mono(g, {"x0", "y0", "z1"})}));
  // z0y0 * (x0z1, x0w)
  CHECK(parts.intersection ==
        testutil::ideal_of(g, {mono(g, {"z0", "y0", "x0", "z1"}),
                               mono(g, {"z0", "y0", "x0", "w"})}));
  CHECK(parts.certified);
}

TEST_CASE("leaf splitting on C6 plus pendant matches the X/Y/Z display") {
  Graph g = testutil::c6_pendant();
  LeafContext ctx = context_of(g);
  SplitParts parts = leaf_splitting(g, ctx);
  CHECK(parts.left == testutil::ideal_of(g, {mono(g, {"z", "v1", "v2"}),
                                             mono(g, {"z", "v1", "v6"})}));
  CHECK(parts.right == path_ideal_in(g, 3, g.vertices() - mono(g, {"z"})));
  CHECK(parts.intersection == intersect(parts.left, parts.right));

  Level1Scaffold sc = scaffold_level1(g, ctx);
  CHECK(sc.X.is_zero());
  CHECK(sc.Y == testutil::ideal_of(g, {mono(g, {"v2", "v3"})}));
  CHECK(sc.Z == testutil::ideal_of(g, {mono(g, {"v6", "v2"}), mono(g, {"v6", "v5"})}));
  // L = X + Y + Z, scaled by z0*y0, is the intersection
  CHECK(scale(sum(sum(sc.X, sc.Y), sc.Z), mono(g, {"z", "v1"})) == parts.intersection);
  // (X+Y) /\ Z = vm (X+Y)
  SquarefreeIdeal xy = sum(sc.X, sc.Y);
  CHECK(intersect(xy, sc.Z) == scale(xy, mono(g, {"v6"})));
}

TEST_CASE("level-2 scaffold on the spider") {
  Graph g = testutil::spider();
  LeafContext ctx = context_of(g);
  Level2Scaffold sc = scaffold_level2(g, ctx);
  CHECK(sc.U.is_zero());  // G_{z0,2} = {w} has no 3-path
  CHECK(sc.V == testutil::ideal_of(g, {mono(g, {"x0", "z1"}), mono(g, {"x0", "w"})}));
  SplitParts parts = leaf_splitting(g, ctx);
  CHECK(scale(sum(sc.U, sc.V), mono(g, {"z0", "y0"})) == parts.intersection);
}

TEST_CASE("level-2 scaffold with s = 0 on P5") {
  Graph p5 = make_path(5);
  LeafContext ctx = context_of(p5);
  CHECK(ctx.s() == 0);
  Level2Scaffold sc = scaffold_level2(p5, ctx);
  CHECK(sc.U.is_zero());
  // V = x0 (u in N(x0)\{y0}) + x0 I3(G_{z0,3}); both graphs shrink to paths
  CHECK(!sc.V.is_zero());
  SplitParts parts = leaf_splitting(p5, ctx);
  CHECK(scale(sum(sc.U, sc.V), VertexSet::single(ctx.z0) | VertexSet::single(ctx.y0)) ==
        parts.intersection);
}

TEST_CASE("level-2 scaffold on an s = 2 broom") {
  // y0 carries leaves z0,z1,z2; the anchor side is the longer arm, so the
  // diameter-endpoint root lands on w1 and the z's are deepest
  Graph g = parse_edge_list("w1 w2\nw2 x0\nx0 y0\ny0 z0\ny0 z1\ny0 z2\n");
  LeafContext ctx = context_of(g);
  REQUIRE(ctx.s() == 2);
  Level2Scaffold sc = scaffold_level2(g, ctx);
  CHECK(!sc.U.is_zero());
  CHECK(intersect(sc.U, sc.V) == scale(sc.U, mono(g, {"x0"})));
  SplitParts parts = leaf_splitting(g, ctx);
  CHECK(scale(sum(sc.U, sc.V), mono(g, {"z0", "y0"})) == parts.intersection);
  CHECK(parts.intersection == intersect(parts.left, parts.right));
}

TEST_CASE("level-1 scaffold on C4 with two pendant leaves") {
  Graph g = parse_edge_list("v1 v2\nv2 v3\nv3 v4\nv4 v1\nv1 z0\nv1 z1\n");
  LeafContext ctx = context_of(g);
  REQUIRE(ctx.level == 1);
  REQUIRE(ctx.s() == 1);
  Level1Scaffold sc = scaffold_level1(g, ctx);
  // G_{z0,2} has no 3-path here, so X degenerates to zero; the intersection
  // identities still hold.
  CHECK(sc.X.is_zero());
  SquarefreeIdeal xy = sum(sc.X, sc.Y);
  CHECK(intersect(xy, sc.Z) == scale(xy, VertexSet::single(ctx.vm)));
  CHECK(intersect(sc.X, sc.Y) == scale(sc.X, VertexSet::single(ctx.v2)));
  SplitParts parts = leaf_splitting(g, ctx);
  CHECK(scale(sum(xy, sc.Z), mono(g, {"z0", "v1"})) == parts.intersection);
}

TEST_CASE("level-1 scaffold with all three parts nonzero") {
  // C4 + two leaves at v1 + two pendants at the opposite cycle vertex v3,
  // so G_{z0,2} keeps an induced 3-path and X survives.
  Graph g = parse_edge_list("v1 v2\nv2 v3\nv3 v4\nv4 v1\nv1 z0\nv1 z1\nv3 a\nv3 b\n");
  LeafContext ctx = context_of(g);
  REQUIRE(ctx.level == 1);
  REQUIRE(ctx.s() == 1);
  Level1Scaffold sc = scaffold_level1(g, ctx);
  CHECK(!sc.X.is_zero());
  CHECK(!sc.Y.is_zero());
  CHECK(!sc.Z.is_zero());
  SquarefreeIdeal xy = sum(sc.X, sc.Y);
  CHECK(intersect(xy, sc.Z) == scale(xy, VertexSet::single(ctx.vm)));
  CHECK(intersect(sc.X, sc.Y) == scale(sc.X, VertexSet::single(ctx.v2)));
  SplitParts parts = leaf_splitting(g, ctx);
  CHECK(scale(sum(xy, sc.Z), VertexSet::single(ctx.z0) | VertexSet::single(ctx.y0)) ==
        parts.intersection);
}

TEST_CASE("level-1 scaffold on C5 plus pendant: path-ideal parts vanish") {
  Graph g = parse_edge_list("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v1\nv1 z\n");
  LeafContext ctx = context_of(g);
  REQUIRE(ctx.level == 1);
  Level1Scaffold sc = scaffold_level1(g, ctx);
  CHECK(sc.X.is_zero());
  // G_{z0,3} and G_{z0,4} are too small to carry 3-paths: only linear parts
  for (VertexSet gen : sc.Y.generators()) CHECK(gen.count() == 2);
  for (VertexSet gen : sc.Z.generators()) CHECK(gen.count() == 2);
}

TEST_CASE("scaffolds reject the wrong level") {
  Graph g = testutil::c6_pendant();
  LeafContext ctx = context_of(g);  // level 1
  CHECK_THROWS_AS(scaffold_level2(g, ctx), ValidationError);
  Graph spider = testutil::spider();
  LeafContext ctx2 = context_of(spider);  // level 3
  CHECK_THROWS_AS(scaffold_level1(spider, ctx2), ValidationError);
}

TEST_CASE("leaf splitting intersection identity holds for every leaf at small scale") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 4 + static_cast<int>(rng() % 7);
    Graph g = iter % 2 ? random_tree(n, rng) : random_unicyclic(std::max(n, 4), rng);
    if (!has_t_path(g, 3, g.vertices())) continue;
    CycleStructure cs = classify(g);
    for (int z0 = 0; z0 < g.n; ++z0) {
      if (g.degree(z0) != 1) continue;
      LeafContext ctx;
      ctx.z0 = z0;
      ctx.y0 = g.adj_mask[static_cast<std::size_t>(z0)].lowest();
      ctx.level = cs.level[static_cast<std::size_t>(z0)];
      SplitParts parts = leaf_splitting(g, ctx);
      CAPTURE(to_edge_list(g));
      CAPTURE(z0);
      CHECK(parts.intersection == intersect(parts.left, parts.right));
      CHECK(sum(parts.left, parts.right) == path_ideal(g, 3));
    }
  }
}
