#include <doctest.h>

#include <random>
#include <set>

#include "pathideal/classify.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/graph.hpp"
#include "pathideal/random_gen.hpp"
#include "testutil.hpp"

using namespace pathideal;

TEST_CASE("edge list parsing interns labels in first-appearance order") {
  Graph g = parse_edge_list("a b\nb c");
  CHECK(g.n == 3);
  CHECK(g.names == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("edge list rejects self-loops, duplicates and malformed lines") {
  CHECK_THROWS_AS(parse_edge_list("a a"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("a b\nb a"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("a b c"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("a"), ValidationError);
  // comments and blank lines are fine
  CHECK(parse_edge_list("# header\n\na b # trailing\n").n == 2);
}

TEST_CASE("graph6 payload") {
  // P4 as 0-1-2-3: upper-triangle bits 1 01 001 -> byte 41+63 = 'h'.
  Graph g = parse_graph6("Ch");
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  Graph h = parse_graph6(">>graph6<<Ch");
  CHECK(h.edge_count() == 3);
  // auto-detection: single token = graph6, two tokens = edge list
  CHECK(parse_graph("Ch").n == 4);
  CHECK(parse_graph("a b").n == 2);

  // long-form vertex count: '~' prefix, 18-bit n; 63 isolated vertices
  std::string big = "~??~";
  big.append((63 * 62 / 2 + 5) / 6, '?');
  Graph empty63 = parse_graph6(big);
  CHECK(empty63.n == 63);
  CHECK(empty63.edge_count() == 0);
  CHECK_THROWS_AS(parse_graph6("Ab"), ValidationError);  // truncated bits are tolerated,
                                                         // but a bad byte is not
  CHECK_THROWS_AS(parse_graph6("C"), ValidationError);   // truncated payload
}

TEST_CASE("the 23-vertex fixture parses to the expected shape") {
  Graph g = testutil::big_unicyclic();
  CHECK(g.n == 23);
  CHECK(g.edge_count() == 23);
  CycleStructure cs = classify(g);
  CHECK(cs.kind == GraphKind::unicyclic);
  REQUIRE(cs.components.size() == 1);
  CHECK(cs.components.front().cycle.size() == 6);
  // deepest leaves sit three levels below the cycle
  CHECK(cs.level[static_cast<std::size_t>(g.index_of("z1"))] == 3);
  CHECK(cs.level[static_cast<std::size_t>(g.index_of("z5"))] == 3);
}

TEST_CASE("classification matches the edge-count characterization") {
  CHECK(classify(make_cycle(6)).kind == GraphKind::unicyclic);
  CHECK(classify(make_path(5)).kind == GraphKind::forest);
  CHECK(classify(parse_edge_list("a b\na c\na d\nb c\nb d\nc d")).kind == GraphKind::other);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = i % 2 ? random_tree(3 + static_cast<int>(rng() % 10), rng)
                    : random_unicyclic(4 + static_cast<int>(rng() % 9), rng);
    CycleStructure cs = classify(g);
    bool tree_count = g.edge_count() == static_cast<std::size_t>(g.n) - 1;
    CHECK(cs.kind == (tree_count ? GraphKind::forest : GraphKind::unicyclic));
  }
}

TEST_CASE("forest roots are diameter endpoints") {
  Graph p5 = make_path(5);
  CycleStructure cs = classify(p5);
  CHECK(cs.components.front().root == 0);  // endpoint, smallest index
  int deepest = 0;
  for (int v = 0; v < p5.n; ++v) deepest = std::max(deepest, cs.level[static_cast<std::size_t>(v)]);
  CHECK(deepest == 4);
}

TEST_CASE("neighborhoods") {
  Graph p3 = parse_edge_list("a b\nb c");
  CHECK(neighborhood(p3, VertexSet::single(1), false) == testutil::mono(p3, {"a", "c"}));
  CHECK(neighborhood(p3, testutil::mono(p3, {"a", "c"}), true) == p3.vertices());
  Graph c6 = make_cycle(6);
  CHECK(neighborhood(c6, c6.vertices(), false).empty());  // boundary of a bare cycle
}

TEST_CASE("components are ordered by smallest member") {
  Graph g = parse_edge_list("a b\nb c\nc d\nx y\ny z");
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].lowest() == 0);
  CHECK(comps[0].count() == 4);
  CHECK(comps[1].count() == 3);
  CHECK(components(build_graph(0, {})).empty());
  CHECK(components(make_cycle(5)).size() == 1);
}

TEST_CASE("induced subgraphs") {
  Graph c4 = make_cycle(4);
  VertexSet three = VertexSet(0b0111);
  InducedSubgraph sub = induced_subgraph(c4, three);
  CHECK(sub.graph.n == 3);
  CHECK(sub.graph.edge_count() == 2);  // P3
  InducedSubgraph opposite = induced_subgraph(c4, VertexSet(0b0101));
  CHECK(opposite.graph.edge_count() == 0);
  // identity restriction
  InducedSubgraph all = induced_subgraph(c4, c4.vertices());
  CHECK(all.graph.edge_count() == c4.edge_count());
  CHECK(all.to_parent == std::vector<int>{0, 1, 2, 3});

  // nested restriction equals direct restriction to the intersection
  Graph g = parse_edge_list("a b\nb c\nc d\nd e\nb e");
  VertexSet outer = VertexSet(0b11110);
  InducedSubgraph mid = induced_subgraph(g, outer);
  VertexSet inner_local;  // vertices of `mid` that came from {b, c, e}
  for (int v : VertexSet(0b10110))
    inner_local.add(mid.from_parent[static_cast<std::size_t>(v)]);
  Graph twice = induced_subgraph(mid.graph, inner_local).graph;
  Graph once = induced_subgraph(g, VertexSet(0b10110)).graph;
  CHECK(twice.edge_count() == once.edge_count());
  CHECK(twice.names == once.names);
}

TEST_CASE("t-path supports") {
  Graph p4 = make_path(4);
  auto paths = enumerate_t_paths(p4, 3);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == VertexSet(0b0111));
  CHECK(paths[1] == VertexSet(0b1110));

  // triangle: three vertex sequences, one support
  CHECK(enumerate_t_paths(make_cycle(3), 3).size() == 1);

  // star K_{1,3}: every path is leaf-center-leaf
  Graph star = parse_edge_list("c a\nc b\nc d");
  auto star_paths = enumerate_t_paths(star, 3);
  CHECK(star_paths.size() == 3);
  for (VertexSet p : star_paths) CHECK(p.contains(0));  // center c

  CHECK(enumerate_t_paths(make_path(3), 4).empty());
  CHECK(has_t_path(p4, 3, p4.vertices()));
  CHECK(!has_t_path(make_path(2), 3, VertexSet::full(2)));
}

TEST_CASE("relabeling equivariance of path enumeration") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 5 + static_cast<int>(rng() % 8);
    Graph g = iter % 2 ? random_tree(n, rng) : random_unicyclic(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = permute_graph(g, perm);
    auto paths_g = enumerate_t_paths(g, 3);
    auto paths_h = enumerate_t_paths(h, 3);
    std::set<std::uint64_t> mapped;
    for (VertexSet p : paths_g) {
      VertexSet q;
      for (int v : p) q.add(perm[static_cast<std::size_t>(v)]);
      mapped.insert(q.bits());
    }
    std::set<std::uint64_t> actual;
    for (VertexSet p : paths_h) actual.insert(p.bits());
    CHECK(mapped == actual);
  }
}

TEST_CASE("deepest leaf: spider") {
  Graph g = testutil::spider();
  auto ctx = deepest_leaf(g, classify(g));
  REQUIRE(ctx.has_value());
  CHECK(g.names[static_cast<std::size_t>(ctx->z0)] == "z0");
  CHECK(g.names[static_cast<std::size_t>(ctx->y0)] == "y0");
  CHECK(g.names[static_cast<std::size_t>(ctx->x0)] == "x0");
  REQUIRE(ctx->s() == 1);
  CHECK(g.names[static_cast<std::size_t>(ctx->siblings[0])] == "z1");
  CHECK(ctx->level == 3);  // distance from the diameter-endpoint root w
}

TEST_CASE("deepest leaf: none on bare cycles, vertices and edges") {
  CHECK(!deepest_leaf(make_cycle(6), classify(make_cycle(6))).has_value());
  CHECK(!deepest_leaf(build_graph(1, {}), classify(build_graph(1, {}))).has_value());
  CHECK(!deepest_leaf(make_path(2), classify(make_path(2))).has_value());
  CHECK_THROWS_AS(
      deepest_leaf(parse_edge_list("a b\na c\na d\nb c\nb d\nc d"),
                   classify(parse_edge_list("a b\na c\na d\nb c\nb d\nc d"))),
      ValidationError);
}

TEST_CASE("deepest leaf: level-1 rotation on C6 plus pendant") {
  Graph g = testutil::c6_pendant();
  auto ctx = deepest_leaf(g, classify(g));
  REQUIRE(ctx.has_value());
  CHECK(ctx->level == 1);
  CHECK(ctx->s() == 0);
  CHECK(g.names[static_cast<std::size_t>(ctx->z0)] == "z");
  CHECK(g.names[static_cast<std::size_t>(ctx->y0)] == "v1");
  CHECK(g.names[static_cast<std::size_t>(ctx->v2)] == "v2");
  CHECK(g.names[static_cast<std::size_t>(ctx->vm)] == "v6");
  REQUIRE(ctx->rotated_cycle.size() == 6);
  CHECK(ctx->rotated_cycle.front() == ctx->y0);
}

TEST_CASE("deepest leaf has maximal level among leaves of its tree") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 10);
    Graph g = iter % 2 ? random_tree(n, rng) : random_unicyclic(std::max(n, 4), rng);
    CycleStructure cs = classify(g);
    auto ctx = deepest_leaf(g, cs);
    if (!ctx) continue;
    CHECK(g.degree(ctx->z0) == 1);
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) == 1 && cs.level[static_cast<std::size_t>(v)] >= 2)
        CHECK(cs.level[static_cast<std::size_t>(v)] <=
              cs.level[static_cast<std::size_t>(ctx->z0)]);
  }
}

TEST_CASE("boundary and gamma") {
  Graph c6 = make_cycle(6);
  BoundaryGamma bare = boundary_and_gamma(c6, classify(c6));
  CHECK(bare.boundary.empty());
  CHECK(bare.gamma_verts == c6.vertices());

  Graph g = testutil::c6_pendant();
  BoundaryGamma bg = boundary_and_gamma(g, classify(g));
  CHECK(bg.boundary == testutil::mono(g, {"z"}));
  CHECK(bg.gamma.graph.n == 6);
  CHECK(bg.gamma.graph.edge_count() == 6);  // gamma is the bare C6

  Graph big = testutil::big_unicyclic();
  BoundaryGamma big_bg = boundary_and_gamma(big, classify(big));
  CHECK(big_bg.boundary ==
        testutil::mono(big, {"x1", "x2", "x3", "x4", "x5", "x6"}));
  // gamma = C6 plus the forest on the y/z vertices
  CHECK(big_bg.gamma.graph.n == 17);

  CHECK_THROWS_AS(boundary_and_gamma(make_path(4), classify(make_path(4))), ValidationError);
}

TEST_CASE("vertex budget is enforced at parse time") {
  std::string big;
  for (int i = 0; i < 64; ++i) big += "hub leaf" + std::to_string(i) + "\n";
  CHECK_THROWS_AS(parse_edge_list(big), ValidationError);
}
