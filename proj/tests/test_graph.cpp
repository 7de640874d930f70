#include <doctest.h>

#include <numeric>
#include <set>

#include "glsg/graph.hpp"
#include "glsg/invariants.hpp"
#include "test_util.hpp"

using namespace glsg;

namespace {

const CayleyTable kS1(2, {1, 1, 1, 2});

std::set<std::pair<int, int>> edge_set(const GlsgGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) edges.insert({u, v});
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("left-zero plus identity: isolated vertex and a triangle") {
  const GlsgGraph g = build_graph(kS1);
  REQUIRE(g.vertex_count() == 4);
  CHECK(g.vertices()[0] == Vertex{1, 1, 1});
  CHECK(g.vertices()[1] == Vertex{1, 2, 1});
  CHECK(g.vertices()[2] == Vertex{2, 1, 1});
  CHECK(g.vertices()[3] == Vertex{2, 2, 2});
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(naive_degrees(g) == std::vector<int>{0, 2, 2, 2});
  CHECK(connected_components(g) ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3}});
}

TEST_CASE("null of order 2: two disjoint edges") {
  const GlsgGraph g = build_graph(make_null(2));
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK(connected_components(g) == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("null of order 3: 4-regular on 9 vertices with 18 edges") {
  const GlsgGraph g = build_graph(make_null(3));
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 18);
  for (int d : naive_degrees(g)) CHECK(d == 4);
  CHECK(connected_components(g).size() == 1);
}

TEST_CASE("cyclic:3 is 6-regular") {
  for (int d : naive_degrees(build_graph(make_cyclic_group(3)))) CHECK(d == 6);
}

TEST_CASE("vertex count and handshake across the corpus") {
  for (const CayleyTable& t : test::family_corpus(8)) {
    const GlsgGraph g = build_graph(t);
    CHECK(g.vertex_count() == t.order() * t.order());
    const std::vector<int> deg = naive_degrees(g);
    CHECK(deg == g.degrees());
    CHECK(std::accumulate(deg.begin(), deg.end(), 0LL) == 2 * g.edge_count());
  }
}

TEST_CASE("formula degrees equal oracle degrees on families and small enumerations") {
  for (const CayleyTable& t : test::family_corpus(12)) {
    const GlsgGraph g = build_graph(t);
    CHECK(naive_degrees(g) == compute_invariants(t).deg);
  }
}

TEST_CASE("neighbor classes partition each neighborhood") {
  for (const CayleyTable& t :
       {kS1, make_null(3), make_rectangular_band(2, 2), make_cyclic_group(4),
        make_brandt(make_cyclic_group(2), 2)}) {
    const int n = t.order();
    const GlsgGraph g = build_graph(t);
    const InvariantSet inv = compute_invariants(t);
    const auto& verts = g.vertices();
    for (int u = 0; u < g.vertex_count(); ++u) {
      int share_i = 0, share_j = 0, share_k = 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (verts[u].i == verts[v].i) ++share_i;
        if (verts[u].j == verts[v].j) ++share_j;
        if (verts[u].k == verts[v].k) ++share_k;
      }
      const int i = verts[u].i;
      const int j = verts[u].j;
      const int k = verts[u].k;
      CHECK(share_i == (n - 1) - inv.nr_at(i, j));
      CHECK(share_j == (n - 1) - inv.nc_at(i, j));
      CHECK(share_k == inv.ns[k - 1] - 1 - inv.nr_at(i, j) - inv.nc_at(i, j));
    }
  }
}

TEST_CASE("verify_null_tensor") {
  for (int n : {1, 2, 3, 6}) CHECK(verify_null_tensor(make_null(n)));
  CHECK_THROWS_AS(verify_null_tensor(make_cyclic_group(2)), NotNullError);
  CHECK_THROWS_AS(verify_null_tensor(kS1), NotNullError);
}

TEST_CASE("null graphs: connectivity by order") {
  CHECK(connected_components(build_graph(make_null(2))).size() == 2);
  for (int n = 3; n <= 8; ++n) {
    CHECK(connected_components(build_graph(make_null(n))).size() == 1);
  }
}

TEST_CASE("edge-list export") {
  CHECK(export_graph(build_graph(make_null(2)), GraphFormat::edge_list) == "1 4\n2 3\n");
  CHECK(export_graph(build_graph(CayleyTable(1, {1})), GraphFormat::edge_list) == "");
  CHECK(export_graph(build_graph(kS1), GraphFormat::edge_list) == "2 3\n2 4\n3 4\n");
}

TEST_CASE("dot export") {
  CHECK(export_graph(build_graph(make_null(2)), GraphFormat::dot) ==
        "graph glsg {\n"
        "  v1 [label=\"(1,1,2)\"];\n"
        "  v2 [label=\"(1,2,2)\"];\n"
        "  v3 [label=\"(2,1,2)\"];\n"
        "  v4 [label=\"(2,2,2)\"];\n"
        "  v1 -- v4;\n"
        "  v2 -- v3;\n"
        "}\n");
}

TEST_CASE("graph format names") {
  CHECK(parse_graph_format("edge-list") == GraphFormat::edge_list);
  CHECK(parse_graph_format("dot") == GraphFormat::dot);
  CHECK_THROWS_AS(parse_graph_format("xml"), UnknownFormatError);
}

TEST_CASE("vertex cap refuses oversized graphs unless overridden") {
  const CayleyTable big = make_null(65);  // 4225 vertices
  CHECK_THROWS_AS(build_graph(big), GraphTooLargeError);
  const GlsgGraph g = build_graph(big, true);
  CHECK(g.vertex_count() == 65 * 65);
  CHECK(verify_null_tensor(big, true));
}

TEST_CASE("band graphs have edges across L-classes") {
  // the blocks suggested by the L-class partition are not disconnected:
  // already for the 2x1 band both edges join different L-classes
  const int p = 2, q = 1;
  const CayleyTable t = make_rectangular_band(p, q);
  const GlsgGraph g = build_graph(t);
  std::vector<int> block(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    block[u] = (g.vertices()[u].i - 1) / q;  // L-class of the first coordinate
  }
  CHECK(g.edge_count() == 2);
  CHECK(count_cross_block_edges(g, block) == 2);

  // larger bands keep showing cross-block edges
  for (auto [bp, bq] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const CayleyTable bt = make_rectangular_band(bp, bq);
    const GlsgGraph bg = build_graph(bt);
    std::vector<int> bb(bg.vertex_count());
    for (int u = 0; u < bg.vertex_count(); ++u) bb[u] = (bg.vertices()[u].i - 1) / bq;
    CHECK(count_cross_block_edges(bg, bb) > 0);
  }
}
