#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bei/error.hpp"
#include "bei/graph.hpp"
#include "oracles.hpp"

using namespace bei;

TEST_SUITE("graph_core") {
  TEST_CASE("edge list construction") {
    const Graph p3 = Graph::from_edge_list(3, {{1, 2}, {2, 3}});
    CHECK(p3 == Graph::path(3));
    CHECK(Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}}) == Graph::path(4));
    CHECK(Graph::from_edge_list(3, {{1, 2}, {2, 3}, {1, 3}}) == Graph::complete(3));
    CHECK(Graph::from_edge_list(3, {{1, 2}, {2, 1}, {2, 3}}).size() == 2);
    CHECK(Graph::empty(0).order() == 0);
    CHECK(Graph::empty(1).size() == 0);
  }

  TEST_CASE("edge list rejects bad labels and loops") {
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{2, 2}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(-1, std::initializer_list<Edge>{}), InputError);
  }

  TEST_CASE("graph6 decoding") {
    CHECK(from_graph6("Bw") == Graph::complete(3));
    CHECK(from_graph6("A_") == Graph::complete(2));
    CHECK(from_graph6("@") == Graph::empty(1));
    CHECK(from_graph6("?") == Graph::empty(0));
    CHECK_THROWS_AS(from_graph6("???"), ParseError);
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("B "), ParseError);
    CHECK_THROWS_AS(from_graph6("C"), ParseError);
  }

  TEST_CASE("graph6 parse error reports the offending byte") {
    try {
      from_graph6("Bw\x7f");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
  }

  TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = static_cast<int>(rng() % 70 == 0 ? 64 : rng() % 20);
      std::vector<Edge> edges;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (rng() % 3 == 0) edges.emplace_back(a, b);
      const Graph g = Graph::from_edge_list(n, edges);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
  }

  TEST_CASE("induced subgraph relabels contiguously") {
    const auto r = induced_subgraph(Graph::path(4), VertexSet{1, 2, 3});
    CHECK(r.graph == Graph::path(3));
    CHECK(induced_subgraph(Graph::complete(3), VertexSet{1, 3}).graph == Graph::complete(2));
    const auto two = induced_subgraph(Graph::path(4), VertexSet{1, 3});
    CHECK(two.graph == Graph::empty(2));
    CHECK(two.to_old(2) == 3);
    CHECK(two.to_new(3) == 2);
    CHECK(two.to_new(2) == 0);
    const auto rm = remove_vertex(Graph::path(4), 2);
    CHECK(rm.graph == Graph::from_edge_list(3, {{2, 3}}));
  }

  TEST_CASE("G_v operation") {
    CHECK(g_v_operation(Graph::path(3), 2) == Graph::complete(3));
    CHECK(g_v_operation(Graph::complete(3), 1) == Graph::complete(3));
    CHECK(g_v_operation(Graph::path(4), 2) == Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}));
    CHECK_THROWS_AS(g_v_operation(Graph::path(3), 4), InputError);
  }

  TEST_CASE("free and cut vertices") {
    CHECK(is_free_vertex(Graph::path(4), 1));
    CHECK_FALSE(is_free_vertex(Graph::path(4), 2));
    CHECK(is_free_vertex(Graph::empty(1), 1));
    CHECK(is_cut_vertex(Graph::path(3), 2));
    CHECK_FALSE(is_cut_vertex(Graph::complete(3), 1));
    CHECK_FALSE(is_cut_vertex(disjoint_union(Graph::empty(1), Graph::complete(2)), 1));
  }

  TEST_CASE("G_v properties over all small graphs") {
    for (const Graph& g : enumerate_graphs(6)) {
      CHECK(isomorphic(induced_subgraph(g, g.vertices()).graph, g));
      for (int v = 1; v <= g.order(); ++v) {
        const Graph gv = g_v_operation(g, v);
        CHECK(g_v_operation(gv, v) == gv);
        CHECK(is_free_vertex(gv, v));
      }
    }
  }

  TEST_CASE("connected graph counts") {
    const int expected[] = {1, 1, 2, 6, 21, 112, 853};
    const auto all = enumerate_connected_graphs(7);
    for (int n = 1; n <= 7; ++n) {
      const auto count = std::count_if(all.begin(), all.end(), [&](const Graph& g) { return g.order() == n; });
      CHECK(count == expected[n - 1]);
    }
    CHECK(enumerate_connected_graphs(3).size() == 4);
    CHECK(enumerate_connected_graphs(4).size() == 10);
    CHECK(enumerate_connected_graphs(5).size() == 31);
    CHECK_THROWS_AS(enumerate_connected_graphs(8), InputError);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), InputError);
  }

  TEST_CASE("all graphs count and no isomorphic pairs") {
    const auto all = enumerate_graphs(5);
    CHECK(all.size() == 1 + 2 + 4 + 11 + 34);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) CHECK_FALSE(oracle::isomorphic_brute(all[a], all[b]));
  }

  TEST_CASE("canonical form agrees with brute isomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      std::vector<Edge> ea, eb;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          if (rng() % 2) ea.emplace_back(a, b);
          if (rng() % 2) eb.emplace_back(a, b);
        }
      const Graph ga = Graph::from_edge_list(n, ea);
      const Graph gb = Graph::from_edge_list(n, eb);
      CHECK(isomorphic(ga, gb) == oracle::isomorphic_brute(ga, gb));
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(permute(ga, perm)) == canonical_form(ga));
    }
  }

  TEST_CASE("disjoint union shifts labels") {
    const Graph u = disjoint_union(Graph::complete(2), Graph::path(3));
    CHECK(u.order() == 5);
    CHECK(u.adjacent(3, 4));
    CHECK(u.adjacent(4, 5));
    CHECK_FALSE(u.adjacent(2, 3));
  }
}
