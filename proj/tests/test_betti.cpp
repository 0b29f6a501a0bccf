#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bei/betti.hpp"
#include "bei/constructions.hpp"
#include "bei/decomposition.hpp"
#include "bei/error.hpp"
#include "bei/groebner.hpp"
#include "bei/invariants.hpp"
#include "oracles.hpp"

using namespace bei;

namespace {

std::vector<VarMask> sorted(std::vector<VarMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

DepthReg of(const Graph& g) { return oracle_depth_reg(g); }

// Chordal and diamond-free.
bool is_block_graph(const Graph& g) {
  const int n = g.order();
  for (Mask w = 0; w < (Mask{1} << n); ++w) {
    const int k = popcount(w);
    if (k < 4) continue;
    const Graph h = induced_subgraph(g, VertexSet(w)).graph;
    bool cycle = h.size() == k && component_count(h) == 1;
    for (int v = 1; v <= k && cycle; ++v) cycle = h.degree(v) == 2;
    if (cycle || (k == 4 && h.size() == 5)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("betti") {
  TEST_CASE("lcm lattice examples") {
    const auto p3 = initial_ideal(Graph::path(3));
    const auto lat = sorted(lcm_lattice(p3));
    CHECK(lat == sorted({p3.generators()[0], p3.generators()[1], p3.generators()[0] | p3.generators()[1]}));
    CHECK(lcm_lattice(MonomialIdealSF::from_minimal(4, {0b11})).size() == 1);
    const auto k3 = initial_ideal(Graph::complete(3));
    const auto& g = k3.generators();
    std::vector<VarMask> joins;
    for (unsigned s = 1; s < 8; ++s) {
      VarMask u = 0;
      for (int b = 0; b < 3; ++b)
        if (s >> b & 1) u |= g[b];
      joins.push_back(u);
    }
    std::sort(joins.begin(), joins.end());
    joins.erase(std::unique(joins.begin(), joins.end()), joins.end());
    CHECK(sorted(lcm_lattice(k3)) == joins);
    CHECK_THROWS_AS(lcm_lattice(initial_ideal(Graph::complete(7)), 10), CapError);
  }

  TEST_CASE("betti table examples") {
    const auto p3 = betti_table(initial_ideal(Graph::path(3)));
    CHECK(p3.pd == 2);
    CHECK(p3.depth == 4);
    CHECK(p3.reg == 2);
    CHECK(p3.beta(0, 0) == 1);
    CHECK(p3.beta(1, 2) == 2);
    CHECK(p3.beta(2, 4) == 1);
    const auto zero = betti_table(MonomialIdealSF::from_minimal(5, {}));
    CHECK(zero.pd == 0);
    CHECK(zero.depth == 5);
    CHECK(zero.reg == 0);
    const auto p4 = betti_table(initial_ideal(whisker(Graph::complete(2)).graph));
    CHECK(p4.vars == 8);
    CHECK(p4.depth == 5);
    CHECK(p4.reg == 3);
    CHECK_THROWS_AS(betti_table(initial_ideal(Graph::path(11))), CapError);
  }

  TEST_CASE("oracle depth and regularity examples") {
    CHECK(of(Graph::path(4)) == DepthReg{5, 3});
    for (int n = 1; n <= 6; ++n) CHECK(of(Graph::complete(n)) == DepthReg{n + 1, n == 1 ? 0 : 1});
    CHECK(of(disjoint_union(Graph::empty(1), Graph::complete(2))) == DepthReg{5, 1});
  }

  TEST_CASE("restriction and Koszul routes agree") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
      const auto ideal = initial_ideal(g);
      for (VarMask sigma : lcm_lattice(ideal)) {
        const auto a = multigraded_betti_row_via_restriction(ideal, sigma);
        const auto b = multigraded_betti_row_via_koszul(ideal, sigma);
        CHECK(a == b);
        CHECK(multigraded_betti_row(ideal, sigma) == a);
      }
    }
  }

  TEST_CASE("Hochster over all subsets matches the lattice computation") {
    for (const Graph& g : enumerate_graphs(5)) {
      const auto ideal = initial_ideal(g);
      const auto t = betti_table(ideal);
      const auto brute = oracle::hochster_all_subsets(ideal);
      CHECK(t.depth == brute.depth);
      CHECK(t.reg == brute.reg);
      CHECK(t.pd == brute.pd);
    }
  }

  TEST_CASE("depth agrees with the link criterion") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
      CHECK(oracle_depth_reg(g).depth == oracle::depth_via_links(initial_ideal(g)));
    }
    for (const Graph& g : enumerate_connected_graphs(3)) {
      const Graph w = whisker(g).graph;
      CHECK(oracle_depth_reg(w).depth == oracle::depth_via_links(initial_ideal(w)));
    }
  }

  TEST_CASE("homology of small complexes") {
    // hollow triangle: H~_1 = 1
    const auto tri = MonomialIdealSF::from_minimal(3, {0b111});
    CHECK(SimplicialComplexSF(tri).reduced_homology() == std::vector<std::int64_t>{0, 0, 1});
    // two points
    const auto pts = MonomialIdealSF::from_minimal(2, {0b11});
    CHECK(SimplicialComplexSF(pts).reduced_homology() == std::vector<std::int64_t>{0, 1});
    const auto h = oracle::homology_brute(tri.generators(), 0b111, 3);
    CHECK(h == std::vector<int>{0, 0, 1, 0});
  }

  TEST_CASE("Krull dimension and depth bound") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
      const auto ideal = initial_ideal(g);
      const int dim = krull_dimension(ideal);
      CHECK(dim == oracle::krull_brute(ideal));
      CHECK(dim == dimension(g, 2).dim);
      CHECK(oracle_depth_reg(g).depth <= dim);
    }
  }

  TEST_CASE("additivity over disjoint unions") {
    const auto small = enumerate_graphs(3);
    for (const Graph& a : small)
      for (const Graph& b : small) {
        const auto da = of(a), db = of(b), du = of(disjoint_union(a, b));
        CHECK(du.depth == da.depth + db.depth);
        CHECK(du.reg == da.reg + db.reg);
      }
  }

  TEST_CASE("relabeling invariance on reversed paths") {
    const Graph p4 = Graph::path(4);
    const std::vector<int> rev{4, 3, 2, 1};
    CHECK(oracle_betti_table(permute(p4, rev)).entries == oracle_betti_table(p4).entries);
    for (const Graph& g : enumerate_connected_graphs(4)) {
      std::vector<int> perm(g.order());
      std::iota(perm.begin(), perm.end(), 1);
      const auto base = oracle_depth_reg(g);
      do {
        CHECK(oracle_depth_reg(permute(g, perm)) == base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  TEST_CASE("block graphs have depth n + c") {
    for (const Graph& g : enumerate_graphs(6)) {
      if (!is_block_graph(g)) continue;
      CHECK(oracle_depth_reg(g).depth == g.order() + component_count(g));
    }
  }
}
