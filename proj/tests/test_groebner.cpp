#include <doctest.h>

#include "bei/error.hpp"
#include "bei/groebner.hpp"

using namespace bei;

namespace {

VarMask xy(int i, int j, int n) { return x_var(i) | y_var(j, n); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("admissible path examples") {
    CHECK(admissible_paths(Graph::path(3), 1, 3).empty());
    const auto p12 = admissible_paths(Graph::path(3), 1, 2);
    REQUIRE(p12.size() == 1);
    CHECK(p12[0].vertices == std::vector<int>{1, 2});
    CHECK(p12[0].monomial_u == 0);
    const auto k3 = admissible_paths(Graph::complete(3), 1, 2);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].vertices == std::vector<int>{1, 2});
    CHECK_THROWS_AS(admissible_paths(Graph::path(3), 2, 2), InputError);
    CHECK_THROWS_AS(admissible_paths(Graph::path(3), 3, 1), InputError);
  }

  TEST_CASE("admissible path with outside interior") {
    // 2 - 1 - 3: interior 1 lies below 2
    const Graph g = Graph::from_edge_list(3, {{1, 2}, {1, 3}});
    const auto paths = admissible_paths(g, 2, 3);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].vertices == std::vector<int>{2, 1, 3});
    CHECK(paths[0].monomial_u == y_var(1, 3));
  }

  TEST_CASE("reduced basis examples") {
    const auto p3 = reduced_groebner_basis(Graph::path(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == Binomial{xy(1, 2, 3), x_var(2) | y_var(1, 3)});
    CHECK(p3[1] == Binomial{xy(2, 3, 3), x_var(3) | y_var(2, 3)});
    CHECK(reduced_groebner_basis(Graph::complete(3)).size() == 3);
    CHECK(reduced_groebner_basis(Graph::path(4)) == buchberger_reduced_basis(Graph::path(4)));
    CHECK_THROWS_AS(reduced_groebner_basis(Graph::path(25)), CapError);
  }

  TEST_CASE("initial ideal examples") {
    CHECK(initial_ideal(Graph::path(3)).generators() == std::vector<VarMask>{xy(1, 2, 3), xy(2, 3, 3)});
    CHECK(initial_ideal(Graph::complete(3)).generators() == std::vector<VarMask>{xy(1, 2, 3), xy(1, 3, 3), xy(2, 3, 3)});
    CHECK(initial_ideal(Graph::empty(1)).is_zero());
    CHECK(buchberger_oracle(Graph::complete(2)).generators() == std::vector<VarMask>{xy(1, 2, 2)});
    CHECK(buchberger_oracle(Graph::path(3)) == initial_ideal(Graph::path(3)));
    CHECK_THROWS_AS(buchberger_oracle(Graph::path(9)), CapError);
  }

  TEST_CASE("lex order") {
    const int n = 3;
    CHECK(lex_greater(x_var(1), x_var(2) | x_var(3)));
    CHECK(lex_greater(x_var(3), y_var(1, n)));
    CHECK(lex_greater(x_var(1) | y_var(3, n), x_var(2) | y_var(1, n)));
    CHECK_FALSE(lex_greater(y_var(2, n), y_var(1, n)));
  }

  TEST_CASE("leading terms have the admissible-path shape") {
    for (const Graph& g : enumerate_connected_graphs(6)) {
      const int n = g.order();
      for (const Binomial& b : reduced_groebner_basis(g)) {
        CHECK(lex_greater(b.plus_term, b.minus_term));
        CHECK(popcount(b.plus_term) == popcount(b.minus_term));
        // x_i y_j with i < j divides the leading term and x_j y_i the trailing one
        bool found = false;
        for (int i = 1; i <= n && !found; ++i)
          for (int j = i + 1; j <= n && !found; ++j) {
            const VarMask lead = xy(i, j, n), trail = xy(j, i, n);
            if ((b.plus_term & lead) == lead && (b.minus_term & trail) == trail &&
                (b.plus_term & ~lead) == (b.minus_term & ~trail)) {
              found = true;
            }
          }
        CHECK(found);
      }
    }
  }

  TEST_CASE("basis equals Buchberger on every connected graph up to 5 vertices") {
    for (const Graph& g : enumerate_connected_graphs(5)) {
      CHECK(reduced_groebner_basis(g) == buchberger_reduced_basis(g));
    }
  }

  TEST_CASE("initial ideals of induced initial segments embed") {
    for (int n = 2; n <= 7; ++n) {
      for (const Graph& g : {Graph::path(n), Graph::complete(n), Graph::cycle(std::max(n, 3))}) {
        const int gn = g.order();
        for (int k = 1; k < gn; ++k) {
          const Graph h = induced_subgraph(g, VertexSet::range(k)).graph;
          const auto big = initial_ideal(g);
          const auto small = initial_ideal(h);
          for (VarMask gen : small.generators()) {
            VarMask lifted = 0;
            for (int v = 1; v <= k; ++v) {
              if (gen & x_var(v)) lifted |= x_var(v);
              if (gen & y_var(v, k)) lifted |= y_var(v, gn);
            }
            CHECK(big.contains_monomial(lifted));
          }
        }
      }
    }
  }

  TEST_CASE("monomial names") {
    CHECK(monomial_name(xy(1, 2, 3), 3) == "x1*y2");
    CHECK(monomial_name(0, 3) == "1");
  }

  TEST_CASE("monomial ideal construction") {
    CHECK_THROWS_AS(MonomialIdealSF::from_minimal(3, {0b1, 0b11}), InputError);
    const auto m = MonomialIdealSF::minimalized(3, {0b11, 0b1, 0b110, 0b1});
    CHECK(m.generators() == std::vector<VarMask>{0b1, 0b110});
    CHECK(m.generator_indices() == std::vector<std::vector<int>>{{1}, {2, 3}});
    CHECK(m.contains_monomial(0b111));
    CHECK_FALSE(m.contains_monomial(0b100));
  }
}
