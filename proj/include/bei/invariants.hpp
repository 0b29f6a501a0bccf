#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"

namespace bei {

inline constexpr int kInducedMatchingMaxVertices = 16;
inline constexpr int kConnectivityMaxVertices = 20;

std::vector<VertexSet> components(const Graph& g);
int component_count(const Graph& g);
int isolated_vertex_count(const Graph& g);

// Diameter of a connected graph (0 for K1). Throws InputError if disconnected.
int diameter(const Graph& g);
// Sum of the diameters of the connected components.
int diameter_sum(const Graph& g);

// Isolated vertices plus the sum of component diameters.
int d_invariant(const Graph& g);

struct FreeVertexCounts {
  int f = 0;
  int iv = 0;
  VertexSet free;      // A_G
  VertexSet non_free;  // B_G
};

FreeVertexCounts free_vertex_counts(const Graph& g);

struct InducedMatching {
  int size = 0;
  std::vector<Edge> edges;  // lexicographically first maximum matching
};

// Exact maximum induced matching. CapError above kInducedMatchingMaxVertices.
InducedMatching induced_matching_number(const Graph& g);

// im(G) == 1. InputError on an edgeless graph, where the notion is undefined.
bool is_gap_free(const Graph& g);

struct Connectivity {
  int kappa = 0;
  // Set for complete graphs, where kappa := n - 1 by convention.
  bool complete_convention = false;
};

// Minimum number of vertices whose removal disconnects G. InputError if G is
// disconnected; complete graphs get n - 1 with the convention flag.
Connectivity vertex_connectivity(const Graph& g);

// Induced matching in the hypergraph whose edges are the generator supports.
struct HypergraphMatching {
  int bound = 0;                // sum of (|e| - 1)
  std::vector<VarMask> edges;   // witness
};

bool is_hypergraph_induced_matching(const MonomialIdealSF& ideal, std::span<const VarMask> edges);

// Maximum of sum(|e_i| - 1) over induced matchings, a lower bound for reg(A/I).
HypergraphMatching hypergraph_induced_matching_bound(const MonomialIdealSF& ideal);

struct InvariantReport {
  int n = 0;
  int c = 0;
  int i = 0;
  int diam_sum = 0;
  int d = 0;
  int f = 0;
  int iv = 0;
  int im = 0;
  bool complete = false;
  std::optional<bool> gap_free;  // absent for edgeless graphs
  std::optional<int> kappa;      // absent for disconnected graphs
  bool kappa_convention = false;
};

InvariantReport invariant_report(const Graph& g);

}  // namespace bei
