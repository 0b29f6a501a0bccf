#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bei {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(int label) { return Mask{1} << (label - 1); }
inline int popcount(Mask m) { return __builtin_popcountll(m); }

// Subset of the 1-based vertex labels of a graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Mask mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> labels);

  static VertexSet from_labels(std::span<const int> labels);
  static VertexSet range(int n);  // {1..n}

  Mask mask() const { return mask_; }
  bool contains(int v) const { return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)) != 0; }
  bool empty() const { return mask_ == 0; }
  int size() const { return popcount(mask_); }
  bool subset_of(const VertexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  int min() const { return mask_ ? __builtin_ctzll(mask_) + 1 : 0; }

  void insert(int v) { mask_ |= bit(v); }
  void erase(int v) { mask_ &= ~bit(v); }

  std::vector<int> labels() const;

  VertexSet operator|(const VertexSet& o) const { return VertexSet(mask_ | o.mask_); }
  VertexSet operator&(const VertexSet& o) const { return VertexSet(mask_ & o.mask_); }
  VertexSet operator-(const VertexSet& o) const { return VertexSet(mask_ & ~o.mask_); }
  bool operator==(const VertexSet&) const = default;

 private:
  Mask mask_ = 0;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on the labels 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on out-of-range labels or loops; duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);
  // adjacency[v-1] is the neighbour mask of v; must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<Mask> adjacency);

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  // number of edges
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool has_vertex(int v) const { return v >= 1 && v <= order(); }
  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;
  Mask neighbor_mask(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return popcount(adj_[v - 1]); }

  // Edges {i,j} with i < j in lexicographic order.
  std::vector<Edge> edges() const;
  bool is_complete() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<Mask> adj) : adj_(std::move(adj)) {}
  std::vector<Mask> adj_;
};

// Induced subgraph together with the relabeling it applied.
struct Relabeled {
  Graph graph;
  std::vector<int> old_of_new;  // old_of_new[k-1] = original label of new vertex k
  std::vector<int> new_of_old;  // new_of_old[v] = new label of v, 0 when dropped; index 0 unused

  int to_new(int old_label) const { return new_of_old.at(old_label); }
  int to_old(int new_label) const { return old_of_new.at(new_label - 1); }
};

Relabeled induced_subgraph(const Graph& g, VertexSet w);
Relabeled remove_vertex(const Graph& g, int v);
Relabeled remove_vertices(const Graph& g, VertexSet t);

// Disjoint union: b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Completes the neighbourhood of v into a clique.
Graph g_v_operation(const Graph& g, int v);

bool is_free_vertex(const Graph& g, int v);
bool is_cut_vertex(const Graph& g, int v);

// Connected components of the subgraph induced on `within` (labels stay those of g).
std::vector<VertexSet> components_within(const Graph& g, Mask within);
int count_components_within(const Graph& g, Mask within);

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Applies perm (perm[old-1] = new label) to g.
Graph permute(const Graph& g, std::span<const int> perm);

// Canonical representative of g's isomorphism class (exhaustive over
// degree-respecting permutations; intended for small graphs).
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class, ordered by vertex count then by
// canonical code. max_n must lie in [1, 7].
std::vector<Graph> enumerate_connected_graphs(int max_n);
// As above but including disconnected graphs.
std::vector<Graph> enumerate_graphs(int max_n);

}  // namespace bei
