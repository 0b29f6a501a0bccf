#include "bei/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bei/error.hpp"

namespace bei {

namespace {

void check_label(int n, int v, const char* what) {
  if (v < 1 || v > n) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " outside [1, " +
                     std::to_string(n) + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> labels) {
  for (int v : labels) {
    if (v < 1 || v > kMaxVertices) throw InputError("vertex label out of range");
    mask_ |= bit(v);
  }
}

VertexSet VertexSet::from_labels(std::span<const int> labels) {
  VertexSet s;
  for (int v : labels) {
    if (v < 1 || v > kMaxVertices) throw InputError("vertex label out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::range(int n) {
  if (n <= 0) return VertexSet{};
  if (n >= kMaxVertices) return VertexSet(~Mask{0});
  return VertexSet((Mask{1} << n) - 1);
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  for (Mask m = mask_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

// ---------------------------------------------------------------- Graph

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    check_label(n, a, "edge");
    check_label(n, b, "edge");
    if (a == b) throw InputError("loop at vertex " + std::to_string(a));
    adj[a - 1] |= bit(b);
    adj[b - 1] |= bit(a);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::vector<Mask> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxVertices) throw InputError("too many vertices");
  const Mask all = VertexSet::range(n).mask();
  for (int v = 1; v <= n; ++v) {
    Mask m = adjacency[v - 1];
    if (m & ~all) throw InputError("neighbour outside vertex range");
    if (m & bit(v)) throw InputError("loop at vertex " + std::to_string(v));
    for (Mask r = m; r; r &= r - 1) {
      int u = __builtin_ctzll(r) + 1;
      if (!(adjacency[u - 1] & bit(v))) throw InputError("adjacency is not symmetric");
    }
  }
  return Graph(std::move(adjacency));
}

Graph Graph::empty(int n) { return from_adjacency(std::vector<Mask>(static_cast<std::size_t>(n), 0)); }

Graph Graph::complete(int n) {
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  const Mask all = VertexSet::range(n).mask();
  for (int v = 1; v <= n; ++v) adj[v - 1] = all & ~bit(v);
  return Graph(std::move(adj));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return from_edge_list(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(1, n);
  return from_edge_list(n, e);
}

int Graph::size() const {
  int twice = 0;
  for (Mask m : adj_) twice += popcount(m);
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  return has_vertex(u) && has_vertex(v) && (adj_[u - 1] & bit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
  check_label(order(), v, "neighbors");
  return VertexSet(adj_[v - 1]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= order(); ++i) {
    for (Mask m = adj_[i - 1] & ~VertexSet::range(i).mask(); m; m &= m - 1) {
      out.emplace_back(i, __builtin_ctzll(m) + 1);
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const int n = order();
  return size() == n * (n - 1) / 2;
}

// ---------------------------------------------------------------- operations

Relabeled induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) throw InputError("induced_subgraph: vertex set not contained in V(G)");
  Relabeled r;
  r.old_of_new = w.labels();
  r.new_of_old.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t k = 0; k < r.old_of_new.size(); ++k) r.new_of_old[r.old_of_new[k]] = static_cast<int>(k) + 1;
  std::vector<Mask> adj(r.old_of_new.size(), 0);
  for (std::size_t k = 0; k < r.old_of_new.size(); ++k) {
    Mask nb = g.neighbor_mask(r.old_of_new[k]) & w.mask();
    for (; nb; nb &= nb - 1) adj[k] |= bit(r.new_of_old[__builtin_ctzll(nb) + 1]);
  }
  r.graph = Graph::from_adjacency(std::move(adj));
  return r;
}

Relabeled remove_vertex(const Graph& g, int v) {
  check_label(g.order(), v, "remove_vertex");
  return induced_subgraph(g, g.vertices() - VertexSet{v});
}

Relabeled remove_vertices(const Graph& g, VertexSet t) {
  if (!t.subset_of(g.vertices())) throw InputError("remove_vertices: set not contained in V(G)");
  return induced_subgraph(g, g.vertices() - t);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  if (shift + b.order() > kMaxVertices) throw InputError("disjoint_union: too many vertices");
  std::vector<Mask> adj;
  adj.reserve(static_cast<std::size_t>(shift + b.order()));
  for (int v = 1; v <= a.order(); ++v) adj.push_back(a.neighbor_mask(v));
  for (int v = 1; v <= b.order(); ++v) adj.push_back(b.neighbor_mask(v) << shift);
  return Graph::from_adjacency(std::move(adj));
}

Graph g_v_operation(const Graph& g, int v) {
  check_label(g.order(), v, "g_v_operation");
  std::vector<Mask> adj;
  for (int u = 1; u <= g.order(); ++u) adj.push_back(g.neighbor_mask(u));
  const Mask nb = g.neighbor_mask(v);
  for (Mask m = nb; m; m &= m - 1) {
    int u = __builtin_ctzll(m) + 1;
    adj[u - 1] |= nb & ~bit(u);
  }
  return Graph::from_adjacency(std::move(adj));
}

bool is_free_vertex(const Graph& g, int v) {
  check_label(g.order(), v, "is_free_vertex");
  const Mask nb = g.neighbor_mask(v);
  for (Mask m = nb; m; m &= m - 1) {
    int u = __builtin_ctzll(m) + 1;
    if (nb & ~(g.neighbor_mask(u) | bit(u))) return false;
  }
  return true;
}

std::vector<VertexSet> components_within(const Graph& g, Mask within) {
  std::vector<VertexSet> out;
  Mask left = within & g.vertices().mask();
  while (left) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(__builtin_ctzll(m) + 1);
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

int count_components_within(const Graph& g, Mask within) {
  return static_cast<int>(components_within(g, within).size());
}

bool is_cut_vertex(const Graph& g, int v) {
  check_label(g.order(), v, "is_cut_vertex");
  const Mask all = g.vertices().mask();
  return count_components_within(g, all & ~bit(v)) > count_components_within(g, all);
}

// ---------------------------------------------------------------- graph6

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, header.size()) == header) pos = header.size();

  auto sixbits = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6: unexpected end of input", at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: character outside 63..126", at);
    return c - 63;
  };

  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
  long n = 0;
  if (text[pos] != '~') {
    n = sixbits(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (int k = 0; k < 6; ++k) n = (n << 6) | sixbits(pos + 2 + k);
    pos += 8;
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | sixbits(pos + 1 + k);
    pos += 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds supported maximum", 0);

  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos < nbytes) throw ParseError("graph6: adjacency data too short", text.size());
  if (text.size() - pos > nbytes) throw ParseError("graph6: trailing characters", pos + nbytes);

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sixbits(pos + static_cast<std::size_t>(k / 6));
      if (chunk & (1 << (5 - k % 6))) {
        adj[i] |= bit(j + 1);
        adj[j] |= bit(i + 1);
      }
    }
  }
  if (nbits % 6 != 0) {
    const int last = sixbits(pos + nbytes - 1);
    const int pad = static_cast<int>(6 - nbits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", pos + nbytes - 1);
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------- isomorphism

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InputError("permute: permutation size mismatch");
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    for (Mask m = g.neighbor_mask(v); m; m &= m - 1) adj[perm[v - 1] - 1] |= bit(perm[__builtin_ctzll(m)]);
  }
  return Graph::from_adjacency(std::move(adj));
}

namespace {

// Exhaustive search for the permutation maximising the graph6-ordered
// adjacency code, restricted to orderings that list vertices by
// non-increasing degree. Prefixes are compared eagerly to prune.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 1);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    placed_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::vector<int> run() {
    best_.clear();
    cur_.clear();
    recurse(0);
    return best_perm_;
  }

 private:
  // Prefixes of equal length are compared against the current best, which
  // may change during the search.
  void recurse(int k) {
    if (k == n_) {
      if (best_.empty() || cur_ > best_) {
        best_ = cur_;
        best_perm_ = placed_;
      }
      return;
    }
    const int deg = g_.degree(order_[k]);
    for (int cand : order_) {
      if (g_.degree(cand) != deg || used_ & bit(cand)) continue;
      const std::size_t mark = cur_.size();
      for (int i = 0; i < k; ++i) cur_.push_back(g_.adjacent(placed_[i], cand) ? 1 : 0);
      const bool prune = !best_.empty() && std::lexicographical_compare(cur_.begin(), cur_.end(), best_.begin(),
                                                                         best_.begin() + static_cast<long>(cur_.size()));
      if (!prune) {
        placed_[k] = cand;
        used_ |= bit(cand);
        recurse(k + 1);
        used_ &= ~bit(cand);
      }
      cur_.resize(mark);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> placed_;  // placed_[k] = old label at new position k+1
  Mask used_ = 0;
  std::vector<char> cur_, best_;
  std::vector<int> best_perm_;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw CapError("canonical_form: supported for at most 12 vertices");
  if (n == 0) return g;
  CanonicalSearch search(g);
  const std::vector<int> placed = search.run();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[placed[k] - 1] = k + 1;
  return permute(g, perm);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<Graph> enumerate_impl(int max_n, bool connected_only) {
  if (max_n < 1 || max_n > 7) throw InputError("enumeration supports 1 <= max_n <= 7, got " + std::to_string(max_n));
  std::vector<Graph> out;
  std::vector<Graph> level{Graph::empty(1)};
  out.push_back(level.front());
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> seen;
    for (const Graph& base : level) {
      const Mask full = VertexSet::range(n - 1).mask();
      for (Mask nb = connected_only ? 1 : 0; nb <= full; ++nb) {
        std::vector<Mask> adj;
        for (int v = 1; v < n; ++v) adj.push_back(base.neighbor_mask(v) | ((nb & bit(v)) ? bit(n) : 0));
        adj.push_back(nb);
        Graph canon = canonical_form(Graph::from_adjacency(std::move(adj)));
        seen.emplace(to_graph6(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [code, graph] : seen) level.push_back(graph);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int max_n) { return enumerate_impl(max_n, true); }
std::vector<Graph> enumerate_graphs(int max_n) { return enumerate_impl(max_n, false); }

}  // namespace bei
