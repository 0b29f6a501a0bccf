#include "bei/invariants.hpp"

#include <algorithm>

#include "bei/error.hpp"

namespace bei {

namespace {

// Eccentricity of `from` inside the component `comp`.
int eccentricity(const Graph& g, int from, Mask comp) {
  Mask seen = bit(from), frontier = bit(from);
  int dist = 0;
  while (true) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(__builtin_ctzll(m) + 1);
    next &= comp & ~seen;
    if (!next) return dist;
    seen |= next;
    frontier = next;
    ++dist;
  }
}

int component_diameter(const Graph& g, Mask comp) {
  int best = 0;
  for (Mask m = comp; m; m &= m - 1) best = std::max(best, eccentricity(g, __builtin_ctzll(m) + 1, comp));
  return best;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices().mask()); }

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

int isolated_vertex_count(const Graph& g) {
  int count = 0;
  for (int v = 1; v <= g.order(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

int diameter(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() > 1) throw InputError("diameter: graph is disconnected");
  return comps.empty() ? 0 : component_diameter(g, comps.front().mask());
}

int diameter_sum(const Graph& g) {
  int sum = 0;
  for (const auto& c : components(g)) sum += component_diameter(g, c.mask());
  return sum;
}

int d_invariant(const Graph& g) { return isolated_vertex_count(g) + diameter_sum(g); }

FreeVertexCounts free_vertex_counts(const Graph& g) {
  FreeVertexCounts out;
  for (int v = 1; v <= g.order(); ++v) {
    if (is_free_vertex(g, v)) {
      out.free.insert(v);
    } else {
      out.non_free.insert(v);
    }
  }
  out.f = out.free.size();
  out.iv = out.non_free.size();
  return out;
}

InducedMatching induced_matching_number(const Graph& g) {
  if (g.order() > kInducedMatchingMaxVertices) {
    throw CapError("induced_matching_number: " + std::to_string(g.order()) + " vertices exceeds cap " +
                   std::to_string(kInducedMatchingMaxVertices));
  }
  const auto edges = g.edges();
  std::vector<Mask> closed(edges.size());  // closed neighbourhood of each edge
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    closed[k] = g.neighbor_mask(a) | g.neighbor_mask(b) | bit(a) | bit(b);
  }
  std::vector<std::size_t> chosen, best;
  auto rec = [&](auto&& self, std::size_t from, Mask blocked) -> void {
    if (chosen.size() > best.size()) best = chosen;
    std::size_t remaining = 0;
    for (std::size_t k = from; k < edges.size(); ++k) {
      if (!(blocked & (bit(edges[k].first) | bit(edges[k].second)))) ++remaining;
    }
    if (chosen.size() + remaining <= best.size()) return;
    for (std::size_t k = from; k < edges.size(); ++k) {
      const Mask ends = bit(edges[k].first) | bit(edges[k].second);
      if (blocked & ends) continue;
      chosen.push_back(k);
      self(self, k + 1, blocked | closed[k]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  InducedMatching out;
  out.size = static_cast<int>(best.size());
  for (std::size_t k : best) out.edges.push_back(edges[k]);
  return out;
}

bool is_gap_free(const Graph& g) {
  if (g.size() == 0) throw InputError("is_gap_free: graph has no edges");
  return induced_matching_number(g).size == 1;
}

Connectivity vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0 || component_count(g) != 1) throw InputError("vertex_connectivity: graph must be connected and non-empty");
  if (g.is_complete()) return {n - 1, true};
  if (n > kConnectivityMaxVertices) {
    throw CapError("vertex_connectivity: " + std::to_string(n) + " vertices exceeds cap " +
                   std::to_string(kConnectivityMaxVertices));
  }
  const Mask all = g.vertices().mask();
  for (int k = 1; k < n - 1; ++k) {
    // Subsets of size k in increasing mask order (Gosper's hack).
    Mask t = (Mask{1} << k) - 1;
    while (t <= all) {
      if (count_components_within(g, all & ~t) > 1) return {k, false};
      const Mask c = t & (~t + 1);
      const Mask r = t + c;
      t = (((r ^ t) >> 2) / c) | r;
    }
  }
  throw InternalError("vertex_connectivity: non-complete connected graph without a separator");
}

bool is_hypergraph_induced_matching(const MonomialIdealSF& ideal, std::span<const VarMask> edges) {
  VarMask uni = 0;
  for (VarMask e : edges) {
    if (uni & e) return false;
    if (std::find(ideal.generators().begin(), ideal.generators().end(), e) == ideal.generators().end()) return false;
    uni |= e;
  }
  for (VarMask g : ideal.generators()) {
    if ((g & ~uni) == 0 && std::find(edges.begin(), edges.end(), g) == edges.end()) return false;
  }
  return true;
}

HypergraphMatching hypergraph_induced_matching_bound(const MonomialIdealSF& ideal) {
  // Re-validate minimality: hyperedges must be inclusion-incomparable.
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (a != b && (gens[a] & ~gens[b]) == 0) throw InputError("hypergraph: generating set is not minimal");
    }
  }
  const VarMask all = ideal.n_vars() >= 64 ? ~VarMask{0} : (VarMask{1} << ideal.n_vars()) - 1;
  std::vector<VarMask> chosen, best;
  int best_value = 0;
  auto rec = [&](auto&& self, std::size_t from, VarMask uni, int value) -> void {
    if (value > best_value) {
      best_value = value;
      best = chosen;
    }
    // Each further edge e consumes |e| fresh variables and adds |e| - 1.
    if (value + popcount(all & ~uni) <= best_value) return;
    for (std::size_t k = from; k < gens.size(); ++k) {
      const VarMask e = gens[k];
      if (uni & e) continue;
      const VarMask grown = uni | e;
      // A non-chosen generator inside the union can never leave it again.
      bool spoiled = false;
      for (VarMask h : gens) {
        if (h != e && (h & ~grown) == 0 && (h & ~uni) != 0) {
          spoiled = true;
          break;
        }
      }
      if (spoiled) continue;
      chosen.push_back(e);
      self(self, k + 1, grown, value + popcount(e) - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  return {best_value, best};
}

InvariantReport invariant_report(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.c = component_count(g);
  r.i = isolated_vertex_count(g);
  r.diam_sum = diameter_sum(g);
  r.d = r.i + r.diam_sum;
  const auto fv = free_vertex_counts(g);
  r.f = fv.f;
  r.iv = fv.iv;
  r.im = induced_matching_number(g).size;
  r.complete = g.is_complete();
  if (g.size() > 0) r.gap_free = r.im == 1;
  if (r.c == 1) {
    const auto k = vertex_connectivity(g);
    r.kappa = k.kappa;
    r.kappa_convention = k.complete_convention;
  }
  return r;
}

}  // namespace bei
