#include "bei/constructions.hpp"

#include <algorithm>

#include "bei/error.hpp"
#include "bei/invariants.hpp"

namespace bei {

int GenCoronaSpec::order() const {
  int total = base.order();
  for (const auto& h : attachments) total += h.order();
  return total;
}

int GenCoronaSpec::attachment_offset(std::size_t k) const {
  int off = base.order() + 1;
  for (std::size_t t = 0; t < k; ++t) off += attachments.at(t).order();
  return off;
}

void validate(const GenCoronaSpec& spec) {
  if (spec.attach.size() != spec.attachments.size()) {
    throw InputError("corona spec: " + std::to_string(spec.attach.size()) + " attachment vertices but " +
                     std::to_string(spec.attachments.size()) + " attached graphs");
  }
  Mask seen = 0;
  for (int v : spec.attach) {
    if (!spec.base.has_vertex(v)) throw InputError("corona spec: attachment vertex " + std::to_string(v) + " not in base");
    if (seen & bit(v)) throw InputError("corona spec: attachment vertex " + std::to_string(v) + " repeated");
    seen |= bit(v);
  }
  if (spec.order() > kMaxVertices) throw InputError("corona spec: composite too large");
}

Graph composite(const GenCoronaSpec& spec) {
  validate(spec);
  std::vector<Mask> adj(static_cast<std::size_t>(spec.order()), 0);
  for (int v = 1; v <= spec.base.order(); ++v) adj[v - 1] = spec.base.neighbor_mask(v);
  int off = spec.base.order();
  for (std::size_t k = 0; k < spec.attach.size(); ++k) {
    const Graph& h = spec.attachments[k];
    const int apex = spec.attach[k];
    for (int u = 1; u <= h.order(); ++u) {
      adj[off + u - 1] = (h.neighbor_mask(u) << off) | bit(apex);
      adj[apex - 1] |= bit(off + u);
    }
    off += h.order();
  }
  return Graph::from_adjacency(std::move(adj));
}

Construction whisker(const Graph& g) {
  if (g.order() == 0) throw InputError("whisker: empty graph");
  return whisker_on_set(g, g.vertices());
}

Construction whisker_on_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw InputError("whisker_on_set: S is not contained in V(G)");
  GenCoronaSpec spec;
  spec.base = g;
  spec.attach = s.labels();
  spec.attachments.assign(spec.attach.size(), Graph::empty(1));
  Graph graph = composite(spec);
  return {std::move(spec), std::move(graph)};
}

Construction generalized_corona_spec(const Graph& g, std::span<const int> attach, std::vector<Graph> attachments) {
  GenCoronaSpec spec{g, std::vector<int>(attach.begin(), attach.end()), std::move(attachments)};
  Graph graph = composite(spec);
  return {std::move(spec), std::move(graph)};
}

Graph generalized_corona(const Graph& g, std::span<const int> attach, std::span<const Graph> attachments) {
  return generalized_corona_spec(g, attach, std::vector<Graph>(attachments.begin(), attachments.end())).graph;
}

Graph generalized_corona(const Graph& g, VertexSet s, std::span<const Graph> attachments) {
  if (!s.subset_of(g.vertices())) throw InputError("generalized_corona: S is not contained in V(G)");
  const auto labels = s.labels();
  return generalized_corona(g, std::span<const int>(labels), attachments);
}

Graph cone(const Graph& h) {
  const std::vector<int> apex{1};
  const std::vector<Graph> hs{h};
  return generalized_corona(Graph::empty(1), std::span<const int>(apex), std::span<const Graph>(hs));
}

ClassMembership class_membership(const GenCoronaSpec& spec, std::optional<std::span<const int>> depth_of_H, int m) {
  validate(spec);
  if (m < 2) throw InputError("class_membership: m must be at least 2");
  if (depth_of_H && depth_of_H->size() != spec.attachments.size()) {
    throw InputError("class_membership: expected " + std::to_string(spec.attachments.size()) + " depths, got " +
                     std::to_string(depth_of_H->size()));
  }
  ClassMembership out;
  const VertexSet outside = free_vertex_counts(spec.base).non_free - spec.attach_set();
  out.in_G2 = outside.empty();
  if (!out.in_G2) out.witness = outside.min();
  out.in_G1 = out.in_G2 && std::all_of(spec.attachments.begin(), spec.attachments.end(),
                                       [](const Graph& h) { return h.order() == 1; });
  if (depth_of_H) {
    bool all_max = true;
    for (std::size_t k = 0; k < spec.attachments.size(); ++k) {
      all_max = all_max && (*depth_of_H)[k] == m + spec.attachments[k].order() - 1;
    }
    out.in_Gprime = out.in_G2 && all_max;
  }
  return out;
}

VertexOpTriple vertex_op_triple(const GenCoronaSpec& spec, int v) {
  validate(spec);
  const auto pos = std::find(spec.attach.begin(), spec.attach.end(), v);
  if (pos == spec.attach.end()) throw InputError("vertex_op_triple: vertex " + std::to_string(v) + " is not in S");
  if (!class_membership(spec, std::nullopt, 2).in_G2) throw InputError("vertex_op_triple: spec is not in class G2");
  const auto k = static_cast<std::size_t>(pos - spec.attach.begin());

  std::vector<int> other_attach;
  std::vector<Graph> other_graphs;
  for (std::size_t t = 0; t < spec.attach.size(); ++t) {
    if (t == k) continue;
    other_attach.push_back(spec.attach[t]);
    other_graphs.push_back(spec.attachments[t]);
  }

  VertexOpTriple out;
  out.removed_attachment = spec.attachments[k];

  // D': base G - v; base labels shift down past v.
  const Relabeled g_minus = remove_vertex(spec.base, v);
  out.rest.base = g_minus.graph;
  for (int a : other_attach) out.rest.attach.push_back(g_minus.to_new(a));
  out.rest.attachments = other_graphs;

  // D_v restricted to V(G) and V(H_k) is the new base; base labels are unchanged.
  const Graph d = composite(spec);
  const Graph dv = g_v_operation(d, v);
  VertexSet keep = spec.base.vertices();
  const int off = spec.attachment_offset(k);
  for (int u = 0; u < spec.attachments[k].order(); ++u) keep.insert(off + u);
  const Relabeled base2 = induced_subgraph(dv, keep);
  out.completed.base = base2.graph;
  out.completed.attach = other_attach;
  out.completed.attachments = other_graphs;

  const Relabeled base3 = remove_vertex(base2.graph, v);
  out.completed_minus_v.base = base3.graph;
  for (int a : other_attach) out.completed_minus_v.attach.push_back(base3.to_new(a));
  out.completed_minus_v.attachments = other_graphs;
  return out;
}

SpecialWhiskerLabeling special_whisker_labeling(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw InputError("special_whisker_labeling: graph has no edges");
  const int p = g.order();
  const auto [a, b] = edges.front();
  SpecialWhiskerLabeling out;
  out.base_label.assign(static_cast<std::size_t>(p), 0);
  out.whisker_label.assign(static_cast<std::size_t>(p), 0);
  out.base_label[a - 1] = 3;
  out.whisker_label[a - 1] = 1;
  out.base_label[b - 1] = 4;
  out.whisker_label[b - 1] = 2;
  int next = 5;
  for (int v = 1; v <= p; ++v) {
    if (v == a || v == b) continue;
    out.base_label[v - 1] = next;
    out.whisker_label[v - 1] = next + p - 2;
    ++next;
  }
  // whisker(g) labels base v as v and its pendant as p + v.
  const Graph w = whisker(g).graph;
  std::vector<int> perm(static_cast<std::size_t>(2 * p));
  for (int v = 1; v <= p; ++v) {
    perm[v - 1] = out.base_label[v - 1];
    perm[p + v - 1] = out.whisker_label[v - 1];
  }
  out.graph = permute(w, perm);
  return out;
}

}  // namespace bei
