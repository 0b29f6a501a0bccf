#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// G o_S (H_1, ..., H_l): attachment H_k is joined completely to base vertex
// attach[k]. Composite labels: base keeps 1..p, then H_1's vertices, then
// H_2's, and so on.
struct GenCoronaSpec {
  Graph base;
  std::vector<int> attach;          // v_1..v_l, distinct base labels
  std::vector<Graph> attachments;   // H_1..H_l

  int base_order() const { return base.order(); }
  int attach_count() const { return static_cast<int>(attach.size()); }
  int order() const;
  VertexSet attach_set() const { return VertexSet::from_labels(attach); }
  // Composite label of the first vertex of attachment k (0-based k).
  int attachment_offset(std::size_t k) const;
};

// Throws InputError on length mismatch, repeated or out-of-range attachment vertices.
void validate(const GenCoronaSpec& spec);

Graph composite(const GenCoronaSpec& spec);

struct Construction {
  GenCoronaSpec spec;
  Graph graph;
};

// Pendant n + i attached to every vertex i.
Construction whisker(const Graph& g);
// Pendants at the vertices of S, attached in increasing order of S.
Construction whisker_on_set(const Graph& g, VertexSet s);

Graph generalized_corona(const Graph& g, std::span<const int> attach, std::span<const Graph> attachments);
// S given as a set: H_k goes to the k-th smallest element.
Graph generalized_corona(const Graph& g, VertexSet s, std::span<const Graph> attachments);
Construction generalized_corona_spec(const Graph& g, std::span<const int> attach, std::vector<Graph> attachments);

// Apex is vertex 1, H's vertices are shifted to 2..|H|+1.
Graph cone(const Graph& h);

struct ClassMembership {
  bool in_G1 = false;
  bool in_G2 = false;
  std::optional<bool> in_Gprime;    // only when depths of the attachments were supplied
  std::optional<int> witness;       // smallest non-free base vertex outside S
};

// depth_of_H[k] must be depth(R_k / J_{K_m, H_k}) when supplied.
ClassMembership class_membership(const GenCoronaSpec& spec, std::optional<std::span<const int>> depth_of_H, int m);

// The three graphs of the vertex reduction at v = attach[k]:
// D - v = H_k + D', D_v and D_v - v, each again a generalized corona with
// the remaining attachments.
struct VertexOpTriple {
  Graph removed_attachment;         // H_k
  GenCoronaSpec rest;               // D'
  GenCoronaSpec completed;          // D_v
  GenCoronaSpec completed_minus_v;  // D_v - v
};

VertexOpTriple vertex_op_triple(const GenCoronaSpec& spec, int v);

// W(G) relabelled so that the first edge {a, b} of G becomes {3, 4}, the
// whiskers of a and b are 1 and 2, and the remaining base vertices take
// 5..p+2 with their whiskers at p+3..2p (base label L gets whisker L + p - 2).
struct SpecialWhiskerLabeling {
  Graph graph;
  std::vector<int> base_label;     // base_label[v-1]: new label of base vertex v
  std::vector<int> whisker_label;  // whisker_label[v-1]: new label of v's whisker
};

SpecialWhiskerLabeling special_whisker_labeling(const Graph& g);

}  // namespace bei
