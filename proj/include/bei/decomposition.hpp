#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bei/constructions.hpp"
#include "bei/graph.hpp"

namespace bei {

inline constexpr int kDefaultCutsetCap = 12;

// T is a cutset when every v in T is a cut vertex of G - (T \ {v}).
struct Cutset {
  VertexSet T;
  std::vector<VertexSet> parts;  // components of G - T, original labels
  int c = 0;
};

// All cutsets including the empty set, sorted by size then lexicographically.
std::vector<Cutset> enumerate_cutsets(const Graph& g, int cap = kDefaultCutsetCap);

// Krull dimension of R / P_T(K_m, G): (n - |T|) + (m - 1) c_G(T).
int prime_dimension(int n, int t_size, int c, int m);

struct DimensionResult {
  int dim = 0;
  VertexSet witness;  // first cutset attaining the maximum
};

DimensionResult dimension(const Graph& g, int m, int cap = kDefaultCutsetCap);

struct UnmixedResult {
  bool unmixed = true;
  std::optional<Cutset> witness;  // first failing cutset
};

// m == 2 uses c_G(T) == |T| + 1 for every cutset; any m compares the prime
// dimensions. At m == 2 both are evaluated and must agree. Requires G connected.
UnmixedResult is_unmixed(const Graph& g, int m, int cap = kDefaultCutsetCap);

// The graphs G_v, G - v and G_v - v of the vertex reduction at a non-free v.
struct VertexDecomposition {
  Graph completed;               // G_v (same labels as G)
  Relabeled removed;             // G - v
  Relabeled completed_removed;   // G_v - v
};

VertexDecomposition decompose_at_vertex(const Graph& g, int v);

enum class CmStatus { CohenMacaulay, NotCohenMacaulay, Undetermined };

struct CmVerdict {
  CmStatus status = CmStatus::Undetermined;
  std::string reason;

  bool is_cm() const { return status == CmStatus::CohenMacaulay; }
};

// Cohen-Macaulay classification of J_{K_m, D} for a connected corona D.
// cm_of_H[k] states whether J_{H_k} is Cohen-Macaulay (m = 2 only).
CmVerdict classify_cm(const GenCoronaSpec& spec, int m, const std::vector<bool>& cm_of_H);

std::string to_string(CmStatus s);

}  // namespace bei
