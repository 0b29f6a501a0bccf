#include "bei/decomposition.hpp"

#include <algorithm>

#include "bei/error.hpp"
#include "bei/invariants.hpp"

namespace bei {

std::vector<Cutset> enumerate_cutsets(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) throw CapError("enumerate_cutsets: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  const Mask all = g.vertices().mask();
  std::vector<Cutset> out;
  for (Mask t = 0;; ++t) {
    bool ok = true;
    for (Mask m = t; m && ok; m &= m - 1) {
      const Mask v = m & (~m + 1);
      const Mask rest = all & ~(t & ~v);  // G - (T \ {v})
      ok = count_components_within(g, rest & ~v) > count_components_within(g, rest);
    }
    if (ok) {
      Cutset c;
      c.T = VertexSet(t);
      c.parts = components_within(g, all & ~t);
      c.c = static_cast<int>(c.parts.size());
      out.push_back(std::move(c));
    }
    if (t == all) break;
  }
  std::sort(out.begin(), out.end(), [](const Cutset& a, const Cutset& b) {
    if (a.T.size() != b.T.size()) return a.T.size() < b.T.size();
    return a.T.labels() < b.T.labels();
  });
  return out;
}

int prime_dimension(int n, int t_size, int c, int m) { return (n - t_size) + (m - 1) * c; }

DimensionResult dimension(const Graph& g, int m, int cap) {
  if (m < 2) throw InputError("dimension: m must be at least 2");
  DimensionResult best{-1, VertexSet{}};
  for (const auto& t : enumerate_cutsets(g, cap)) {
    const int d = prime_dimension(g.order(), t.T.size(), t.c, m);
    if (d > best.dim) best = {d, t.T};
  }
  return best;
}

UnmixedResult is_unmixed(const Graph& g, int m, int cap) {
  if (m < 2) throw InputError("is_unmixed: m must be at least 2");
  if (g.order() == 0 || component_count(g) != 1) throw InputError("is_unmixed: graph must be connected");
  const auto cutsets = enumerate_cutsets(g, cap);

  UnmixedResult by_dimension;
  const int reference = prime_dimension(g.order(), 0, 1, m);  // T = {} is always a cutset
  for (const auto& t : cutsets) {
    if (prime_dimension(g.order(), t.T.size(), t.c, m) != reference) {
      by_dimension = {false, t};
      break;
    }
  }
  if (m != 2) return by_dimension;

  UnmixedResult by_count;
  for (const auto& t : cutsets) {
    if (t.c != t.T.size() + 1) {
      by_count = {false, t};
      break;
    }
  }
  if (by_count.unmixed != by_dimension.unmixed) {
    throw InternalError("is_unmixed: component-count criterion and prime dimensions disagree");
  }
  return by_count;
}

VertexDecomposition decompose_at_vertex(const Graph& g, int v) {
  if (!g.has_vertex(v)) throw InputError("decompose_at_vertex: vertex outside V(G)");
  if (is_free_vertex(g, v)) throw InputError("decompose_at_vertex: vertex " + std::to_string(v) + " is free");
  VertexDecomposition out;
  out.completed = g_v_operation(g, v);
  out.removed = remove_vertex(g, v);
  out.completed_removed = remove_vertex(out.completed, v);
  return out;
}

std::string to_string(CmStatus s) {
  switch (s) {
    case CmStatus::CohenMacaulay:
      return "cohen-macaulay";
    case CmStatus::NotCohenMacaulay:
      return "not-cohen-macaulay";
    case CmStatus::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

CmVerdict verdict(CmStatus s, std::string reason) { return {s, std::move(reason)}; }

// Base K1: D is the cone over the single attachment.
CmVerdict classify_cone(const GenCoronaSpec& spec, const std::vector<bool>& cm_of_H) {
  if (spec.attachments.empty()) return verdict(CmStatus::CohenMacaulay, "D = K1 is complete");
  const Graph& h = spec.attachments.front();
  if (h.is_complete()) return verdict(CmStatus::CohenMacaulay, "cone over a complete graph is complete");
  const int parts = component_count(h);
  if (parts > 2) return verdict(CmStatus::NotCohenMacaulay, "cone over more than two components is not unmixed");
  if (parts == 2) {
    return cm_of_H.front() ? verdict(CmStatus::CohenMacaulay, "cone over two components with Cohen-Macaulay ideals")
                           : verdict(CmStatus::NotCohenMacaulay, "cone over two components, J_H not Cohen-Macaulay");
  }
  return verdict(CmStatus::Undetermined, "cone over a connected non-complete graph is outside the classification");
}

}  // namespace

CmVerdict classify_cm(const GenCoronaSpec& spec, int m, const std::vector<bool>& cm_of_H) {
  if (m < 2) throw InputError("classify_cm: m must be at least 2");
  validate(spec);
  if (cm_of_H.size() != spec.attachments.size()) {
    throw InputError("classify_cm: expected " + std::to_string(spec.attachments.size()) + " Cohen-Macaulay flags, got " +
                     std::to_string(cm_of_H.size()));
  }
  const Graph d = composite(spec);
  if (d.order() == 0 || component_count(d) != 1) throw InputError("classify_cm: composite graph is disconnected");

  if (m > 2) {
    return d.is_complete() ? verdict(CmStatus::CohenMacaulay, "composite is complete")
                           : verdict(CmStatus::NotCohenMacaulay, "m > 2 and composite is not complete");
  }
  if (spec.base.order() == 1) return classify_cone(spec, cm_of_H);
  if (spec.base.size() == 0) throw InputError("classify_cm: base graph has no edges");
  if (!class_membership(spec, std::nullopt, m).in_G2) throw InputError("classify_cm: spec is not in class G2");

  if (!spec.base.is_complete()) return verdict(CmStatus::NotCohenMacaulay, "base not complete");
  for (std::size_t k = 0; k < spec.attachments.size(); ++k) {
    if (component_count(spec.attachments[k]) != 1) {
      return verdict(CmStatus::NotCohenMacaulay, "attachment H" + std::to_string(k + 1) + " is disconnected");
    }
  }
  for (std::size_t k = 0; k < spec.attachments.size(); ++k) {
    if (!cm_of_H[k]) {
      return verdict(CmStatus::NotCohenMacaulay, "J of attachment H" + std::to_string(k + 1) + " is not Cohen-Macaulay");
    }
  }
  if (spec.attach_count() == spec.base_order()) {
    const bool some_complete = std::any_of(spec.attachments.begin(), spec.attachments.end(),
                                           [](const Graph& h) { return h.is_complete(); });
    if (!some_complete) {
      return verdict(CmStatus::NotCohenMacaulay, "every base vertex carries a non-complete attachment");
    }
  }
  return verdict(CmStatus::CohenMacaulay, "complete base with connected Cohen-Macaulay attachments");
}

}  // namespace bei
