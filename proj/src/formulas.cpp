#include "bei/formulas.hpp"

#include <algorithm>

#include "bei/error.hpp"

namespace bei {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Lower:
      return "lower";
    case BoundKind::Upper:
      return "upper";
    case BoundKind::Equality:
      return "equality";
  }
  return "lower";
}

namespace {

void require_m(int m, const char* who) {
  if (m < 2) throw InputError(std::string(who) + ": m must be at least 2");
}

BoundReport make(std::string name, BoundKind kind) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = kind;
  return r;
}

}  // namespace

CoronaInvariants corona_invariants(const GenCoronaSpec& spec, std::optional<std::span<const int>> depth_of_H, int m) {
  const auto membership = class_membership(spec, depth_of_H, m);
  const Graph d = composite(spec);
  CoronaInvariants ci;
  ci.p = spec.base_order();
  ci.l = spec.attach_count();
  ci.composite_order = d.order();
  ci.composite_c = component_count(d);
  ci.in_G1 = membership.in_G1;
  ci.in_G2 = membership.in_G2;
  ci.in_Gprime = membership.in_Gprime;
  ci.base_complete = spec.base.is_complete();
  ci.base = invariant_report(spec.base);
  for (const auto& h : spec.attachments) ci.attachments.push_back(invariant_report(h));
  return ci;
}

BoundReport depth_lower_bound_general(const InvariantReport& g, int m) {
  require_m(m, "thm2.4");
  auto r = make("thm2.4", BoundKind::Lower);
  r.inputs = {{"f", g.f}, {"d", g.d}, {"c", g.c}, {"m", m}};
  r.value = g.f + g.d + static_cast<long long>(m - 2) * g.c;
  return r;
}

BoundReport depth_upper_bound_kappa(const InvariantReport& g, int m) {
  require_m(m, "thm2.5");
  if (g.c != 1 || !g.kappa) throw InputError("thm2.5: graph must be connected");
  auto r = make("thm2.5", BoundKind::Upper);
  r.inputs = {{"n", g.n}, {"m", m}, {"kappa", *g.kappa}};
  if (g.complete) {
    r.value = m + g.n - 1;
    r.flagged = true;
    r.note = "complete graph: connected-graph form m + n - 1";
  } else {
    r.value = m + g.n - *g.kappa;
  }
  return r;
}

BoundReport depth_lower_bound_G2_gen(const CoronaInvariants& ci, int m) {
  require_m(m, "thm3.2");
  if (!ci.in_G2) throw InputError("thm3.2: spec is not in class G2");
  auto r = make("thm3.2", BoundKind::Lower);
  long long sum = 0;
  for (const auto& h : ci.attachments) sum += h.f + h.d;
  r.inputs = {{"sum_f_plus_d", sum}, {"p", ci.p}, {"l", ci.l}, {"c", ci.composite_c}, {"m", m}};
  r.value = sum + ci.p - ci.l + static_cast<long long>(m - 1) * ci.composite_c;
  return r;
}

BoundReport depth_equality_Gprime(const CoronaInvariants& ci, int m) {
  require_m(m, "thm3.3");
  if (!ci.in_Gprime.value_or(false)) throw InputError("thm3.3: membership in G' is not certified");
  auto r = make("thm3.3", BoundKind::Equality);
  r.inputs = {{"order", ci.composite_order}, {"c", ci.composite_c}, {"m", m}};
  r.value = ci.composite_order + static_cast<long long>(m - 1) * ci.composite_c;
  return r;
}

BoundReport depth_lower_bound_G2_binom(const CoronaInvariants& ci, std::span<const int> depth_of_H) {
  if (!ci.in_G2) throw InputError("thm3.5: spec is not in class G2");
  if (depth_of_H.size() != ci.attachments.size()) {
    throw InputError("thm3.5: expected " + std::to_string(ci.attachments.size()) + " depths, got " +
                     std::to_string(depth_of_H.size()));
  }
  auto r = make("thm3.5", BoundKind::Lower);
  long long sum = 0;
  for (int d : depth_of_H) sum += d;
  r.inputs = {{"sum_depth", sum}, {"p", ci.p}, {"l", ci.l}, {"c", ci.composite_c}};
  r.value = sum + ci.p - ci.l + ci.composite_c;
  return r;
}

BoundReport reg_upper_bound_G1(const CoronaInvariants& ci, int m) {
  require_m(m, "thm4.2");
  if (!ci.in_G1) throw InputError("thm4.2: spec is not in class G1");
  auto r = make("thm4.2", BoundKind::Upper);
  const long long n_total = ci.composite_order;
  r.inputs = {{"S", ci.l}, {"im", ci.base.im}, {"m", m}, {"n_total", n_total}};
  if (m >= n_total) {
    r.value = n_total - 1;
    r.note = "m >= |V|: regularity of the complete form";
  } else {
    r.value = std::min<long long>(static_cast<long long>(m - 1) * (ci.l + ci.base.im), n_total - 1);
  }
  return r;
}

BoundReport reg_gapfree_whisker(const InvariantReport& g) {
  if (!g.gap_free.value_or(false)) throw InputError("thm4.6: graph is not gap-free");
  auto r = make("thm4.6", BoundKind::Equality);
  r.inputs = {{"n", g.n}};
  r.value = g.n + 1;
  return r;
}

BoundReport dim_G2prime(const CoronaInvariants& ci, std::span<const int> dim_of_H) {
  if (!ci.base_complete) throw InputError("lem5.1: base is not complete");
  if (dim_of_H.size() != ci.attachments.size()) {
    throw InputError("lem5.1: expected " + std::to_string(ci.attachments.size()) + " dimensions, got " +
                     std::to_string(dim_of_H.size()));
  }
  auto r = make("lem5.1", BoundKind::Equality);
  long long sum = 0;
  for (int d : dim_of_H) sum += d;
  r.inputs = {{"p", ci.p}, {"S", ci.l}, {"sum_dim", sum}};
  r.value = ci.p - ci.l + 1 + sum;
  return r;
}

bool satisfies(const BoundReport& r, long long observed) {
  switch (r.kind) {
    case BoundKind::Lower:
      return r.value <= observed;
    case BoundKind::Upper:
      return observed <= r.value;
    case BoundKind::Equality:
      return observed == r.value;
  }
  return false;
}

}  // namespace bei
