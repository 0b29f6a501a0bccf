#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bei/constructions.hpp"
#include "bei/invariants.hpp"

namespace bei {

enum class BoundKind { Lower, Upper, Equality };

std::string to_string(BoundKind k);

struct BoundReport {
  std::string name;  // "thm2.4", "thm2.5", "thm3.2", "thm3.3", "thm3.5", "thm4.2", "thm4.6", "lem5.1"
  long long value = 0;
  BoundKind kind = BoundKind::Lower;
  std::map<std::string, long long> inputs;
  bool flagged = false;  // value came from a fallback form
  std::string note;
};

// Invariants of a generalized corona D = G o_S (H_1..H_l) consumed by the class formulas.
struct CoronaInvariants {
  int p = 0;               // |V(G)|
  int l = 0;               // |S|
  int composite_order = 0; // |V(D)|
  int composite_c = 0;     // c(D)
  bool in_G1 = false;
  bool in_G2 = false;
  std::optional<bool> in_Gprime;
  bool base_complete = false;
  InvariantReport base;
  std::vector<InvariantReport> attachments;
};

// depth_of_H, when given, certifies membership in G' at the given m.
CoronaInvariants corona_invariants(const GenCoronaSpec& spec, std::optional<std::span<const int>> depth_of_H = std::nullopt,
                                   int m = 2);

// f + d + (m - 2) c.
BoundReport depth_lower_bound_general(const InvariantReport& g, int m);
// m + n - kappa; complete graphs use m + n - 1 and are flagged. InputError if disconnected.
BoundReport depth_upper_bound_kappa(const InvariantReport& g, int m);
// sum (f(H_i) + d(H_i)) + p - l + (m - 1) c(D). Requires class G2.
BoundReport depth_lower_bound_G2_gen(const CoronaInvariants& ci, int m);
// |V(D)| + (m - 1) c(D). Requires certified G'.
BoundReport depth_equality_Gprime(const CoronaInvariants& ci, int m);
// sum depth(R_i / J_{H_i}) + p - l + c(D). Requires class G2.
BoundReport depth_lower_bound_G2_binom(const CoronaInvariants& ci, std::span<const int> depth_of_H);
// min{(m - 1)(|S| + im(G)), N - 1} for m < N, else N - 1, with N = |V(W_S(G))|. Requires class G1.
BoundReport reg_upper_bound_G1(const CoronaInvariants& ci, int m);
// |V(G)| + 1 for gap-free G.
BoundReport reg_gapfree_whisker(const InvariantReport& g);
// p - |S| + 1 + sum dim(R_i / J_{H_i}). Requires a complete base.
BoundReport dim_G2prime(const CoronaInvariants& ci, std::span<const int> dim_of_H);

// Whether `observed` satisfies the relation the report states.
bool satisfies(const BoundReport& r, long long observed);

}  // namespace bei
