#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bei/betti.hpp"
#include "bei/constructions.hpp"
#include "bei/graph.hpp"

namespace bei {

// depth, reg and Krull dimension of R/J_G at m = 2.
struct OracleValues {
  int depth = 0;
  int reg = 0;
  int dim = 0;
  bool cohen_macaulay() const { return depth == dim; }
};

// Thread-safe memo of oracle values keyed by isomorphism class.
class OracleCache {
 public:
  explicit OracleCache(BettiOptions options = {}) : options_(options) {}
  OracleValues get(const Graph& g);
  std::size_t size() const;

 private:
  BettiOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, OracleValues> memo_;
};

// Depths of the attachments at m when they are known: K1 and complete graphs
// in closed form, anything else through the oracle at m = 2.
std::optional<std::vector<int>> known_attachment_depths(const GenCoronaSpec& spec, int m, OracleCache& cache);

// "k1", "k3", "p3", "c4", "2k1" (r disjoint copies of K_n as "<r>k<n>").
Graph named_graph(const std::string& name);

struct CoronaUniverse {
  int min_base = 2;
  int max_base = 3;
  int max_total = 8;
  std::vector<std::string> attachments{"k1", "k2", "p3", "2k1"};
};

// Connected bases with min_base..max_base vertices, every S containing the
// non-free base vertices, every assignment of attachments with total order <= max_total.
std::vector<GenCoronaSpec> enumerate_g2(const CoronaUniverse& u);
// W_S(G) for connected G with 1..max_base vertices and every S containing B_G.
std::vector<GenCoronaSpec> enumerate_g1(int max_base);

// Compact identifier: base graph6, S, attachment graph6 codes.
std::string spec_id(const GenCoronaSpec& spec);

struct InstanceRecord {
  std::string id;
  long long formula = 0;
  long long oracle = 0;
  std::string relation;  // how formula and oracle must compare
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  int max_n = 0;  // 0 selects the tag's default
  CoronaUniverse universe;
  int jobs = 1;
};

struct VerificationRun {
  std::string tag;
  std::map<std::string, std::string> universe;
  std::vector<InstanceRecord> records;  // sorted by id
  int passed = 0;
  int failed = 0;
  double wall_seconds = 0;

  bool all_pass() const { return failed == 0; }
};

const std::vector<std::string>& verification_tags();
bool is_verification_tag(const std::string& tag);

// InputError for an unknown tag.
VerificationRun run_verification(const std::string& tag, const VerifyOptions& options, OracleCache& cache);

}  // namespace bei
