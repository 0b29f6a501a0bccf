#include "bei/monomial_ideal.hpp"

#include <algorithm>

#include "bei/error.hpp"

namespace bei {

namespace {

void check_supports(int n_vars, const std::vector<VarMask>& supports) {
  if (n_vars < 0 || n_vars > kMaxVariables) throw InputError("monomial ideal: unsupported variable count");
  const VarMask all = n_vars == 64 ? ~VarMask{0} : (VarMask{1} << n_vars) - 1;
  for (VarMask s : supports) {
    if (s & ~all) throw InputError("monomial ideal: generator uses a variable outside the ring");
  }
}

}  // namespace

MonomialIdealSF MonomialIdealSF::minimalized(int n_vars, std::vector<VarMask> supports) {
  check_supports(n_vars, supports);
  std::sort(supports.begin(), supports.end(),
            [](VarMask a, VarMask b) { return __builtin_popcountll(a) < __builtin_popcountll(b) || (__builtin_popcountll(a) == __builtin_popcountll(b) && a < b); });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<VarMask> kept;
  for (VarMask s : supports) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [s](VarMask k) { return (k & ~s) == 0; });
    if (!redundant) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdealSF(n_vars, std::move(kept));
}

MonomialIdealSF MonomialIdealSF::from_minimal(int n_vars, std::vector<VarMask> supports) {
  check_supports(n_vars, supports);
  for (std::size_t a = 0; a < supports.size(); ++a) {
    for (std::size_t b = 0; b < supports.size(); ++b) {
      if (a != b && (supports[a] & ~supports[b]) == 0) {
        throw InputError("monomial ideal: generating set is not minimal (one support contains another)");
      }
    }
  }
  std::sort(supports.begin(), supports.end());
  return MonomialIdealSF(n_vars, std::move(supports));
}

std::vector<std::vector<int>> MonomialIdealSF::generator_indices() const {
  std::vector<std::vector<int>> out;
  for (VarMask g : gens_) {
    std::vector<int> idx;
    for (VarMask m = g; m; m &= m - 1) idx.push_back(__builtin_ctzll(m) + 1);
    out.push_back(std::move(idx));
  }
  return out;
}

bool MonomialIdealSF::contains_monomial(VarMask support) const {
  return std::any_of(gens_.begin(), gens_.end(), [support](VarMask g) { return (g & ~support) == 0; });
}

std::string monomial_name(VarMask support, int n_vertices) {
  if (!support) return "1";
  std::string out;
  for (VarMask m = support; m; m &= m - 1) {
    const int k = __builtin_ctzll(m) + 1;
    if (!out.empty()) out += '*';
    out += k <= n_vertices ? "x" + std::to_string(k) : "y" + std::to_string(k - n_vertices);
  }
  return out;
}

}  // namespace bei
