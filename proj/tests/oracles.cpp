#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

using bei::Graph;
using bei::Mask;
using bei::VarMask;

namespace {

constexpr std::int64_t kPrime = 1'000'000'007;

std::int64_t inverse(std::int64_t a) {
  std::int64_t result = 1, e = kPrime - 2;
  a %= kPrime;
  while (e > 0) {
    if (e & 1) result = result * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return result;
}

// Reduced homology of a closed face family.
std::vector<int> homology_of(const std::vector<VarMask>& faces, int n_vars) {
  std::vector<std::vector<VarMask>> by_size(n_vars + 2);
  for (VarMask f : faces) by_size[__builtin_popcountll(f)].push_back(f);
  std::vector<int> rank(n_vars + 2, 0);  // rank[s]: boundary from size s to size s - 1
  for (int s = 1; s <= n_vars; ++s) {
    if (by_size[s].empty() || by_size[s - 1].empty()) continue;
    std::map<VarMask, int> col;
    for (std::size_t c = 0; c < by_size[s - 1].size(); ++c) col[by_size[s - 1][c]] = static_cast<int>(c);
    std::vector<std::vector<std::int64_t>> rows;
    for (VarMask f : by_size[s]) {
      std::vector<std::int64_t> row(by_size[s - 1].size(), 0);
      int sign = 1;
      for (int v = 0; v < n_vars; ++v) {
        if (!(f >> v & 1)) continue;
        row[col.at(f & ~(VarMask{1} << v))] = sign;
        sign = -sign;
      }
      rows.push_back(std::move(row));
    }
    rank[s] = rank_mod_p(std::move(rows), static_cast<int>(by_size[s - 1].size()));
  }
  std::vector<int> h(n_vars + 1, 0);
  for (int s = 0; s <= n_vars; ++s) {
    h[s] = static_cast<int>(by_size[s].size()) - rank[s] - rank[s + 1];
  }
  return h;
}

bool avoids(VarMask s, const std::vector<VarMask>& gens) {
  return std::none_of(gens.begin(), gens.end(), [&](VarMask g) { return (g & ~s) == 0; });
}

std::vector<VarMask> faces_within(const std::vector<VarMask>& gens, VarMask ground) {
  std::vector<VarMask> out;
  for (VarMask s = ground;; s = (s - 1) & ground) {
    if (avoids(s, gens)) out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

}  // namespace

bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.adjacent(perm[u - 1], perm[v - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int components_brute(const Graph& g, Mask within) {
  int count = 0;
  Mask seen = 0;
  for (int s = 1; s <= g.order(); ++s) {
    if (!(within >> (s - 1) & 1) || (seen >> (s - 1) & 1)) continue;
    ++count;
    std::vector<int> stack{s};
    seen |= Mask{1} << (s - 1);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 1; w <= g.order(); ++w) {
        const Mask b = Mask{1} << (w - 1);
        if ((within & b) && !(seen & b) && g.adjacent(u, w)) {
          seen |= b;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::vector<Mask> cutsets_brute(const Graph& g) {
  const int n = g.order();
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> out;
  for (Mask t = 0; t <= all; ++t) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      const Mask b = Mask{1} << (v - 1);
      if (!(t & b)) continue;
      // v must be a cut vertex of G - (T \ {v})
      const Mask keep = all & ~(t & ~b);
      ok = components_brute(g, keep & ~b) > components_brute(g, keep);
    }
    if (ok) out.push_back(t);
  }
  return out;
}

int induced_matching_brute(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  int best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
    std::vector<bei::Edge> chosen;
    for (std::size_t k = 0; k < m; ++k) {
      if (sub >> k & 1) chosen.push_back(edges[k]);
    }
    Mask support = 0;
    bool ok = true;
    for (auto [a, b] : chosen) {
      const Mask e = (Mask{1} << (a - 1)) | (Mask{1} << (b - 1));
      if (support & e) ok = false;
      support |= e;
    }
    if (!ok) continue;
    int induced = 0;
    for (auto [a, b] : edges) {
      if ((support >> (a - 1) & 1) && (support >> (b - 1) & 1)) ++induced;
    }
    if (induced == static_cast<int>(chosen.size())) best = std::max(best, induced);
  }
  return best;
}

int kappa_brute(const Graph& g) {
  const int n = g.order();
  const Mask all = (Mask{1} << n) - 1;
  int best = n - 1;
  for (Mask x = 0; x <= all; ++x) {
    const Mask rest = all & ~x;
    if (__builtin_popcountll(rest) >= 2 && components_brute(g, rest) >= 2) {
      best = std::min(best, __builtin_popcountll(x));
    }
  }
  return best;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (((rows[r][c] % kPrime) + kPrime) % kPrime != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    auto& p = rows[rank];
    for (auto& x : p) x = ((x % kPrime) + kPrime) % kPrime;
    const std::int64_t inv = inverse(p[c]);
    for (auto& x : p) x = x * inv % kPrime;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      const std::int64_t f = ((rows[r][c] % kPrime) + kPrime) % kPrime;
      if (f == 0) continue;
      for (int k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * p[k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

std::vector<int> homology_brute(const std::vector<VarMask>& gens, VarMask ground, int n_vars) {
  return homology_of(faces_within(gens, ground), n_vars);
}

Homological hochster_all_subsets(const bei::MonomialIdealSF& ideal) {
  const int n = ideal.n_vars();
  const auto& gens = ideal.generators();
  Homological out;
  out.pd = 0;
  out.reg = 0;
  for (VarMask w = 0; w < (VarMask{1} << n); ++w) {
    const auto h = homology_brute(gens, w, n);
    const int size = __builtin_popcountll(w);
    // beta_{i,W} = dim H~_{|W|-i-1}(D_W), stored at h[|W| - i]
    for (int s = 0; s <= n; ++s) {
      if (h[s] == 0) continue;
      const int i = size - s;
      out.pd = std::max(out.pd, i);
      out.reg = std::max(out.reg, size - i);
    }
  }
  out.depth = n - out.pd;
  return out;
}

int depth_via_links(const bei::MonomialIdealSF& ideal) {
  const int n = ideal.n_vars();
  const auto& gens = ideal.generators();
  const VarMask all = n == 0 ? 0 : (n == 64 ? ~VarMask{0} : (VarMask{1} << n) - 1);
  int best = n;
  for (VarMask f : faces_within(gens, all)) {
    std::vector<VarMask> link;
    const VarMask outside = all & ~f;
    for (VarMask g = outside;; g = (g - 1) & outside) {
      if (avoids(g | f, gens)) link.push_back(g);
      if (g == 0) break;
    }
    const auto h = homology_of(link, n);
    for (int s = 0; s <= n; ++s) {
      if (h[s] != 0) {
        best = std::min(best, __builtin_popcountll(f) + s);
        break;
      }
    }
  }
  return best;
}

int krull_brute(const bei::MonomialIdealSF& ideal) {
  const int n = ideal.n_vars();
  int best = 0;
  for (VarMask s = 0; s < (VarMask{1} << n); ++s) {
    if (avoids(s, ideal.generators())) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

}  // namespace oracle
