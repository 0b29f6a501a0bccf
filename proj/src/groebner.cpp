#include "bei/groebner.hpp"

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>

#include "bei/error.hpp"

namespace bei {

bool lex_greater(VarMask a, VarMask b) {
  const VarMask diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

// ---------------------------------------------------------------- admissible paths

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, int i, int j) : g_(g), i_(i), j_(j) {
    for (int v = 1; v <= g.order(); ++v) {
      if (v < i || v > j) interior_ok_ |= bit(v);
    }
  }

  std::vector<AdmissiblePath> run() {
    path_.push_back(i_);
    extend(bit(i_));
    return std::move(found_);
  }

 private:
  void extend(Mask on_path) {
    const int last = path_.back();
    const Mask nb = g_.neighbor_mask(last);
    if (nb & bit(j_)) record(on_path | bit(j_));
    // A vertex adjacent to an earlier path vertex other than `last` would
    // close a chord, which no completion can remove.
    const Mask earlier = on_path & ~bit(last);
    for (Mask m = nb & interior_ok_ & ~on_path; m; m &= m - 1) {
      const int w = __builtin_ctzll(m) + 1;
      if (g_.neighbor_mask(w) & earlier) continue;
      path_.push_back(w);
      extend(on_path | bit(w));
      path_.pop_back();
    }
  }

  void record(Mask support) {
    std::vector<int> verts = path_;
    verts.push_back(j_);
    // The induced subgraph on the support must be the path itself (acyclic).
    int induced_edges = 0;
    for (Mask m = support; m; m &= m - 1) induced_edges += popcount(g_.neighbor_mask(__builtin_ctzll(m) + 1) & support);
    if (induced_edges / 2 != static_cast<int>(verts.size()) - 1) return;

    const int n = g_.order();
    AdmissiblePath p;
    for (std::size_t k = 1; k + 1 < verts.size(); ++k) {
      const int v = verts[k];
      p.monomial_u |= v > j_ ? x_var(v) : y_var(v, n);
    }
    p.vertices = std::move(verts);
    found_.push_back(std::move(p));
  }

  const Graph& g_;
  int i_, j_;
  Mask interior_ok_ = 0;
  std::vector<int> path_;
  std::vector<AdmissiblePath> found_;
};

void check_groebner_cap(const Graph& g) {
  if (g.order() > kGroebnerMaxVertices) {
    throw CapError("Groebner basis: " + std::to_string(g.order()) + " vertices exceeds cap " +
                   std::to_string(kGroebnerMaxVertices));
  }
}

}  // namespace

std::vector<AdmissiblePath> admissible_paths(const Graph& g, int i, int j) {
  if (!g.has_vertex(i) || !g.has_vertex(j)) throw InputError("admissible_paths: vertex outside V(G)");
  if (i >= j) throw InputError("admissible_paths: requires i < j");
  auto paths = PathSearch(g, i, j).run();
  std::sort(paths.begin(), paths.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
    return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size() : a.vertices < b.vertices;
  });
  return paths;
}

std::vector<Binomial> reduced_groebner_basis(const Graph& g) {
  check_groebner_cap(g);
  const int n = g.order();
  std::vector<Binomial> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (const auto& p : admissible_paths(g, i, j)) {
        out.push_back({p.monomial_u | x_var(i) | y_var(j, n), p.monomial_u | x_var(j) | y_var(i, n)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
    return a.plus_term != b.plus_term ? lex_greater(a.plus_term, b.plus_term) : lex_greater(a.minus_term, b.minus_term);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialIdealSF initial_ideal(const Graph& g) {
  std::vector<VarMask> lead;
  for (const auto& b : reduced_groebner_basis(g)) lead.push_back(b.plus_term);
  return MonomialIdealSF::minimalized(2 * g.order(), std::move(lead));
}

// ---------------------------------------------------------------- Buchberger

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::array<std::uint8_t, 2 * kBuchbergerMaxVertices>;

struct Term {
  Exponents m{};
  Rational c;
};
// Terms sorted lex-descending, no zero coefficients.
using Poly = std::vector<Term>;

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = static_cast<std::uint8_t>(a[k] - b[k]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && b[k]) return false;
  }
  return true;
}

// p - coeff * shift * q
Poly sub_scaled(const Poly& p, const Rational& coeff, const Exponents& shift, const Poly& q) {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t a = 0, b = 0;
  while (a < p.size() || b < q.size()) {
    Exponents qm{};
    if (b < q.size()) {
      for (std::size_t k = 0; k < qm.size(); ++k) qm[k] = static_cast<std::uint8_t>(q[b].m[k] + shift[k]);
    }
    if (b >= q.size() || (a < p.size() && p[a].m > qm)) {
      out.push_back(p[a++]);
    } else if (a >= p.size() || qm > p[a].m) {
      out.push_back({qm, -coeff * q[b++].c});
    } else {
      Rational c = p[a].c - coeff * q[b].c;
      if (c != 0) out.push_back({qm, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  const Rational lc = p.front().c;
  for (auto& t : p) t.c /= lc;
}

Poly reduce_fully(Poly p, const std::vector<Poly>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly result;
  while (!p.empty()) {
    const Term& lead = p.front();
    const Poly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (divides(basis[k].front().m, lead.m)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      result.push_back(lead);
      p.erase(p.begin());
      continue;
    }
    const Rational coeff = lead.c / divisor->front().c;
    p = sub_scaled(p, coeff, quotient(lead.m, divisor->front().m), *divisor);
  }
  return result;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Exponents l = lcm(f.front().m, g.front().m);
  Poly left = sub_scaled(Poly{}, Rational(-1) / f.front().c, quotient(l, f.front().m), f);
  return sub_scaled(left, Rational(1) / g.front().c, quotient(l, g.front().m), g);
}

VarMask to_mask(const Exponents& m, int nvars) {
  VarMask out = 0;
  for (int k = 0; k < nvars; ++k) {
    if (m[k] > 1) throw InternalError("Buchberger: non-squarefree term in reduced basis");
    if (m[k]) out |= VarMask{1} << k;
  }
  return out;
}

}  // namespace

std::vector<Binomial> buchberger_reduced_basis(const Graph& g) {
  const int n = g.order();
  if (n > kBuchbergerMaxVertices) {
    throw CapError("Buchberger oracle: " + std::to_string(n) + " vertices exceeds cap " +
                   std::to_string(kBuchbergerMaxVertices));
  }
  // Variable slot k-1 holds x_k, slot n+k-1 holds y_k, so lexicographic
  // comparison of exponent arrays is the required lex order.
  std::vector<Poly> basis;
  for (auto [i, j] : g.edges()) {
    Term lead, tail;
    lead.m[i - 1] = 1;
    lead.m[n + j - 1] = 1;
    lead.c = 1;
    tail.m[j - 1] = 1;
    tail.m[n + i - 1] = 1;
    tail.c = -1;
    basis.push_back(Poly{lead, tail});
  }

  struct Pair {
    std::size_t a, b;
    Exponents lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> queued;
  auto add_pairs_for = [&](std::size_t idx) {
    for (std::size_t k = 0; k < idx; ++k) {
      pending.push_back({k, idx, lcm(basis[k].front().m, basis[idx].front().m)});
      queued.insert({k, idx});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto it = std::min_element(pending.begin(), pending.end(), [](const Pair& x, const Pair& y) {
      return x.lcm != y.lcm ? x.lcm < y.lcm : std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    const Pair pair = *it;
    pending.erase(it);
    queued.erase({pair.a, pair.b});

    const Poly& f = basis[pair.a];
    const Poly& h = basis[pair.b];
    if (coprime(f.front().m, h.front().m)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.a || k == pair.b) continue;
      if (!divides(basis[k].front().m, pair.lcm)) continue;
      const bool ak = queued.count({std::min(pair.a, k), std::max(pair.a, k)}) > 0;
      const bool bk = queued.count({std::min(pair.b, k), std::max(pair.b, k)}) > 0;
      chain = !ak && !bk;
    }
    if (chain) continue;

    Poly r = reduce_fully(s_polynomial(f, h), basis);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalise, then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k || !divides(basis[l].front().m, basis[k].front().m)) continue;
      redundant = basis[l].front().m != basis[k].front().m || l < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Poly lead{minimal[k].front()};
    Poly tail(minimal[k].begin() + 1, minimal[k].end());
    tail = reduce_fully(std::move(tail), minimal, k);
    lead.insert(lead.end(), tail.begin(), tail.end());
    make_monic(lead);
    minimal[k] = std::move(lead);
  }

  std::vector<Binomial> out;
  for (const Poly& p : minimal) {
    if (p.size() != 2 || p[0].c != 1 || p[1].c != -1) {
      throw InternalError("Buchberger: reduced basis element is not a unit-coefficient binomial");
    }
    out.push_back({to_mask(p[0].m, 2 * n), to_mask(p[1].m, 2 * n)});
  }
  std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
    return a.plus_term != b.plus_term ? lex_greater(a.plus_term, b.plus_term) : lex_greater(a.minus_term, b.minus_term);
  });
  return out;
}

MonomialIdealSF buchberger_oracle(const Graph& g) {
  std::vector<VarMask> lead;
  for (const auto& b : buchberger_reduced_basis(g)) lead.push_back(b.plus_term);
  return MonomialIdealSF::minimalized(2 * g.order(), std::move(lead));
}

}  // namespace bei
