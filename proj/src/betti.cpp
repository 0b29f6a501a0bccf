#include "bei/betti.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "bei/error.hpp"
#include "bei/groebner.hpp"

namespace bei {

namespace {

struct CoefficientOverflow {};

// Checked int64 arithmetic; the boundary matrices start with entries +-1 and
// reduction rarely grows them, so overflow triggers a big-integer rerun.
struct Checked {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
};

struct Big {
  using cpp_int = boost::multiprecision::cpp_int;
  static cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
  static cpp_int sub(const cpp_int& a, const cpp_int& b) { return a - b; }
  static cpp_int gcd(const cpp_int& a, const cpp_int& b) { return boost::multiprecision::gcd(a, b); }
};

template <class T>
struct Entry {
  int row;
  T value;
};

template <class T>
using Column = std::vector<Entry<T>>;  // sorted by row, nonzero values

// Column reduction over Q with integer-valued columns: a column is replaced
// by a nonzero multiple of itself plus multiples of earlier columns, which
// leaves the rank unchanged. Returns the reduced pivot rows.
template <class T, class Ops>
class RankReducer {
 public:
  explicit RankReducer(std::size_t rows) : owner_(rows, -1) {}

  // Returns the pivot row if the column survives, -1 if it reduces to zero.
  int add(Column<T> col) {
    while (!col.empty()) {
      const int piv = col.back().row;
      const int own = owner_[static_cast<std::size_t>(piv)];
      if (own < 0) {
        owner_[static_cast<std::size_t>(piv)] = static_cast<int>(reduced_.size());
        reduced_.push_back(std::move(col));
        return piv;
      }
      col = eliminate(col, reduced_[static_cast<std::size_t>(own)]);
    }
    return -1;
  }

 private:
  static Column<T> eliminate(const Column<T>& v, const Column<T>& w) {
    const T a = w.back().value;
    const T b = v.back().value;
    Column<T> out;
    out.reserve(v.size() + w.size());
    std::size_t p = 0, q = 0;
    while (p < v.size() || q < w.size()) {
      if (q >= w.size() || (p < v.size() && v[p].row < w[q].row)) {
        out.push_back({v[p].row, Ops::mul(a, v[p].value)});
        ++p;
      } else if (p >= v.size() || w[q].row < v[p].row) {
        out.push_back({w[q].row, Ops::sub(T(0), Ops::mul(b, w[q].value))});
        ++q;
      } else {
        T val = Ops::sub(Ops::mul(a, v[p].value), Ops::mul(b, w[q].value));
        if (val != 0) out.push_back({v[p].row, std::move(val)});
        ++p;
        ++q;
      }
    }
    if (!out.empty()) {
      T g = out.front().value < 0 ? T(-out.front().value) : out.front().value;
      for (const auto& e : out) {
        if (g == 1) break;
        g = Ops::gcd(g, e.value < 0 ? T(-e.value) : e.value);
      }
      if (g > 1) {
        for (auto& e : out) e.value /= g;
      }
    }
    return out;
  }

  std::vector<int> owner_;
  std::vector<Column<T>> reduced_;
};

template <class T, class Ops>
std::vector<std::int64_t> homology_impl(const std::vector<std::vector<VarMask>>& faces) {
  const std::size_t levels = faces.size();  // sizes 0..levels-1
  std::vector<std::int64_t> rank(levels + 1, 0);  // rank[s] = rank of boundary C_s -> C_{s-1}
  std::vector<char> killed;  // faces of the current level that are pivots of the level above
  for (std::size_t s = levels; s-- > 1;) {
    const auto& cols = faces[s];
    const auto& rows = faces[s - 1];
    std::vector<char> next_killed(rows.size(), 0);
    RankReducer<T, Ops> reducer(rows.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!killed.empty() && killed[c]) continue;
      Column<T> col;
      int sign = 1;
      for (VarMask m = cols[c]; m; m &= m - 1) {
        const VarMask face = cols[c] & ~(m & (~m + 1));
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        col.push_back({static_cast<int>(it - rows.begin()), T(sign)});
        sign = -sign;
      }
      std::sort(col.begin(), col.end(), [](const Entry<T>& x, const Entry<T>& y) { return x.row < y.row; });
      const int piv = reducer.add(std::move(col));
      if (piv >= 0) {
        ++rank[s];
        next_killed[static_cast<std::size_t>(piv)] = 1;
      }
    }
    killed = std::move(next_killed);
  }
  std::vector<std::int64_t> h(levels, 0);
  for (std::size_t s = 0; s < levels; ++s) {
    h[s] = static_cast<std::int64_t>(faces[s].size()) - rank[s] - rank[s + 1];
  }
  return h;
}

VarMask all_vars(int n) { return n >= 64 ? ~VarMask{0} : (VarMask{1} << n) - 1; }

std::vector<VarMask> generators_within(const MonomialIdealSF& ideal, VarMask sigma) {
  std::vector<VarMask> out;
  for (VarMask g : ideal.generators()) {
    if ((g & ~sigma) == 0) out.push_back(g);
  }
  return out;
}

bool contains_any(const std::vector<VarMask>& gens, VarMask s) {
  for (VarMask g : gens) {
    if ((g & ~s) == 0) return true;
  }
  return false;
}

enum class Route { Smaller, Restriction, Koszul };

std::vector<std::int64_t> betti_row(const MonomialIdealSF& ideal, VarMask sigma, Route route) {
  const int size = popcount(sigma);
  std::vector<std::int64_t> row(static_cast<std::size_t>(size) + 1, 0);
  if (sigma == 0) {
    row[0] = 1;
    return row;
  }
  const auto gens = generators_within(ideal, sigma);

  // Split the subsets of sigma into independent (faces of the restriction)
  // and dependent ones (complements are faces of the upper Koszul complex).
  std::vector<std::vector<VarMask>> restriction(static_cast<std::size_t>(size) + 1);
  std::vector<std::vector<VarMask>> koszul(static_cast<std::size_t>(size) + 1);
  VarMask sub = sigma;
  while (true) {
    if (contains_any(gens, sub)) {
      const VarMask comp = sigma & ~sub;
      koszul[static_cast<std::size_t>(popcount(comp))].push_back(comp);
    } else {
      restriction[static_cast<std::size_t>(popcount(sub))].push_back(sub);
    }
    if (sub == 0) break;
    sub = (sub - 1) & sigma;
  }
  std::size_t n_restr = 0, n_kosz = 0;
  for (auto& level : restriction) n_restr += level.size();
  for (auto& level : koszul) n_kosz += level.size();
  bool use_restriction = route == Route::Restriction || (route == Route::Smaller && n_restr <= n_kosz);

  auto& faces = use_restriction ? restriction : koszul;
  while (!faces.empty() && faces.back().empty()) faces.pop_back();
  for (auto& level : faces) std::sort(level.begin(), level.end());
  const auto h = reduced_homology(faces);

  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    if (!h[idx]) continue;
    const int k = static_cast<int>(idx) - 1;
    // Hochster: beta_{i,sigma} = h~_{|sigma|-i-1}(Delta_sigma) = h~_{i-2}(K^sigma).
    const int i = use_restriction ? size - k - 1 : k + 2;
    if (i < 0 || i > size) throw InternalError("Hochster formula produced an out-of-range homological degree");
    row[static_cast<std::size_t>(i)] += h[idx];
  }
  return row;
}

}  // namespace

std::vector<std::int64_t> reduced_homology(const std::vector<std::vector<VarMask>>& faces_by_size) {
  for (const auto& level : faces_by_size) {
    if (!std::is_sorted(level.begin(), level.end())) throw InputError("reduced_homology: face lists must be sorted");
  }
  try {
    return homology_impl<std::int64_t, Checked>(faces_by_size);
  } catch (const CoefficientOverflow&) {
    return homology_impl<boost::multiprecision::cpp_int, Big>(faces_by_size);
  }
}

// ---------------------------------------------------------------- complex

SimplicialComplexSF::SimplicialComplexSF(const MonomialIdealSF& ideal, VarMask ground_set)
    : ground_(ground_set & all_vars(ideal.n_vars())), gens_(generators_within(ideal, ground_)) {}

SimplicialComplexSF::SimplicialComplexSF(const MonomialIdealSF& ideal)
    : SimplicialComplexSF(ideal, all_vars(ideal.n_vars())) {}

bool SimplicialComplexSF::is_face(VarMask s) const { return (s & ~ground_) == 0 && !contains_any(gens_, s); }

std::vector<std::vector<VarMask>> SimplicialComplexSF::faces_by_size() const {
  std::vector<std::vector<VarMask>> out(1, std::vector<VarMask>{0});
  // Grow faces one level at a time; a set is a face iff it has no generator.
  std::vector<VarMask> level{0};
  while (!level.empty()) {
    std::vector<VarMask> next;
    for (VarMask f : level) {
      const int top = f ? 64 - __builtin_clzll(f) : 0;  // extend only by larger variables
      for (VarMask m = ground_ & ~((top >= 64) ? ~VarMask{0} : ((VarMask{1} << top) - 1)); m; m &= m - 1) {
        const VarMask g = f | (m & (~m + 1));
        if (!contains_any(gens_, g)) next.push_back(g);
      }
    }
    std::sort(next.begin(), next.end());
    if (!next.empty()) out.push_back(next);
    level = std::move(next);
  }
  return out;
}

int SimplicialComplexSF::max_face_size() const {
  // Branch and bound over the ground set in index order.
  std::vector<int> vars;
  for (VarMask m = ground_; m; m &= m - 1) vars.push_back(__builtin_ctzll(m));
  int best = 0;
  auto rec = [&](auto&& self, std::size_t k, VarMask face, int sz) -> void {
    if (sz + static_cast<int>(vars.size() - k) <= best) return;
    if (k == vars.size()) {
      best = sz;
      return;
    }
    const VarMask with = face | (VarMask{1} << vars[k]);
    if (!contains_any(gens_, with)) self(self, k + 1, with, sz + 1);
    self(self, k + 1, face, sz);
  };
  rec(rec, 0, 0, 0);
  return best;
}

std::vector<std::int64_t> SimplicialComplexSF::reduced_homology() const { return bei::reduced_homology(faces_by_size()); }

// ---------------------------------------------------------------- Betti numbers

std::int64_t BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<VarMask> lcm_lattice(const MonomialIdealSF& ideal, std::size_t cap) {
  const auto& gens = ideal.generators();
  std::unordered_set<VarMask> seen(gens.begin(), gens.end());
  std::vector<VarMask> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<VarMask> next;
    for (VarMask a : frontier) {
      for (VarMask g : gens) {
        const VarMask u = a | g;
        if (seen.insert(u).second) {
          next.push_back(u);
          if (seen.size() > cap) {
            throw CapError("lcm lattice exceeds cap " + std::to_string(cap) + " (reached " + std::to_string(seen.size()) +
                           " elements)");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<VarMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](VarMask a, VarMask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

std::vector<std::int64_t> multigraded_betti_row(const MonomialIdealSF& ideal, VarMask sigma) {
  return betti_row(ideal, sigma, Route::Smaller);
}

std::vector<std::int64_t> multigraded_betti_row_via_restriction(const MonomialIdealSF& ideal, VarMask sigma) {
  return betti_row(ideal, sigma, Route::Restriction);
}

std::vector<std::int64_t> multigraded_betti_row_via_koszul(const MonomialIdealSF& ideal, VarMask sigma) {
  return betti_row(ideal, sigma, Route::Koszul);
}

std::int64_t multigraded_betti(const MonomialIdealSF& ideal, int i, VarMask sigma) {
  const auto row = multigraded_betti_row(ideal, sigma);
  return i >= 0 && i < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(i)] : 0;
}

BettiTable betti_table(const MonomialIdealSF& ideal, const BettiOptions& options) {
  if (ideal.n_vars() > options.max_vars) {
    throw CapError("betti_table: " + std::to_string(ideal.n_vars()) + " variables exceeds cap " +
                   std::to_string(options.max_vars));
  }
  BettiTable t;
  t.vars = ideal.n_vars();
  t.entries[{0, 0}] = 1;
  for (VarMask sigma : lcm_lattice(ideal, options.max_lattice)) {
    const auto row = multigraded_betti_row(ideal, sigma);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) t.entries[{static_cast<int>(i), popcount(sigma)}] += row[i];
    }
  }
  for (const auto& [key, value] : t.entries) {
    t.pd = std::max(t.pd, key.first);
    t.reg = std::max(t.reg, key.second - key.first);
  }
  t.depth = t.vars - t.pd;
  return t;
}

int krull_dimension(const MonomialIdealSF& ideal) { return SimplicialComplexSF(ideal).max_face_size(); }

BettiTable oracle_betti_table(const Graph& g, const BettiOptions& options) {
  return betti_table(initial_ideal(g), options);
}

DepthReg oracle_depth_reg(const Graph& g, const BettiOptions& options) {
  const auto t = oracle_betti_table(g, options);
  return {t.depth, t.reg};
}

}  // namespace bei
