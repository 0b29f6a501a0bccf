#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"

namespace bei {

// Stanley-Reisner complex of a squarefree monomial ideal, optionally
// restricted to a subset of the variables: a set is a face iff it lies in
// the ground set and contains no generator support.
class SimplicialComplexSF {
 public:
  SimplicialComplexSF(const MonomialIdealSF& ideal, VarMask ground_set);
  explicit SimplicialComplexSF(const MonomialIdealSF& ideal);

  VarMask ground_set() const { return ground_; }
  bool is_face(VarMask s) const;
  // All faces including the empty face, grouped by cardinality.
  std::vector<std::vector<VarMask>> faces_by_size() const;
  // Largest face size (Krull dimension of the quotient when unrestricted).
  int max_face_size() const;
  // Dimensions of reduced homology over the rationals, indexed by k + 1 for H~_k (k >= -1).
  std::vector<std::int64_t> reduced_homology() const;

 private:
  VarMask ground_;
  std::vector<VarMask> gens_;  // generators contained in ground_
};

// Reduced rational homology of an arbitrary simplicial complex given by all
// its faces (closed under subsets), grouped by size. Index k + 1 holds dim H~_k.
std::vector<std::int64_t> reduced_homology(const std::vector<std::vector<VarMask>>& faces_by_size);

struct BettiOptions {
  int max_vars = 20;
  std::size_t max_lattice = 50000;
};

// Graded Betti numbers of R/I with R the polynomial ring in I.n_vars() variables.
struct BettiTable {
  int vars = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> beta_{i,j}, nonzero only
  int pd = 0;
  int reg = 0;
  int depth = 0;

  std::int64_t beta(int i, int j) const;
};

// Distinct unions of nonempty sets of generator supports.
std::vector<VarMask> lcm_lattice(const MonomialIdealSF& ideal, std::size_t cap = 50000);

// Multigraded Betti number beta_{i,sigma}(R/I) for a squarefree degree sigma.
// Uses Hochster's formula on the smaller of the restricted Stanley-Reisner
// complex and its upper Koszul complex.
std::int64_t multigraded_betti(const MonomialIdealSF& ideal, int i, VarMask sigma);

// beta_{i,sigma} for every i, by one homology computation; index i.
std::vector<std::int64_t> multigraded_betti_row(const MonomialIdealSF& ideal, VarMask sigma);

// Same quantities forced through one specific complex; used to cross-check.
std::vector<std::int64_t> multigraded_betti_row_via_restriction(const MonomialIdealSF& ideal, VarMask sigma);
std::vector<std::int64_t> multigraded_betti_row_via_koszul(const MonomialIdealSF& ideal, VarMask sigma);

BettiTable betti_table(const MonomialIdealSF& ideal, const BettiOptions& options = {});

// Krull dimension of R/I: the largest face of the Stanley-Reisner complex.
int krull_dimension(const MonomialIdealSF& ideal);

struct DepthReg {
  int depth = 0;
  int reg = 0;
  bool operator==(const DepthReg&) const = default;
};

// depth and regularity of R/J_G (m = 2), read off R/in(J_G).
DepthReg oracle_depth_reg(const Graph& g, const BettiOptions& options = {});
BettiTable oracle_betti_table(const Graph& g, const BettiOptions& options = {});

}  // namespace bei
