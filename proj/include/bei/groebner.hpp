#pragma once

#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"

namespace bei {

// Lex order x1 > x2 > ... > xn > y1 > ... > yn on squarefree monomials,
// using the variable convention of MonomialIdealSF.
bool lex_greater(VarMask a, VarMask b);

inline VarMask x_var(int k) { return VarMask{1} << (k - 1); }
inline VarMask y_var(int k, int n) { return VarMask{1} << (n + k - 1); }

// A path i = i_0, ..., i_r = j (i < j) whose interior vertices all lie
// outside [i, j] and whose vertex set induces exactly the path.
struct AdmissiblePath {
  std::vector<int> vertices;
  VarMask monomial_u = 0;  // product of x_k (k > j) and y_l (l < i) over interior vertices

  int from() const { return vertices.front(); }
  int to() const { return vertices.back(); }
};

// plus_term - minus_term, both with coefficient one; plus_term is the lex-leading term.
struct Binomial {
  VarMask plus_term = 0;
  VarMask minus_term = 0;

  bool operator==(const Binomial&) const = default;
};

inline constexpr int kGroebnerMaxVertices = 24;
inline constexpr int kBuchbergerMaxVertices = 8;

std::vector<AdmissiblePath> admissible_paths(const Graph& g, int i, int j);

// u_pi * (x_i y_j - x_j y_i) over all admissible paths, deduplicated and
// sorted by leading term, lex-descending.
std::vector<Binomial> reduced_groebner_basis(const Graph& g);

MonomialIdealSF initial_ideal(const Graph& g);

// Reduced lex Groebner basis of J_G computed from the edge binomials by
// Buchberger's algorithm over exact rationals. Throws InternalError if an
// element is not a squarefree binomial with unit coefficients.
std::vector<Binomial> buchberger_reduced_basis(const Graph& g);

// Leading-term ideal of buchberger_reduced_basis, minimalised.
MonomialIdealSF buchberger_oracle(const Graph& g);

}  // namespace bei
