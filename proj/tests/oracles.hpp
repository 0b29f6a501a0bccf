#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph and MonomialIdealSF containers.

#include <cstdint>
#include <vector>

#include "bei/graph.hpp"
#include "bei/monomial_ideal.hpp"

namespace oracle {

// Isomorphism by trying every permutation.
bool isomorphic_brute(const bei::Graph& a, const bei::Graph& b);

int components_brute(const bei::Graph& g, bei::Mask within);

// Cutsets straight from the definition, as masks sorted ascending.
std::vector<bei::Mask> cutsets_brute(const bei::Graph& g);

// Every edge subset checked for being an induced matching.
int induced_matching_brute(const bei::Graph& g);

// Smallest vertex set whose removal leaves >= 2 components; n - 1 for complete graphs.
int kappa_brute(const bei::Graph& g);

// Rank of an integer matrix modulo a large prime.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, int cols);

// Reduced homology of the complex of subsets of `ground` avoiding every
// generator support, index k + 1 holding dim H~_k (mod-p ranks).
std::vector<int> homology_brute(const std::vector<bei::VarMask>& gens, bei::VarMask ground, int n_vars);

struct Homological {
  int depth = 0;
  int reg = 0;
  int pd = 0;
};

// Hochster's formula summed over every subset of the variables.
Homological hochster_all_subsets(const bei::MonomialIdealSF& ideal);

// depth k[D] = min over faces F of |F| + 1 + (first index with H~_i(lk F) != 0).
int depth_via_links(const bei::MonomialIdealSF& ideal);

// Largest face of the Stanley-Reisner complex by subset sweep.
int krull_brute(const bei::MonomialIdealSF& ideal);

}  // namespace oracle
