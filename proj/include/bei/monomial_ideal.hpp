#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bei {

using VarMask = std::uint64_t;

inline constexpr int kMaxVariables = 64;

// Squarefree monomial ideal given by its minimal generator supports.
// Variables are numbered 1..n_vars; generator bit (k-1) stands for variable k.
// For a graph on [n] the convention is x_k -> k and y_k -> n + k.
class MonomialIdealSF {
 public:
  MonomialIdealSF() = default;

  // Minimalises the given supports (drops duplicates and non-minimal ones).
  static MonomialIdealSF minimalized(int n_vars, std::vector<VarMask> supports);
  // Throws InputError if the supports are not pairwise inclusion-incomparable.
  static MonomialIdealSF from_minimal(int n_vars, std::vector<VarMask> supports);

  int n_vars() const { return n_vars_; }
  // Sorted ascending by mask value.
  const std::vector<VarMask>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Generator supports as lists of 1-based variable indices.
  std::vector<std::vector<int>> generator_indices() const;

  bool contains_monomial(VarMask support) const;

  bool operator==(const MonomialIdealSF&) const = default;

 private:
  MonomialIdealSF(int n_vars, std::vector<VarMask> gens) : n_vars_(n_vars), gens_(std::move(gens)) {}

  int n_vars_ = 0;
  std::vector<VarMask> gens_;
};

// Human-readable product such as "x1*y2" for a graph with n vertices.
std::string monomial_name(VarMask support, int n_vertices);

}  // namespace bei
