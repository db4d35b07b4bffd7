#pragma once

// Finite-dimensional graded U_q(osp(1|2n)) modules as sparse generator matrices.

#include "ospq/linalg.hpp"
#include "ospq/rootdata.hpp"

#include <string>
#include <vector>

namespace ospq {

enum class Flavor { Full, Reductive, Parabolic };

/// Which generators a module (or intertwiner) is asked to respect.
/// Reductive: all k_i, e_j and f_j for j in theta. Parabolic: reductive plus e_j for j outside theta.
struct Scope {
  Flavor flavor = Flavor::Full;
  std::vector<int> theta;  // sorted, 1-based

  static Scope full() { return {}; }
  static Scope reductive(std::vector<int> theta);
  static Scope parabolic(std::vector<int> theta);

  bool in_theta(int i) const;
  bool has_e(int i) const { return flavor != Flavor::Reductive || in_theta(i); }
  bool has_f(int i) const { return flavor == Flavor::Full || in_theta(i); }
  std::string str() const;
  friend bool operator==(const Scope&, const Scope&) = default;
};

/// Parses "1,2" (or "" for the empty set) into a sorted subset of {1..n}.
std::vector<int> parse_theta(const std::string& text, int n);

struct Module {
  int n = 0;
  std::vector<int> parity;
  std::vector<Weight> weights;
  std::vector<SparseMatrix> e;  // e[i - 1]
  std::vector<SparseMatrix> f;
  Scope scope;

  int dim() const { return static_cast<int>(parity.size()); }
  const SparseMatrix& E(int i) const { return e[static_cast<std::size_t>(i - 1)]; }
  const SparseMatrix& F(int i) const { return f[static_cast<std::size_t>(i - 1)]; }
  /// Diagonal k_i^power read off from the weights.
  SparseMatrix K(int i, int power = 1) const;
  /// Grading operator diag((-1)^[a]).
  SparseMatrix parity_operator() const;
  /// Multiset of weights, sorted.
  std::vector<Weight> character() const;
};

/// A module with all generators acting by zero except the torus: the line C_mu
/// (or a direct sum of lines with the given weights and parities).
Module weight_module(int n, const std::vector<Weight>& weights, const std::vector<int>& parity = {});

/// Module JSON: {"n", "dim", "parity", "weights", "gens": {"e1": [[row, col, ratfunc], ...], ...}}.
nlohmann::json to_json(const Module& m);
Module module_from_json(const nlohmann::json& j);

/// True when every nonzero entry of m connects basis vectors whose parities differ by degree.
bool has_degree(const SparseMatrix& m, const std::vector<int>& row_parity, const std::vector<int>& col_parity,
                int degree);

}  // namespace ospq
