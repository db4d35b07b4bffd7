#pragma once

// U_q(osp(1|2n)) as formal words in the generators, with the Hopf structure
//   Delta(k) = k (x) k,  Delta(e) = e (x) k + 1 (x) e,  Delta(f) = f (x) 1 + k^-1 (x) f,
//   S(k) = k^-1,  S(e) = -e k^-1,  S(f) = -k f,  eps(e) = eps(f) = 0,  eps(k) = 1.
// Words are never normal ordered; identities are checked by evaluating in modules.

#include "ospq/module.hpp"
#include "ospq/report.hpp"

#include <random>
#include <string>
#include <vector>

namespace ospq {

struct GenSymbol {
  enum class Kind { E, F, K };
  Kind kind = Kind::K;
  int index = 1;
  int power = 1;  // only for K
  int parity = 0;

  static GenSymbol e(int n, int i) { return {Kind::E, i, 1, i == n ? 1 : 0}; }
  static GenSymbol f(int n, int i) { return {Kind::F, i, 1, i == n ? 1 : 0}; }
  static GenSymbol k(int i, int power = 1) { return {Kind::K, i, power, 0}; }

  std::string str() const;
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

struct AlgWord {
  std::vector<GenSymbol> factors;

  AlgWord() = default;
  AlgWord(std::initializer_list<GenSymbol> g) : factors(g) {}
  explicit AlgWord(std::vector<GenSymbol> g) : factors(std::move(g)) {}

  int parity() const;
  bool empty() const { return factors.empty(); }
  std::string str() const;

  friend AlgWord operator*(const AlgWord& a, const AlgWord& b);
  friend bool operator==(const AlgWord&, const AlgWord&) = default;
};

/// "e1 f1 k2^-1", "1" or "" for the unit. Indices must lie in 1..n.
AlgWord parse_word(const std::string& text, int n);

struct WordTerm {
  RatFunc coeff;
  AlgWord word;
};
using AlgElement = std::vector<WordTerm>;

/// coeff * legs[0] (x) legs[1] (x) ...
struct TensorTerm {
  RatFunc coeff;
  std::vector<AlgWord> legs;
};
using TensorElement = std::vector<TensorTerm>;

TensorElement coproduct(const GenSymbol& g);
/// Multiplicative extension with (a (x) b)(c (x) d) = (-1)^{[b][c]} ac (x) bd.
TensorElement coproduct(const AlgWord& w);
/// Applies Delta to one leg of every term, inserting the new leg after it.
TensorElement coproduct_on_leg(const TensorElement& t, std::size_t leg);

WordTerm antipode(const GenSymbol& g);
/// Graded anti-homomorphism S(ab) = (-1)^{[a][b]} S(b) S(a).
WordTerm antipode(const AlgWord& w);
WordTerm antipode_inverse(const GenSymbol& g);
WordTerm antipode_inverse(const AlgWord& w);
RatFunc counit(const AlgWord& w);

/// K_{2rho} = prod_j k_j^{c_j}.
AlgWord k2rho_word(int n);

/// All generators e_i, f_i, k_i and k_i^-1 of U_q for rank n.
std::vector<GenSymbol> generators(int n);
/// The generators of a scoped subalgebra.
std::vector<GenSymbol> generators(int n, const Scope& scope);

/// Uniformly random word in e_i, f_i, k_i^{+-1}.
AlgWord random_word(int n, int length, std::mt19937_64& rng);

SparseMatrix evaluate(const Module& m, const GenSymbol& g);
SparseMatrix evaluate(const Module& m, const AlgWord& w);
SparseMatrix evaluate(const Module& m, const AlgElement& x);
/// Action on legs[0] (x) legs[1] (x) ... with
/// (x_1 (x) x_2)(v (x) w) = (-1)^{[x_2][v]} x_1 v (x) x_2 w, generalized to any number of legs.
SparseMatrix evaluate(const std::vector<const Module*>& legs, const TensorElement& t);

/// Defining relations, including both Serre families through the Ad operators.
Report check_relations(const Module& m);
/// Counit and antipode axioms on m for every generator, coassociativity on m (x) m (x) m.
Report check_hopf(const Module& m);
/// S^2(x) = K_2rho x K_2rho^-1 for every generator, as matrices on m.
Report check_antipode_square(const Module& m);

}  // namespace ospq
