#pragma once

// Vector module, duals, graded tensor products, irreducibles W(lambda), decompositions,
// restriction to reductive/parabolic subalgebras and intertwiner spaces.

#include "ospq/module.hpp"
#include "ospq/uqalg.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace ospq {

/// Position of w_mu in the vector module basis w_1..w_n, w_0, w_-n..w_-1.
int vector_index(int n, int mu);
/// Inverse of vector_index.
int vector_label(int n, int index);

Module vector_module(int n);

/// Graded dual: x w*_a = sum_b (-1)^{[x][a]} t(S(x))_{ab} w*_b. With use_inverse the antipode
/// is replaced by S^-1 (the other-sided dual, also a module).
Module dual_module(const Module& m, bool use_inverse = false);

/// a (x) b with basis index (i, r) -> i * dim(b) + r and action through the coproduct.
Module tensor(const Module& a, const Module& b);
/// Lambda^{(x) k}, memoized; k = 0 gives the trivial module.
std::shared_ptr<const Module> vector_power(int n, int k);

struct HighestWeightVector {
  Weight weight;
  int parity = 0;
  Vector vec;
};

/// Basis of the joint kernel of all e_i, per (weight, parity) block with weights in lexicographically
/// descending order; each block basis is echelonized (first nonzero entry 1).
std::vector<HighestWeightVector> highest_weight_vectors(const Module& m);

/// W(lambda) with its basis w_k = F_k w_0, F_k a word in the f_i.
struct Irrep {
  Weight lambda;
  Module module;
  std::vector<AlgWord> words;

  int dim() const { return module.dim(); }
};

/// W(lambda) extracted from Lambda^{(x)|lambda|}; memoized per (n, lambda).
std::shared_ptr<const Irrep> irreducible(int n, const Weight& lambda);

/// Submodule generated from a highest weight vector u of the given weight inside ambient:
/// basis by breadth-first application of the lowering generators in scope, first independent
/// candidate wins. The result carries the scope of the ambient module's generators in `scope`.
struct Generated {
  Module module;
  std::vector<AlgWord> words;
  std::vector<Vector> vectors;  // basis vectors inside the ambient space
};
Generated generate_submodule(const Module& ambient, const Vector& u, const Weight& weight, int parity,
                             const Scope& scope);

struct Summand {
  Weight lambda;
  int degree = 0;  // parity of the highest weight vector
  std::shared_ptr<const Irrep> irrep;
  SparseMatrix inclusion;   // dim(m) x d_lambda
  SparseMatrix projection;  // d_lambda x dim(m)
};

struct Decomposition {
  std::vector<Summand> summands;
  /// (lambda, multiplicity) in order of first appearance.
  std::vector<std::pair<Weight, int>> multiplicities() const;
};

/// Complete reduction of a U_q module into copies of W(lambda); throws std::logic_error when the
/// reassembly identities fail.
Decomposition decompose(const Module& m);
Report check_decomposition(const Module& m, const Decomposition& d);

/// (lowest weight, lambda dagger = -lowest weight) of W(lambda).
std::pair<Weight, Weight> lowest_weight_and_dagger(int n, const Weight& lambda);

/// Matrix M of the isomorphism Lambda* -> Lambda, w*_mu = sum_nu w_nu M_{nu mu}, normalized by
/// M_{1,-1} = 1. Throws std::logic_error when no isomorphism exists.
Matrix self_duality_M(int n);
/// The closed form m_mu delta_{mu + nu, 0}.
Matrix self_duality_M_expected(int n);

/// Same matrices, different scope tag.
Module restrict(const Module& m, const Scope& scope);
/// Reductive module -> parabolic module with e_j (j outside theta) acting by zero.
Module extend_to_parabolic(const Module& v);

/// The irreducible U_k module (reductive theta) with highest weight mu, realized inside
/// W(dominant_in_weyl_orbit(mu)).
Module reductive_irreducible(int n, const std::vector<int>& theta, const Weight& mu);
/// Lowest weight of a reductive/parabolic module generated by one highest weight vector:
/// the weight annihilated by all scoped f_i.
Weight lowest_weight(const Module& v);

struct Intertwiner {
  Matrix matrix;  // target x source
  int degree = 0;
  Scope scope;
};

/// Echelonized basis of graded intertwiners a -> b for the generators of scope, degree 0 first.
std::vector<Intertwiner> hom_space(const Module& a, const Module& b, const Scope& scope);
/// phi x_a = (-1)^{[phi][x]} x_b phi for all scoped generators.
bool is_intertwiner(const Intertwiner& phi, const Module& a, const Module& b);

/// Graded tensor product of maps: (p (x) r)(v (x) w) = (-1)^{[r][v]} p v (x) r w.
Matrix tensor_maps(const Matrix& p, const Matrix& r, int r_degree, const std::vector<int>& p_source_parity);

/// phi1 (x) phi2 restricted to W(lambda1 + lambda2) inside W(lambda1) (x) W(lambda2).
/// Throws std::logic_error if the result vanishes.
Intertwiner cartan_product_hom(int n, const Weight& lambda1, const Intertwiner& phi1, const Weight& lambda2,
                               const Intertwiner& phi2);

}  // namespace ospq
