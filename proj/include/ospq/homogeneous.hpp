#pragma once

// Quantum homogeneous superspaces E_q, section spaces H_q(V) and holomorphic sections O_q(V),
// all truncated to Peter-Weyl blocks with |lambda| <= cutoff.

#include "ospq/coordring.hpp"

#include <optional>
#include <random>
#include <vector>

namespace ospq {

using SubalgebraSpec = Scope;

/// An element sum_a v_a (x) f_a of V (x) T_q, one coordinate function per basis vector of V.
using BundleElement = std::vector<PWElement>;

/// x o zeta = sum (-1)^{[x][v_a]} v_a (x) x o f_a.
BundleElement circ(const AlgWord& x, const Module& v, const BundleElement& zeta);
/// x . zeta = sum (-1)^{[x][v_a]} v_a (x) x . f_a.
BundleElement dot(const AlgWord& x, const Module& v, const BundleElement& zeta);
/// (S(x) (x) id) zeta.
BundleElement act_antipode(const AlgWord& x, const Module& v, const BundleElement& zeta);
/// a zeta = sum (-1)^{[a][v_a]} v_a (x) a f_a for homogeneous a.
BundleElement left_multiply(const PWElement& a, const Module& v, const BundleElement& zeta);
BundleElement right_multiply(const BundleElement& zeta, const PWElement& a);
bool is_zero(const BundleElement& zeta);

/// x o zeta = (S(x) (x) id) zeta for every generator of scope; returns the first failing generator.
std::optional<GenSymbol> section_violation(const Module& v, const Scope& scope, const BundleElement& zeta);

/// Comodule map delta(w_b) = sum_a (-1)^{[a]([a]+[b])} w_a (x) t^W_ab, as the bundle elements delta(w_b).
std::vector<BundleElement> comodule_map(const Module& w);

struct SectionBlock {
  Weight lambda;
  std::vector<Intertwiner> homs;  // basis of Hom_scope(W(lambda), V)
};

/// zeta_i = sum_j phi(w_j) (x) tilde t_ij for phi = blocks[block].homs[hom], i = row.
struct Section {
  int block = 0;
  int hom = 0;
  int row = 0;
};

struct SectionSpace {
  Scope scope;
  Module v;
  int cutoff = 0;
  std::vector<SectionBlock> blocks;
  std::vector<Section> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  int block_dim(std::size_t b) const;
  int parity(const Section& s) const;
  BundleElement expand(const Section& s) const;
  std::vector<BundleElement> expand_all() const;
};

nlohmann::json to_json(const SectionSpace& s);

/// Coordinates of bundle elements relative to a list of spanning elements.
class BundleSpan {
 public:
  BundleSpan(int dim_v, const std::vector<BundleElement>& elements);
  /// Number of independent elements among those given.
  int rank() const { return static_cast<int>(span_.size()); }
  /// Coefficients over the given elements, or nullopt when outside their span.
  std::optional<Vector> coordinates(const BundleElement& zeta) const;

 private:
  Vector flatten(const BundleElement& zeta, bool& outside) const;

  int dim_v_;
  std::map<std::pair<int, PWIndex>, Eigen::Index> index_;
  SpanBuilder<RatFunc> span_;
  std::vector<int> used_;  // which input elements were independent
  int count_ = 0;
};

/// H_q(V) for a reductive (or, with a parabolic scope, O_q(V)) module V, blocks |lambda| <= cutoff.
/// Throws std::invalid_argument when V violates the relations of its scope.
SectionSpace sections(const Module& v, const Scope& scope, int cutoff);
/// E_q = H_q(trivial) for a reductive scope.
SectionSpace invariant_functions(int n, const Scope& scope, int cutoff);
/// O_q(V) for a parabolic module V.
SectionSpace holomorphic_sections(const Module& v, const Scope& scope, int cutoff);
/// Elements of E_q from invariant_functions.
std::vector<PWElement> invariant_elements(const SectionSpace& e);

/// The truncated section space as a U_q module under the dot action; basis = s.basis, weights and
/// parities from the sections. Throws std::logic_error if the dot action leaves the span.
Module section_module(const SectionSpace& s);

/// Every basis section satisfies the defining condition; the circ action preserves blocks.
Report section_space_check(const SectionSpace& s);
/// Two-sided E_q action, left U_q action under dot, graded commutation and the coaction.
Report module_structure_check(const SectionSpace& s, int e_cutoff, std::mt19937_64& rng, int samples = 4);

struct Trivialization {
  SectionSpace h;                  // H_q(W), cutoff K
  SectionSpace e;                  // E_q, cutoff K + shift
  std::vector<BundleElement> eta;  // eta(basis section)
  std::vector<BundleElement> kappa;
  int shift = 0;  // largest |lambda| among the constituents of W
  Report report;
};
/// eta (right E_q modules) and kappa (left E_q modules) between H_q(W) and W (x) E_q.
Trivialization trivialization(const Module& w, const Scope& scope, int cutoff, std::mt19937_64& rng);

struct ProjectivitySummand {
  Weight mu;
  Weight mu_hat;
  Module v_s;
  Matrix embedding;   // W(mu_hat) x V_s
  Module complement;  // V_s^perp
};
struct ProjectivityWitness {
  std::vector<ProjectivitySummand> summands;
  Report report;
};
ProjectivityWitness projectivity_witness(const Module& v, const Scope& scope, int cutoff, std::mt19937_64& rng);

/// Borel-Weil check for V_mu = extension of the reductive irreducible with highest weight mu.
Report borel_weil_check(int n, const std::vector<int>& theta, const Weight& mu, int cutoff);
/// Hom_{U_q}(W, H_q(V)) against Hom_{U_k}(W, V), and F, F-bar mutually inverse.
Report frobenius_check(const Module& w, const Module& v, const Scope& scope, int cutoff);
/// O_q(W) is isomorphic to W under the dot action, via (id (x) S) delta.
Report corollary_check(const Module& w, const std::vector<int>& theta, int cutoff);

/// Hom dimensions W(m gamma) -> C against the partition count (m|N), N = n - |theta|. Diagnostic only.
nlohmann::json central_homs_diagnostic(int n, const std::vector<int>& theta, int max_m);

}  // namespace ospq
