#pragma once

// The coordinate superalgebra T_q in its Peter-Weyl basis t^(lambda)_ij, i, j indexing the
// canonical basis of W(lambda). Elements pair with U_q through t_ij(x) = t(x)_ij.

#include "ospq/repcore.hpp"

#include <compare>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace ospq {

struct PWIndex {
  Weight lambda;
  int i = 0;
  int j = 0;

  int n() const { return lambda.rank(); }
  /// [i] + [j] in W(lambda).
  int parity() const;
  friend bool operator==(const PWIndex&, const PWIndex&) = default;
  friend std::strong_ordering operator<=>(const PWIndex& a, const PWIndex& b);
};

class PWElement {
 public:
  using Terms = std::map<PWIndex, RatFunc>;

  PWElement() = default;
  static PWElement basis(const Weight& lambda, int i, int j, const RatFunc& c = RatFunc(1));
  /// The unit t^(0) = epsilon.
  static PWElement one(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const PWIndex& idx) const;
  /// Largest |lambda| in the support (0 for the zero element).
  int degree_bound() const;

  void add(const PWIndex& idx, const RatFunc& c);
  PWElement& operator+=(const PWElement& o);
  PWElement& operator-=(const PWElement& o);
  friend PWElement operator+(PWElement a, const PWElement& b) { return a += b; }
  friend PWElement operator-(PWElement a, const PWElement& b) { return a -= b; }
  friend PWElement operator*(const RatFunc& c, const PWElement& f);
  friend bool operator==(const PWElement&, const PWElement&) = default;

 private:
  Terms terms_;
};

/// JSON: [{"lambda": [...], "i": int, "j": int, "coeff": RatFunc}, ...] in index order.
nlohmann::json to_json(const PWElement& f);
PWElement pw_from_json(const nlohmann::json& j);
/// Terms "t[lambda;i;j]" (lambda comma separated) joined by '+', each with an optional rational
/// prefactor, e.g. "t[1,0;0;2] + -3/2*t[0,0;0;0]".
PWElement parse_pw(const std::string& text, int n);

/// Sum over terms of coeff * f_{(1)} (x) f_{(2)}.
using PWTensor = std::map<std::pair<PWIndex, PWIndex>, RatFunc>;

RatFunc evaluate(const PWElement& f, const AlgWord& x);
RatFunc evaluate(const PWElement& f, const AlgElement& x);
/// Graded pairing <a (x) b, x (x) y> = (-1)^{[b][x]} a(x) b(y).
RatFunc evaluate(const PWTensor& t, const AlgWord& x, const AlgWord& y);

/// Product through the decomposition of W(lambda) (x) W(mu); the unit is t^(0).
PWElement multiply(const PWElement& f, const PWElement& g);
/// Delta_0(t_ij) = sum_k (-1)^{([i]+[k])([j]+[k])} t_ik (x) t_kj.
PWTensor coproduct0(const PWElement& f);
/// <S_0 f, x> = <f, S x>, expressed in the basis of W(lambda dagger).
PWElement antipode0(const PWElement& f);
/// <S_0^-1 f, x> = <f, S^-1 x>.
PWElement antipode0_inverse(const PWElement& f);
RatFunc counit0(const PWElement& f);
/// tilde t^(lambda)_ji = (-1)^{[i]([i]+[j])} S_0(t^(lambda)_ij).
PWElement tilde(const Weight& lambda, int j, int i);

/// Matrix coefficients t^W_ab (row-major, dim(W)^2 entries) of an arbitrary module W expanded in the
/// Peter-Weyl basis through the decomposition of W.
std::vector<PWElement> matrix_coefficients(const Module& w);

/// Coefficient of t^(0).
RatFunc haar(const PWElement& f);

/// Right translation: (x o f)(y) = f(y x).
PWElement circ(const AlgWord& x, const PWElement& f);
PWElement circ(const AlgElement& x, const PWElement& f);
/// Left translation: (x . f)(y) = (-1)^{[x][y]} f(S^-1(x) y).
PWElement dot(const AlgWord& x, const PWElement& f);
PWElement dot(const AlgElement& x, const PWElement& f);

/// Supertrace of K_{2rho} on W(lambda); throws std::logic_error if it vanishes.
RatFunc superdimension(int n, const Weight& lambda);
/// Even dimension minus odd dimension.
int classical_superdimension(int n, const Weight& lambda);

/// All basis elements t^(lambda)_ij with |lambda| <= cutoff.
std::vector<PWIndex> pw_basis(int n, int cutoff);

/// Both identities of the orthogonality lemma for all index combinations, LHS from multiply + haar.
Report orthogonality_check(int n, const Weight& lambda, const Weight& mu);
/// (int (x) id)Delta(f) = (id (x) int)Delta(f) = int(f) 1 on the basis up to the cutoff, and int 1 = 1.
Report haar_invariance_check(int n, int cutoff);
/// <S_0^2 f, x> = <f, K_2rho x K_2rho^-1> on the basis up to the cutoff and sampled words.
Report antipode_square_check(int n, int cutoff, std::mt19937_64& rng, int samples = 6);
/// Evaluation homomorphism, coproduct pairing and associativity on sampled basis elements.
Report product_check(int n, int cutoff, std::mt19937_64& rng, int samples = 6);
/// Delta_0 and S_0 of the vector-module coordinates against the closed formulas with m_mu.
Report vector_coordinate_formulas_check(int n);

}  // namespace ospq
