#pragma once

// Root datum of osp(1|2n): weights in the epsilon basis, simple roots, Cartan matrix,
// graded 2rho and the hyperoctahedral Weyl group action.

#include "ospq/scalars.hpp"

#include <Eigen/Core>

#include <compare>
#include <string>
#include <vector>

namespace ospq {

/// A weight sum_i c_i eps_i with exact rational coordinates; (eps_i, eps_j) = delta_ij.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank) : c_(static_cast<std::size_t>(rank), Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}
  static Weight from_ints(const std::vector<int>& coords);
  /// eps_i, 1-based; eps_0 = 0 and eps_{-i} = -eps_i as in the vector-module labels.
  static Weight epsilon(int rank, int label);

  int rank() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_integer() const;
  /// Throws std::domain_error for non-integer coordinates.
  std::vector<int> to_ints() const;
  /// Sum of coordinates; |lambda| for dominant weights.
  Rational size() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "l1,l2,..." with rationals as a/b.
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

Rational dot(const Weight& a, const Weight& b);

/// Parses "1,0" / "1/2,-1" (missing trailing coordinates are zero).
Weight parse_weight(const std::string& text, int rank);
nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

struct RootDatum {
  int n = 0;
  std::vector<Weight> simple_roots;  // alpha_1..alpha_n
  std::vector<int> parity;           // alpha_n odd
  Eigen::MatrixXi cartan;            // a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
  Weight highest_root;

  const Weight& alpha(int i) const { return simple_roots[static_cast<std::size_t>(i - 1)]; }
  /// Integer pairing (alpha_i, mu); throws std::domain_error when not an integer.
  int pairing(int i, const Weight& mu) const;
};

RootDatum build_root_datum(int n);

/// l_i = 2(mu, alpha_i)/(alpha_i, alpha_i) for i < n and l_n = (mu, alpha_n)/(alpha_n, alpha_n).
std::vector<Rational> integral_labels(const RootDatum& d, const Weight& mu);
bool is_integral(const RootDatum& d, const Weight& mu);
bool is_dominant(const RootDatum& d, const Weight& mu);

/// Even positive roots minus odd positive roots: sum_i (2(n - i) + 1) eps_i.
Weight two_rho(const RootDatum& d);
/// c with sum_j c_j alpha_j = 2rho, so K_{2rho} = prod_j k_j^{c_j}.
std::vector<int> k2rho_exponents(const RootDatum& d);

/// Dominant representative under signed permutations of the coordinates.
Weight dominant_in_weyl_orbit(const RootDatum& d, const Weight& mu);

/// All dominant integral weights with |lambda| <= cutoff, ordered by size then
/// lexicographically descending.
std::vector<Weight> dominant_weights(int n, int cutoff);

}  // namespace ospq
