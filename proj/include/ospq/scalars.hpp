#pragma once

// Exact scalars: Laurent polynomials in q over Q and their quotient field.

#include <gmpxx.h>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <nlohmann/json.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ospq {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Finite sum of c_e q^e with nonzero rational coefficients, sorted by exponent.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c);  // NOLINT

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  int low_exponent() const { return terms_.front().first; }
  int high_exponent() const { return terms_.back().first; }
  const Rational& leading_coefficient() const { return terms_.back().second; }
  Rational coefficient(int exponent) const;

  /// Multiplies by q^shift.
  LaurentPoly shifted(int shift) const;
  Rational eval(const Rational& q0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Symmetric q-integer [m] = (q^m - q^-m)/(q - q^-1).
LaurentPoly gauss_integer(int m);

/// Canonical quotient num/den: gcd(num, den) is a unit, den has lowest exponent 0 and is monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  static RatFunc q_power(int exponent) { return RatFunc(LaurentPoly::q_power(exponent)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Heuristic size, used to pick cheap pivots in elimination.
  std::size_t complexity() const { return num_.terms().size() + 2 * (den_.terms().size() - 1); }

  RatFunc inverse() const;
  Rational eval(const Rational& q0) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

  /// Human-readable rendering, e.g. "q - 1 + q^-1" or "(q)/(q^2 - q + 1)".
  std::string str() const;

  friend RatFunc rf_normalize(LaurentPoly num, LaurentPoly den);

 private:
  RatFunc(LaurentPoly n, LaurentPoly d, int /*raw*/) : num_(std::move(n)), den_(std::move(d)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Canonical representative of num/den. Throws std::domain_error on a zero denominator.
RatFunc rf_normalize(LaurentPoly num, LaurentPoly den);
/// Exact value at q = q0. Throws std::domain_error at a pole.
Rational rf_eval(const RatFunc& f, const Rational& q0);

/// Greatest common divisor of ordinary polynomials (coefficients low to high), monic.
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const RatFunc& f);
LaurentPoly laurent_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using SpMat = Eigen::SparseMatrix<Scalar>;

using Matrix = Mat<RatFunc>;
using Vector = Vec<RatFunc>;
using SparseMatrix = SpMat<RatFunc>;

}  // namespace ospq

namespace Eigen {

template <>
struct NumTraits<ospq::RatFunc> : GenericNumTraits<ospq::RatFunc> {
  using Real = ospq::RatFunc;
  using NonInteger = ospq::RatFunc;
  using Literal = ospq::RatFunc;
  using Nested = ospq::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
