#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/coordring.hpp"

using namespace ospq;

namespace {

Matrix dense(const SparseMatrix& s) { return Matrix(s.toDense()); }

int sgn(int p) { return p % 2 ? -1 : 1; }

// Supertrace of K_2rho computed straight from weights and parities.
RatFunc supertrace_k2rho(int n, const Weight& lambda) {
  const auto w = irreducible(n, lambda);
  const Weight tr = two_rho(build_root_datum(n));
  RatFunc s(0);
  for (int a = 0; a < w->dim(); ++a) {
    const int e = static_cast<int>(dot(tr, w->module.weights[static_cast<std::size_t>(a)]).get_num().get_si());
    s += RatFunc(sgn(w->module.parity[static_cast<std::size_t>(a)])) * RatFunc::q_power(e);
  }
  return s;
}

int par(const Irrep& w, int a) { return w.module.parity[static_cast<std::size_t>(a)]; }

}  // namespace

TEST_CASE("basis elements evaluate to module matrix entries") {
  std::mt19937_64 rng(1);
  const Weight lambda = Weight::from_ints({1, 0});
  const auto w = irreducible(2, lambda);
  for (int trial = 0; trial < 8; ++trial) {
    const AlgWord x = random_word(2, 3, rng);
    const Matrix m = dense(evaluate(w->module, x));
    for (int i = 0; i < w->dim(); ++i)
      for (int j = 0; j < w->dim(); ++j) CHECK(evaluate(PWElement::basis(lambda, i, j), x) == m(i, j));
  }
  CHECK(evaluate(PWElement::one(2), AlgWord({GenSymbol::e(2, 1)})).is_zero());
  CHECK(evaluate(PWElement::one(2), AlgWord({GenSymbol::k(2, 5)})) == RatFunc(1));
}

TEST_CASE("product pairs with the tensor product module") {
  std::mt19937_64 rng(2);
  const int n = 1;
  const Weight l1 = Weight::from_ints({1}), l2 = Weight::from_ints({2});
  const auto a = irreducible(n, l1), b = irreducible(n, l2);
  const Module ab = tensor(a->module, b->module);
  for (int trial = 0; trial < 12; ++trial) {
    const int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
    const int r = static_cast<int>(rng() % 5), s = static_cast<int>(rng() % 5);
    const PWElement fg = multiply(PWElement::basis(l1, i, j), PWElement::basis(l2, r, s));
    for (int k = 0; k < 3; ++k) {
      const AlgWord x = random_word(n, k + 1, rng);
      const RatFunc entry = dense(evaluate(ab, x))(i * 5 + r, j * 5 + s);
      CHECK(evaluate(fg, x) == RatFunc(sgn((par(*b, r) + par(*b, s)) * par(*a, i))) * entry);
    }
  }
}

TEST_CASE("product is associative with unit one") {
  std::mt19937_64 rng(3);
  const int n = 1;
  const auto basis = pw_basis(n, 2);
  for (int trial = 0; trial < 8; ++trial) {
    auto pick = [&]() {
      const auto& idx = basis[rng() % basis.size()];
      return PWElement::basis(idx.lambda, idx.i, idx.j);
    };
    const PWElement f = pick(), g = pick(), h = pick();
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    CHECK(multiply(PWElement::one(n), f) == f);
    CHECK(multiply(f, PWElement::one(n)) == f);
  }
}

TEST_CASE("coproduct, antipode and counit pair with the algebra") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 2; ++n) {
    const auto basis = pw_basis(n, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& idx = basis[rng() % basis.size()];
      const PWElement f = PWElement::basis(idx.lambda, idx.i, idx.j);
      const AlgWord x = random_word(n, 2, rng), y = random_word(n, 2, rng);
      CHECK(evaluate(coproduct0(f), x, y) == evaluate(f, x * y));
      const WordTerm sx = antipode(x);
      CHECK(evaluate(antipode0(f), x) == sx.coeff * evaluate(f, sx.word));
      const WordTerm si = antipode_inverse(x);
      CHECK(evaluate(antipode0_inverse(f), x) == si.coeff * evaluate(f, si.word));
      CHECK(antipode0(antipode0_inverse(f)) == f);
      CHECK(counit0(f) == evaluate(f, AlgWord()));
      // right translation
      CHECK(evaluate(circ(x, f), y) == evaluate(f, y * x));
    }
  }
}

TEST_CASE("matrix coefficients of a reducible module") {
  std::mt19937_64 rng(5);
  const Module w = tensor(vector_module(1), vector_module(1));
  const auto coeffs = matrix_coefficients(w);
  REQUIRE(static_cast<int>(coeffs.size()) == w.dim() * w.dim());
  for (int trial = 0; trial < 5; ++trial) {
    const AlgWord x = random_word(1, 3, rng);
    const Matrix m = dense(evaluate(w, x));
    for (int a = 0; a < w.dim(); ++a)
      for (int b = 0; b < w.dim(); ++b) CHECK(evaluate(coeffs[static_cast<std::size_t>(a * w.dim() + b)], x) == m(a, b));
  }
}

TEST_CASE("quantum superdimensions") {
  CHECK(superdimension(1, Weight::from_ints({1})) == RatFunc::q_power(1) - RatFunc(1) + RatFunc::q_power(-1));
  for (int n = 1; n <= 2; ++n)
    for (const auto& lambda : dominant_weights(n, 3)) {
      CAPTURE(lambda.str());
      const RatFunc sd = superdimension(n, lambda);
      CHECK_FALSE(sd.is_zero());
      CHECK(sd == supertrace_k2rho(n, lambda));
      int classical = 0;
      const auto w = irreducible(n, lambda);
      for (int p : w->module.parity) classical += sgn(p);
      CHECK(classical_superdimension(n, lambda) == classical);
      CHECK(rf_eval(sd, Rational(1)) == Rational(classical));
    }
}

TEST_CASE("orthogonality lemma against module data") {
  const int n = 1;
  const Weight lambda = Weight::from_ints({1});
  const auto w = irreducible(n, lambda);
  const Matrix k = dense(evaluate(w->module, k2rho_word(n)));
  const RatFunc sd = supertrace_k2rho(n, lambda);
  const int d = w->dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) {
          const RatFunc lhs = haar(multiply(PWElement::basis(lambda, i, j), tilde(lambda, r, s))) *
                              RatFunc(sgn(par(*w, j) * par(*w, r) + par(*w, i) + par(*w, j)));
          const RatFunc rhs = i == r ? k(s, j) / sd : RatFunc(0);
          CHECK(lhs == rhs);
        }
  // the example value: int t_00 tilde t_00 = q / (q - 1 + q^-1)
  CHECK(haar(multiply(PWElement::basis(lambda, 0, 0), tilde(lambda, 0, 0))) ==
        RatFunc::q_power(1) / (RatFunc::q_power(1) - RatFunc(1) + RatFunc::q_power(-1)));
  CHECK(orthogonality_check(1, lambda, lambda).pass());
  CHECK(orthogonality_check(1, lambda, Weight::from_ints({2})).pass());
  CHECK(orthogonality_check(1, Weight::from_ints({2}), Weight::from_ints({2})).pass());
  // different blocks integrate to zero
  CHECK(haar(multiply(PWElement::basis(lambda, 0, 1), tilde(Weight::from_ints({2}), 0, 0))).is_zero());
}

TEST_CASE("haar functional and the square of the antipode") {
  CHECK(haar(PWElement::one(1)) == RatFunc(1));
  CHECK(haar(PWElement::basis(Weight::from_ints({1}), 0, 0)).is_zero());
  CHECK(haar_invariance_check(1, 2).pass());
  CHECK(haar_invariance_check(2, 1).pass());
  std::mt19937_64 rng(6);
  CHECK(antipode_square_check(1, 2, rng).pass());
  CHECK(product_check(1, 2, rng).pass());
  CHECK(vector_coordinate_formulas_check(1).pass());
  CHECK(vector_coordinate_formulas_check(2).pass());
}

TEST_CASE("parsing and json") {
  const PWElement f = parse_pw("t[1,0;0;2] + -3/2*t[0,0;0;0]", 2);
  CHECK(f.coefficient(PWIndex{Weight::from_ints({1, 0}), 0, 2}) == RatFunc(1));
  CHECK(f.coefficient(PWIndex{Weight(2), 0, 0}) == RatFunc(Rational(-3, 2)));
  CHECK(pw_from_json(to_json(f)) == f);
  CHECK_THROWS(parse_pw("t[1,0;0;9]", 2));
  CHECK_THROWS(parse_pw("t[1,-1;0;0]", 2));
}
