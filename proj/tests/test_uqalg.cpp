#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/repcore.hpp"
#include "ospq/uqalg.hpp"

using namespace ospq;

namespace {

Matrix dense(const SparseMatrix& s) { return Matrix(s.toDense()); }

int kron(int a, int b) { return a == b ? 1 : 0; }

// Generator matrices of the vector module written out entry by entry from the labels mu, nu.
Matrix vector_e(int n, int i) {
  Matrix m = Matrix::Zero(2 * n + 1, 2 * n + 1);
  for (int a = 0; a < 2 * n + 1; ++a)
    for (int b = 0; b < 2 * n + 1; ++b) {
      const int mu = vector_label(n, a), nu = vector_label(n, b);
      const int v = i < n ? kron(mu, i) * kron(nu, i + 1) + kron(mu, -i - 1) * kron(nu, -i)
                          : kron(mu, n) * kron(nu, 0) - kron(mu, 0) * kron(nu, -n);
      m(a, b) = RatFunc(v);
    }
  return m;
}

Matrix vector_f(int n, int i) {
  Matrix m = Matrix::Zero(2 * n + 1, 2 * n + 1);
  for (int a = 0; a < 2 * n + 1; ++a)
    for (int b = 0; b < 2 * n + 1; ++b) {
      const int mu = vector_label(n, a), nu = vector_label(n, b);
      const int v = i < n ? kron(mu, i + 1) * kron(nu, i) + kron(mu, -i) * kron(nu, -i - 1)
                          : kron(mu, 0) * kron(nu, n) + kron(mu, -n) * kron(nu, 0);
      m(a, b) = RatFunc(v);
    }
  return m;
}

Matrix vector_k(int n, int j) {
  const RootDatum d = build_root_datum(n);
  Matrix m = Matrix::Zero(2 * n + 1, 2 * n + 1);
  for (int a = 0; a < 2 * n + 1; ++a) {
    const int exponent = static_cast<int>(dot(d.alpha(j), Weight::epsilon(n, vector_label(n, a))).get_num().get_si());
    m(a, a) = RatFunc::q_power(exponent);
  }
  return m;
}

}  // namespace

TEST_CASE("vector module basis order") {
  CHECK(vector_label(2, 0) == 1);
  CHECK(vector_label(2, 1) == 2);
  CHECK(vector_label(2, 2) == 0);
  CHECK(vector_label(2, 3) == -2);
  CHECK(vector_label(2, 4) == -1);
  for (int a = 0; a < 7; ++a) CHECK(vector_index(3, vector_label(3, a)) == a);
}

TEST_CASE("vector module generator matrices") {
  for (int n = 1; n <= 3; ++n) {
    const Module m = vector_module(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(dense(evaluate(m, GenSymbol::e(n, i))) == vector_e(n, i));
      CHECK(dense(evaluate(m, GenSymbol::f(n, i))) == vector_f(n, i));
      CHECK(dense(evaluate(m, GenSymbol::k(i))) == vector_k(n, i));
    }
    // w_0 is the only odd vector
    for (int a = 0; a < m.dim(); ++a) CHECK(m.parity[static_cast<std::size_t>(a)] == (vector_label(n, a) == 0 ? 1 : 0));
  }
}

TEST_CASE("defining relations on the vector module and its tensor square") {
  for (int n = 1; n <= 3; ++n) CHECK(check_relations(vector_module(n)).pass());
  CHECK(check_relations(tensor(vector_module(1), vector_module(1))).pass());
  CHECK(check_relations(tensor(vector_module(2), vector_module(2))).pass());
  CHECK(check_relations(dual_module(vector_module(2))).pass());
}

TEST_CASE("relations detect a broken module") {
  Module m = vector_module(1);
  m.e[0] = SparseMatrix(m.e[0] * RatFunc(2));
  CHECK_FALSE(check_relations(m).pass());
}

TEST_CASE("hopf axioms and the square of the antipode") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(check_hopf(vector_module(n)).pass());
    CHECK(check_antipode_square(vector_module(n)).pass());
  }
  CHECK(check_hopf(tensor(vector_module(1), vector_module(1))).pass());
}

TEST_CASE("antipode and inverse antipode on random words") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 2; ++n) {
    const Module m = vector_module(n);
    for (int trial = 0; trial < 20; ++trial) {
      const AlgWord w = random_word(n, 1 + trial % 4, rng);
      const WordTerm s = antipode(w);
      const WordTerm back = antipode_inverse(s.word);
      CHECK(dense(evaluate(m, back.word)) * (s.coeff * back.coeff) == dense(evaluate(m, w)));
      const AlgWord v = random_word(n, 2, rng);
      // S(ab) = (-1)^{[a][b]} S(b) S(a)
      const WordTerm sab = antipode(w * v);
      const WordTerm sa = antipode(w), sb = antipode(v);
      const int sign = (w.parity() * v.parity()) % 2 ? -1 : 1;
      CHECK(dense(evaluate(m, sab.word)) * sab.coeff ==
            dense(evaluate(m, sb.word * sa.word)) * (sa.coeff * sb.coeff * RatFunc(sign)));
      // evaluation is multiplicative
      CHECK(dense(evaluate(m, w * v)) == Matrix(dense(evaluate(m, w)) * dense(evaluate(m, v))));
    }
  }
}

TEST_CASE("antipode on generators") {
  const int n = 2;
  const WordTerm se = antipode(GenSymbol::e(n, 1));
  CHECK(se.coeff == RatFunc(-1));
  CHECK(se.word == AlgWord({GenSymbol::e(n, 1), GenSymbol::k(1, -1)}));
  const WordTerm sf = antipode(GenSymbol::f(n, 2));
  CHECK(sf.coeff == RatFunc(-1));
  CHECK(sf.word == AlgWord({GenSymbol::k(2), GenSymbol::f(n, 2)}));
  CHECK(counit(AlgWord({GenSymbol::k(1, 3)})) == RatFunc(1));
  CHECK(counit(AlgWord({GenSymbol::e(n, 1)})).is_zero());
}

TEST_CASE("k2rho word") {
  const AlgWord w = k2rho_word(2);
  const Module m = vector_module(2);
  // K_2rho acts on w_mu by q^{(2rho, eps_mu)}
  const Weight tr = two_rho(build_root_datum(2));
  for (int a = 0; a < m.dim(); ++a) {
    const int e = static_cast<int>(dot(tr, m.weights[static_cast<std::size_t>(a)]).get_num().get_si());
    CHECK(dense(evaluate(m, w))(a, a) == RatFunc::q_power(e));
  }
}

TEST_CASE("word parsing") {
  const AlgWord w = parse_word("e1 f2 k1^-1", 2);
  REQUIRE(w.factors.size() == 3);
  CHECK(w.factors[0] == GenSymbol::e(2, 1));
  CHECK(w.factors[1] == GenSymbol::f(2, 2));
  CHECK(w.factors[2] == GenSymbol::k(1, -1));
  CHECK(w.parity() == 1);
  CHECK(parse_word("1", 2).empty());
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word(w.str(), 2) == w);
  CHECK_THROWS(parse_word("e3", 2));
  CHECK_THROWS(parse_word("x1", 2));
}
