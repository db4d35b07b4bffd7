#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/repcore.hpp"

#include <map>

using namespace ospq;

namespace {

// Weyl dimension formula for so(2n+1); osp(1|2n) irreducibles share these dimensions.
Rational weyl_dimension_b(const Weight& lambda) {
  const int n = lambda.rank();
  Weight rho(n);
  for (int i = 1; i <= n; ++i) rho[i - 1] = Rational(2 * (n - i) + 1, 2);
  std::vector<Weight> roots;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      roots.push_back(Weight::epsilon(n, i) - Weight::epsilon(n, j));
      roots.push_back(Weight::epsilon(n, i) + Weight::epsilon(n, j));
    }
    roots.push_back(Weight::epsilon(n, i));
  }
  Rational num(1), den(1);
  for (const auto& a : roots) {
    num *= dot(lambda + rho, a);
    den *= dot(rho, a);
  }
  return num / den;
}

std::map<Weight, int> as_map(const std::vector<std::pair<Weight, int>>& v) { return {v.begin(), v.end()}; }

// Clebsch-Gordan peeling for n = 1: W(m) has the weights -m..m once each.
std::map<Weight, int> peel_rank_one(std::vector<Weight> character) {
  std::map<int, int> mult;
  for (const auto& w : character) ++mult[static_cast<int>(w[0].get_num().get_si())];
  std::map<Weight, int> out;
  while (!mult.empty()) {
    const int top = mult.rbegin()->first;
    const int times = mult.rbegin()->second;
    out[Weight::from_ints({top})] += times;
    for (int w = -top; w <= top; ++w)
      if ((mult[w] -= times) == 0) mult.erase(w);
  }
  return out;
}

}  // namespace

TEST_CASE("irreducible dimensions agree with the weyl formula") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& lambda : dominant_weights(n, n == 1 ? 4 : 3)) {
      CAPTURE(lambda.str());
      const auto w = irreducible(n, lambda);
      CHECK(Rational(w->dim()) == weyl_dimension_b(lambda));
      CHECK(check_relations(w->module).pass());
      CHECK(static_cast<int>(w->words.size()) == w->dim());
    }
  CHECK(irreducible(3, Weight::from_ints({1, 1, 0}))->dim() == 21);
}

TEST_CASE("irreducibles are irreducible") {
  for (const auto& lambda : dominant_weights(2, 2)) {
    const auto w = irreducible(2, lambda);
    CHECK(hom_space(w->module, w->module, Scope::full()).size() == 1);
    CHECK(highest_weight_vectors(w->module).size() == 1);
  }
}

TEST_CASE("tensor square decompositions") {
  const Module l1 = vector_module(1);
  const Module sq1 = tensor(l1, l1);
  const Decomposition d1 = decompose(sq1);
  CHECK(check_decomposition(sq1, d1).pass());
  CHECK(as_map(d1.multiplicities()) == peel_rank_one(sq1.character()));
  CHECK(as_map(d1.multiplicities()) ==
        std::map<Weight, int>{{Weight::from_ints({2}), 1}, {Weight::from_ints({1}), 1}, {Weight::from_ints({0}), 1}});

  const auto cube = vector_power(1, 3);
  const Decomposition d3 = decompose(*cube);
  CHECK(check_decomposition(*cube, d3).pass());
  CHECK(as_map(d3.multiplicities()) == peel_rank_one(cube->character()));

  const Module l2 = vector_module(2);
  const Module sq2 = tensor(l2, l2);
  const Decomposition d2 = decompose(sq2);
  CHECK(check_decomposition(sq2, d2).pass());
  CHECK(as_map(d2.multiplicities()) == std::map<Weight, int>{{Weight::from_ints({2, 0}), 1},
                                                             {Weight::from_ints({1, 1}), 1},
                                                             {Weight::from_ints({0, 0}), 1}});
}

TEST_CASE("decomposition of a mixed product") {
  const Module m = tensor(vector_module(1), irreducible(1, Weight::from_ints({2}))->module);
  const Decomposition d = decompose(m);
  CHECK(check_decomposition(m, d).pass());
  CHECK(as_map(d.multiplicities()) == peel_rank_one(m.character()));
}

TEST_CASE("self duality matrix of the vector module") {
  for (int n = 1; n <= 3; ++n) {
    const Matrix expected = self_duality_M_expected(n);
    // m_mu = (-q)^{mu-1}, (-q)^n, (-q)^{2n+mu} on the anti-diagonal mu + nu = 0
    const RatFunc mq = -RatFunc::q_power(1);
    auto power = [&](int k) {
      RatFunc r(1);
      for (int i = 0; i < k; ++i) r *= mq;
      return r;
    };
    for (int a = 0; a < 2 * n + 1; ++a)
      for (int b = 0; b < 2 * n + 1; ++b) {
        const int mu = vector_label(n, a), nu = vector_label(n, b);
        RatFunc want(0);
        if (mu + nu == 0) want = power(mu > 0 ? mu - 1 : (mu == 0 ? n : 2 * n + mu));
        CHECK(expected(a, b) == want);
      }
    CHECK(self_duality_M(n) == expected);
  }
}

TEST_CASE("dual module satisfies the relations and is isomorphic to the vector module") {
  for (int n = 1; n <= 2; ++n) {
    const Module d = dual_module(vector_module(n));
    CHECK(check_relations(d).pass());
    CHECK(hom_space(d, vector_module(n), Scope::full()).size() == 1);
    CHECK(check_relations(dual_module(vector_module(n), true)).pass());
  }
}

TEST_CASE("lowest weight and dagger") {
  const auto [low, dagger] = lowest_weight_and_dagger(2, Weight::from_ints({2, 1}));
  CHECK(low == Weight::from_ints({-2, -1}));
  CHECK(dagger == Weight::from_ints({2, 1}));
}

TEST_CASE("hom spaces are intertwiners and graded") {
  const Module l = vector_module(1);
  const Module sq = tensor(l, l);
  const auto homs = hom_space(l, sq, Scope::full());
  CHECK(homs.size() == 1);
  for (const auto& phi : homs) CHECK(is_intertwiner(phi, l, sq));
  CHECK(hom_space(vector_module(1), irreducible(1, Weight::from_ints({2}))->module, Scope::full()).empty());

  // restricted to the torus everything of matching weight intertwines
  const Scope torus = Scope::reductive({});
  const auto weight_maps = hom_space(restrict(l, torus), restrict(l, torus), torus);
  CHECK(weight_maps.size() == 3);
  int odd = 0;
  for (const auto& phi : weight_maps) odd += phi.degree;
  CHECK(odd == 0);
  // the odd line C_0 maps onto w_0 by an odd map
  const Module odd_line = weight_module(1, {Weight(1)}, {0});
  const auto to_w0 = hom_space(odd_line, restrict(l, torus), torus);
  REQUIRE(to_w0.size() == 1);
  CHECK(to_w0[0].degree == 1);
}

TEST_CASE("reductive irreducibles") {
  const Module v = reductive_irreducible(2, {1}, Weight::from_ints({1, 0}));
  CHECK(v.dim() == 2);
  CHECK(v.character() == std::vector<Weight>{Weight::from_ints({0, 1}), Weight::from_ints({1, 0})});
  CHECK(lowest_weight(v) == Weight::from_ints({0, 1}));
  const Module v2 = reductive_irreducible(2, {1}, Weight::from_ints({2, 1}));
  CHECK(v2.dim() == 2);
  const Module line = reductive_irreducible(2, {}, Weight::from_ints({-1, 0}));
  CHECK(line.dim() == 1);
  CHECK(hom_space(v, v, Scope::reductive({1})).size() == 1);
}

TEST_CASE("cartan product of highest weight maps") {
  const Weight one = Weight::from_ints({1});
  const auto lam = irreducible(1, one);
  // W(lambda) maps onto its lowest weight line under the parabolic generators
  const Module c = weight_module(1, {-one});
  const auto phi = hom_space(restrict(lam->module, Scope::parabolic({})), extend_to_parabolic(restrict(c, Scope::reductive({}))),
                             Scope::parabolic({}));
  REQUIRE(phi.size() == 1);
  const Intertwiner prod = cartan_product_hom(1, one, phi[0], one, phi[0]);
  CHECK(prod.matrix.cols() == 5);
  CHECK_FALSE(is_zero_matrix(prod.matrix));
}
