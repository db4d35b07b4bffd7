#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/rootdata.hpp"

#include <algorithm>
#include <set>

using namespace ospq;

namespace {

// Positive roots of osp(1|2n) in the eps basis: even eps_i +- eps_j (i < j), 2 eps_i; odd eps_i.
std::vector<std::pair<Weight, int>> positive_roots(int n) {
  std::vector<std::pair<Weight, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.emplace_back(Weight::epsilon(n, i) - Weight::epsilon(n, j), 0);
      out.emplace_back(Weight::epsilon(n, i) + Weight::epsilon(n, j), 0);
    }
    out.emplace_back(Weight::epsilon(n, i) + Weight::epsilon(n, i), 0);
    out.emplace_back(Weight::epsilon(n, i), 1);
  }
  return out;
}

int partitions_at_most(int m, int parts, int largest) {
  if (m == 0) return 1;
  if (parts == 0) return 0;
  int total = 0;
  for (int first = std::min(m, largest); first >= 1; --first) total += partitions_at_most(m - first, parts - 1, first);
  return total;
}

}  // namespace

TEST_CASE("cartan matrix from the simple roots") {
  // a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i) with alpha_i = eps_i - eps_{i+1}, alpha_n = eps_n.
  const RootDatum d = build_root_datum(3);
  Eigen::MatrixXi expected(3, 3);
  expected << 2, -1, 0, -1, 2, -1, 0, -2, 2;
  CHECK(d.cartan == expected);
  CHECK(d.parity == std::vector<int>{0, 0, 1});
  CHECK(d.highest_root == Weight::from_ints({2, 0, 0}));
  const RootDatum d1 = build_root_datum(1);
  CHECK(d1.cartan(0, 0) == 2);
}

TEST_CASE("two rho is the graded sum of positive roots") {
  for (int n = 1; n <= 4; ++n) {
    const RootDatum d = build_root_datum(n);
    Weight sum(n);
    for (const auto& [root, parity] : positive_roots(n)) sum = parity ? sum - root : sum + root;
    CHECK(two_rho(d) == sum);
    // sum_j c_j alpha_j must reproduce 2rho
    const auto c = k2rho_exponents(d);
    Weight rebuilt(n);
    for (int j = 1; j <= n; ++j) rebuilt = rebuilt + Rational(c[static_cast<std::size_t>(j - 1)]) * d.alpha(j);
    CHECK(rebuilt == sum);
  }
  CHECK(k2rho_exponents(build_root_datum(1)) == std::vector<int>{1});
  CHECK(k2rho_exponents(build_root_datum(2)) == std::vector<int>{3, 4});
}

TEST_CASE("integrality uses the unusual last label") {
  const RootDatum d = build_root_datum(2);
  CHECK(is_integral(d, Weight::from_ints({1, 0})));
  CHECK_FALSE(is_integral(d, parse_weight("1/2,1/2", 2)));
  CHECK_FALSE(is_integral(d, parse_weight("1/2", 2)));
  const auto labels = integral_labels(d, Weight::from_ints({3, 1}));
  CHECK(labels[0] == 2);
  CHECK(labels[1] == 1);
  CHECK(is_dominant(d, Weight::from_ints({2, 1})));
  CHECK_FALSE(is_dominant(d, Weight::from_ints({1, 2})));
  CHECK_FALSE(is_dominant(d, Weight::from_ints({1, -1})));
}

TEST_CASE("dominant weights up to a cutoff") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto ws = dominant_weights(n, k);
      int expected = 0;
      for (int m = 0; m <= k; ++m) expected += partitions_at_most(m, n, m);
      CHECK(static_cast<int>(ws.size()) == expected);
      std::set<Weight> distinct(ws.begin(), ws.end());
      CHECK(distinct.size() == ws.size());
      for (const auto& w : ws) CHECK(is_dominant(build_root_datum(n), w));
    }
}

TEST_CASE("weyl orbit representative") {
  const RootDatum d = build_root_datum(3);
  CHECK(dominant_in_weyl_orbit(d, Weight::from_ints({0, -2, 1})) == Weight::from_ints({2, 1, 0}));
  CHECK(dominant_in_weyl_orbit(d, Weight::from_ints({-1, 0, 0})) == Weight::from_ints({1, 0, 0}));
}

TEST_CASE("weight parsing and json") {
  const Weight w = parse_weight("1/2,-1", 3);
  CHECK(w.str() == "1/2,-1,0");
  CHECK(weight_from_json(to_json(w)) == w);
  CHECK_THROWS(parse_weight("1,2,3,4", 2));
}
