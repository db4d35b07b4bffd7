// Acceptance run: one line per criterion, all comparisons exact over Q(q).

#include "ospq/cache.hpp"
#include "ospq/homogeneous.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ospq;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
  void require(const Report& r) {
    if (!r.pass()) {
      pass = false;
      detail << "[failed: " << r.title;
      for (const auto& c : r.checks)
        if (!c.pass) detail << "; " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")");
      detail << "] ";
    }
  }
};

int sgn(int p) { return p % 2 ? -1 : 1; }

Module line(int n, const std::vector<int>& mu) { return weight_module(n, {Weight::from_ints(mu)}); }

int weight_multiplicity(const Module& m, const Weight& mu) {
  return static_cast<int>(std::count(m.weights.begin(), m.weights.end(), mu));
}

void relations(Outcome& o) {
  for (int n = 1; n <= 3; ++n) o.require(check_relations(vector_module(n)));
  o.detail << "n = 1, 2, 3";
}

void hopf(Outcome& o) {
  for (int n = 1; n <= 2; ++n) {
    const Module l = vector_module(n);
    o.require(check_hopf(l));
    o.require(check_hopf(tensor(l, l)));
    o.require(vector_coordinate_formulas_check(n));
  }
  o.detail << "Lambda and Lambda (x) Lambda for n = 1, 2; Delta0/S0 closed forms entrywise";
}

void m_matrix(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const int d = 2 * n + 1;
    Matrix want = Matrix::Zero(d, d);
    for (int mu = -n; mu <= n; ++mu) {
      const int k = mu > 0 ? mu - 1 : mu == 0 ? n : 2 * n + mu;
      RatFunc m(1);
      for (int s = 0; s < k; ++s) m *= -RatFunc::q_power(1);
      want(vector_index(n, mu), vector_index(n, -mu)) = m;
    }
    o.require(self_duality_M(n) == want, "M for n = " + std::to_string(n));
  }
  o.detail << "n = 1, 2, 3, primary Hopf convention";
}

void decompositions(Outcome& o) {
  const Module l1 = vector_module(1);
  const Module sq = tensor(l1, l1);
  const Decomposition d = decompose(sq);
  o.require(check_decomposition(sq, d));
  std::vector<int> dims;
  for (const auto& s : d.summands) dims.push_back(s.irrep->dim());
  std::sort(dims.rbegin(), dims.rend());
  o.require(dims == std::vector<int>{5, 3, 1}, "n = 1 Lambda (x) Lambda dims {5,3,1}");

  const auto cube = vector_power(1, 3);
  const Decomposition d3 = decompose(*cube);
  o.require(check_decomposition(*cube, d3));
  int sum3 = 0;
  for (const auto& s : d3.summands) sum3 += s.irrep->dim();
  o.require(sum3 == 27, "n = 1 cube dimension sum 27");

  const Module l2 = vector_module(2);
  const Module sq2 = tensor(l2, l2);
  const Decomposition d2 = decompose(sq2);
  o.require(check_decomposition(sq2, d2));
  int sum2 = 0;
  for (const auto& s : d2.summands) sum2 += s.irrep->dim();
  o.require(sum2 == 25, "n = 2 square dimension sum 25");
  o.detail << "dims {5,3,1}; sums " << sum3 << ", " << sum2;
}

void antipode_square(Outcome& o) {
  o.require(check_antipode_square(vector_module(1)));
  o.require(check_antipode_square(irreducible(1, Weight::from_ints({2}))->module));
  o.require(check_antipode_square(vector_module(2)));
  std::mt19937_64 rng(20240601);
  o.require(antipode_square_check(1, 2, rng));
  o.require(antipode_square_check(2, 2, rng));
  o.detail << "generators on Lambda, W(2 eps_1), Lambda(n=2); S0^2 on PW basis |lambda| <= 2";
}

void superdimensions(Outcome& o) {
  int count = 0;
  for (int n = 1; n <= 2; ++n)
    for (const auto& lambda : dominant_weights(n, 3)) {
      const auto w = irreducible(n, lambda);
      const Weight tr = two_rho(build_root_datum(n));
      RatFunc str(0);
      int classical = 0;
      for (int a = 0; a < w->dim(); ++a) {
        const int e = static_cast<int>(dot(tr, w->module.weights[static_cast<std::size_t>(a)]).get_num().get_si());
        const int s = sgn(w->module.parity[static_cast<std::size_t>(a)]);
        str += RatFunc(s) * RatFunc::q_power(e);
        classical += s;
      }
      const RatFunc sd = superdimension(n, lambda);
      o.require(!sd.is_zero() && sd == str, "SD(" + lambda.str() + ") nonzero supertrace");
      o.require(rf_eval(sd, Rational(1)) == Rational(classical), "SD(" + lambda.str() + ") at q = 1");
      ++count;
    }
  o.require(superdimension(1, Weight::from_ints({1})) == RatFunc::q_power(1) - RatFunc(1) + RatFunc::q_power(-1),
            "SD(eps_1) = q - 1 + q^-1");
  o.detail << count << " weights; SD(eps_1) = " << superdimension(1, Weight::from_ints({1})).str();
}

void orthogonality(Outcome& o) {
  const std::vector<Weight> ws{Weight(1), Weight::from_ints({1}), Weight::from_ints({2})};
  for (const auto& a : ws)
    for (const auto& b : ws) o.require(orthogonality_check(1, a, b));
  o.detail << "n = 1, lambda, mu in {0, eps_1, 2 eps_1}";
}

void haar_invariance(Outcome& o) {
  o.require(haar_invariance_check(1, 2));
  o.require(haar(PWElement::one(1)) == RatFunc(1), "int 1 = 1");
  o.detail << "n = 1, |lambda| <= 2";
}

void borel_weil(Outcome& o) {
  for (int m = 0; m <= 2; ++m) {
    const Report r = borel_weil_check(1, {}, Weight::from_ints({-m}), 2);
    o.require(r);
    o.require(r.data.value("dim", -1) == 2 * m + 1, "dim O_q for m = " + std::to_string(m));
  }
  const Report up = borel_weil_check(1, {}, Weight::from_ints({1}), 2);
  o.require(up);
  o.require(up.data.value("dim", -1) == 0, "mu = +eps_1 gives zero");
  const Report r2 = borel_weil_check(2, {1}, Weight::from_ints({-1, -1}), 2);
  o.require(r2);
  o.detail << "dims 1, 3, 5, 0; n = 2 theta = {1}: " << r2.data.value("dim", -1);
}

void frobenius(Outcome& o) {
  struct Triple {
    Module w;
    Module v;
    Scope scope;
  };
  const std::vector<Triple> triples{
      {vector_module(1), line(1, {0}), Scope::reductive({})},
      {irreducible(1, Weight::from_ints({2}))->module, line(1, {1}), Scope::reductive({})},
      {vector_module(2), line(2, {0, 0}), Scope::reductive({1})},
      {vector_module(2), line(2, {1, 0}), Scope::reductive({})},
      {irreducible(2, Weight::from_ints({1, 1}))->module, reductive_irreducible(2, {1}, Weight::from_ints({1, 0})),
       Scope::reductive({1})},
  };
  for (const auto& t : triples) {
    const Report r = frobenius_check(t.w, t.v, t.scope, 3);
    o.require(r);
    o.detail << r.data.value("dim_lhs", -1) << "=" << r.data.value("dim_rhs", -1) << " ";
  }
  o.detail << "(" << triples.size() << " triples, cutoff 3)";
}

void bundles(Outcome& o) {
  std::mt19937_64 rng(20240601);
  const Scope torus = Scope::reductive({});
  o.require(trivialization(vector_module(1), torus, 2, rng).report);
  o.require(projectivity_witness(line(1, {-1}), torus, 2, rng).report);
  o.require(module_structure_check(sections(line(1, {-1}), torus, 2), 2, rng));
  o.detail << "trivialization of Lambda, projectivity of C_-eps1, two-sided structure on H(C_-eps1)";
}

void growth(Outcome& o) {
  std::vector<int> dims, blocks;
  for (int k = 0; k <= 3; ++k) {
    dims.push_back(invariant_functions(1, Scope::reductive({}), k).dim());
    int count = 0;
    for (const auto& lambda : dominant_weights(1, k)) {
      const auto w = irreducible(1, lambda);
      count += weight_multiplicity(w->module, Weight(1)) * w->dim();
    }
    blocks.push_back(count);
  }
  o.require(dims == blocks, "block counts");
  o.require(dims == std::vector<int>{1, 4, 9, 16}, "values 1, 4, 9, 16");
  o.require(std::adjacent_find(dims.begin(), dims.end(), std::greater_equal<int>()) == dims.end(), "strict growth");
  o.detail << "dims";
  for (int d : dims) o.detail << " " << d;
}

}  // namespace

int main() {
  set_global_cache(cache_from_environment());
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"relations", relations},
      {"hopf axioms", hopf},
      {"self-duality matrix", m_matrix},
      {"decompositions", decompositions},
      {"antipode square", antipode_square},
      {"superdimension", superdimensions},
      {"peter-weyl orthogonality", orthogonality},
      {"haar invariance", haar_invariance},
      {"borel-weil", borel_weil},
      {"frobenius reciprocity", frobenius},
      {"bundle structure", bundles},
      {"invariant growth", growth},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << index << " " << name
              << " (exact, tolerance 0) " << std::fixed << std::setprecision(1) << secs << "s: " << o.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
