#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/homogeneous.hpp"

#include <algorithm>

using namespace ospq;

namespace {

const Scope kTorus = Scope::reductive({});

int weight_multiplicity(const Module& m, const Weight& mu) {
  return static_cast<int>(std::count(m.weights.begin(), m.weights.end(), mu));
}

// Sections of the torus line C_mu: every block contributes (multiplicity of mu) * d_lambda.
int torus_section_dim(int n, const Weight& mu, int cutoff) {
  int total = 0;
  for (const auto& lambda : dominant_weights(n, cutoff)) {
    const auto w = irreducible(n, lambda);
    total += weight_multiplicity(w->module, mu) * w->dim();
  }
  return total;
}

Module line(int n, const std::vector<int>& mu) { return weight_module(n, {Weight::from_ints(mu)}); }

}  // namespace

TEST_CASE("invariant functions on the torus quotient grow with the cutoff") {
  int previous = 0;
  for (int k = 0; k <= 3; ++k) {
    const SectionSpace e = invariant_functions(1, kTorus, k);
    CHECK(e.dim() == torus_section_dim(1, Weight(1), k));
    CHECK(e.dim() > previous);
    previous = e.dim();
  }
  CHECK(invariant_functions(1, kTorus, 3).dim() == 16);
  CHECK(invariant_functions(2, kTorus, 2).dim() == torus_section_dim(2, Weight(2), 2));
  CHECK_THROWS_AS(invariant_functions(1, Scope::parabolic({}), 1), std::invalid_argument);
}

TEST_CASE("section spaces of torus lines") {
  for (int m = -2; m <= 2; ++m) {
    const SectionSpace h = sections(line(1, {m}), kTorus, 2);
    CHECK(h.dim() == torus_section_dim(1, Weight::from_ints({m}), 2));
    CHECK(section_space_check(h).pass());
  }
  CHECK(sections(line(1, {-1}), kTorus, 2).dim() == 8);
  // a non-integral weight admits no sections
  CHECK(sections(weight_module(1, {parse_weight("1/2", 1)}), kTorus, 2).dim() == 0);
}

TEST_CASE("sections are characterized by the defining condition") {
  const Module v = line(1, {-1});
  const SectionSpace h = sections(v, kTorus, 2);
  for (const auto& zeta : h.expand_all()) CHECK_FALSE(section_violation(v, kTorus, zeta).has_value());
  // an arbitrary coordinate function of the wrong weight is not a section
  const BundleElement bad{PWElement::basis(Weight::from_ints({1}), 0, 1)};
  CHECK(section_violation(v, kTorus, bad).has_value());
  // sums stay sections, and BundleSpan recovers coordinates
  const auto all = h.expand_all();
  BundleElement sum = all[0];
  for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += RatFunc(3) * all[1][a];
  CHECK_FALSE(section_violation(v, kTorus, sum).has_value());
  const BundleSpan span(v.dim(), all);
  CHECK(span.rank() == h.dim());
  const auto c = span.coordinates(sum);
  REQUIRE(c.has_value());
  CHECK((*c)(0) == RatFunc(1));
  CHECK((*c)(1) == RatFunc(3));
  CHECK_FALSE(span.coordinates(bad).has_value());
}

TEST_CASE("section spaces as modules") {
  std::mt19937_64 rng(9);
  const SectionSpace h = sections(line(1, {-1}), kTorus, 2);
  const Module m = section_module(h);
  CHECK(check_relations(m).pass());
  const Decomposition d = decompose(m);
  CHECK(d.multiplicities().size() == 2);
  CHECK(module_structure_check(h, 1, rng).pass());
}

TEST_CASE("reductive section spaces") {
  const Module v = reductive_irreducible(2, {1}, Weight::from_ints({1, 0}));
  const SectionSpace h = sections(v, Scope::reductive({1}), 2);
  CHECK(section_space_check(h).pass());
  // W(1,0) contains the U_k doublet once, so it contributes 5 sections
  CHECK(h.block_dim(1) == 5);
  CHECK_THROWS_AS(sections(line(1, {1}), Scope::reductive({1}), 1), std::invalid_argument);
}

TEST_CASE("borel-weil") {
  for (int m = 0; m <= 2; ++m) {
    const Report r = borel_weil_check(1, {}, Weight::from_ints({-m}), 2);
    CHECK(r.pass());
    CHECK(r.data["dim"] == 2 * m + 1);
  }
  const Report up = borel_weil_check(1, {}, Weight::from_ints({1}), 2);
  CHECK(up.pass());
  CHECK(up.data["dim"] == 0);
  const Report r2 = borel_weil_check(2, {1}, Weight::from_ints({-1, -1}), 2);
  CHECK(r2.pass());
  CHECK(r2.data["dim"] == 10);
}

TEST_CASE("frobenius reciprocity") {
  struct Case {
    Module w;
    Module v;
  };
  const Weight two = Weight::from_ints({2});
  const std::vector<Case> cases{{vector_module(1), line(1, {0})},
                                {vector_module(1), line(1, {1})},
                                {irreducible(1, two)->module, line(1, {1})},
                                {irreducible(1, two)->module, line(1, {-2})},
                                {vector_module(1), line(1, {2})}};
  for (const auto& c : cases) {
    const Report r = frobenius_check(c.w, c.v, kTorus, 3);
    CHECK(r.pass());
    CHECK(r.data["dim_lhs"] == weight_multiplicity(c.w, c.v.weights[0]));
  }
}

TEST_CASE("holomorphic sections of a module reproduce it") {
  const Report r = corollary_check(vector_module(1), {}, 2);
  CHECK(r.pass());
  CHECK(r.data["dim"] == 3);
  const Report sq = corollary_check(tensor(vector_module(1), vector_module(1)), {}, 2);
  CHECK(sq.pass());
  CHECK(sq.data["dim"] == 9);
}

TEST_CASE("trivialization and projectivity") {
  std::mt19937_64 rng(10);
  const Trivialization t = trivialization(vector_module(1), kTorus, 2, rng);
  CHECK(t.report.pass());
  CHECK(t.shift == 1);
  CHECK(t.eta.size() == static_cast<std::size_t>(t.h.dim()));
  const ProjectivityWitness p = projectivity_witness(line(1, {-1}), kTorus, 2, rng);
  CHECK(p.report.pass());
  REQUIRE(p.summands.size() == 1);
  CHECK(p.summands[0].complement.dim() == 2);
}

TEST_CASE("central hom diagnostic") {
  const auto j = central_homs_diagnostic(2, {1}, 2);
  CHECK(j.is_object());
}
