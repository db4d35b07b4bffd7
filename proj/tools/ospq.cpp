// ospq: batch front end for the OSP_q(1|2n) kernel.

#include "ospq/cache.hpp"
#include "ospq/homogeneous.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace ospq;

namespace {

struct Config {
  int n = 1;
  std::string format = "json";
  std::uint64_t seed = 20240601;
};

nlohmann::json conventions() {
  return {{"coproduct", "Delta(k) = k (x) k, Delta(e) = e (x) k + 1 (x) e, Delta(f) = f (x) 1 + k^-1 (x) f"},
          {"antipode", "S(k) = k^-1, S(e) = -e k^-1, S(f) = -k f"},
          {"two_rho", "graded: even positive roots minus odd positive roots"},
          {"vector_basis", "w_1..w_n, w_0, w_-n..w_-1"},
          {"pairing", "<a (x) b, x (x) y> = (-1)^{[b][x]} a(x) b(y)"},
          {"arithmetic", "exact, rational functions of q over Q"}};
}

class Output {
 public:
  Output(std::string command, const Config& cfg) : cfg_(cfg) {
    doc_["command"] = std::move(command);
    doc_["n"] = cfg.n;
    doc_["seed"] = cfg.seed;
    doc_["conventions"] = conventions();
    doc_["reports"] = nlohmann::json::array();
    doc_["result"] = nlohmann::json::object();
  }

  void add(const Report& r) {
    pass_ = pass_ && r.pass();
    reports_.push_back(r);
    doc_["reports"].push_back(r.to_json());
  }
  nlohmann::json& result() { return doc_["result"]; }

  int finish() {
    doc_["pass"] = pass_;
    if (cfg_.format == "json") {
      std::cout << doc_.dump(2) << "\n";
    } else {
      std::cout << doc_["command"].get<std::string>() << " (n = " << cfg_.n << ", seed = " << cfg_.seed << ")\n";
      if (!doc_["result"].empty()) std::cout << doc_["result"].dump(2) << "\n";
      for (const auto& r : reports_) {
        std::cout << "== " << r.title << "\n";
        for (const auto& c : r.checks)
          std::cout << (c.pass ? "  PASS " : "  FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                    << "\n";
      }
      std::cout << (pass_ ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return pass_ ? 0 : 1;
  }

 private:
  const Config& cfg_;
  nlohmann::json doc_;
  std::vector<Report> reports_;
  bool pass_ = true;
};

Module load_module(const std::string& source, int n, const std::vector<int>& theta) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    return module_from_json(nlohmann::json::parse(in));
  }
  return reductive_irreducible(n, theta, parse_weight(source, n));
}

Report m_matrix_report(int n) {
  Report r;
  r.title = "self-duality matrix";
  r.add("M = m_mu delta_{mu+nu,0}", self_duality_M(n) == self_duality_M_expected(n));
  return r;
}

Report decomposition_report(const Module& m) {
  const Decomposition d = decompose(m);
  Report r = check_decomposition(m, d);
  for (const auto& [lambda, mult] : d.multiplicities())
    r.data["multiplicities"].push_back(
        {{"lambda", lambda.str()}, {"multiplicity", mult}, {"dim", irreducible(m.n, lambda)->dim()}});
  return r;
}

Report superdim_report(int n, int cutoff) {
  Report r;
  r.title = "quantum superdimensions";
  for (const auto& lambda : dominant_weights(n, cutoff)) {
    RatFunc sd;
    bool nonzero = true;
    try {
      sd = superdimension(n, lambda);
    } catch (const std::logic_error&) {
      nonzero = false;
    }
    r.add("SD_q(" + lambda.str() + ") != 0", nonzero);
    if (!nonzero) continue;
    const Rational at_one = rf_eval(sd, Rational(1));
    const int classical = classical_superdimension(n, lambda);
    r.add("SD_q(" + lambda.str() + ") at q = 1 is the classical superdimension", at_one == Rational(classical),
          at_one.get_str() + " vs " + std::to_string(classical));
    r.data[lambda.str()] = sd.str();
  }
  return r;
}

int run_suite(Output& out, const Config& cfg, int cutoff) {
  const int n = cfg.n;
  std::mt19937_64 rng(cfg.seed);
  const Module lam = vector_module(n);
  const Scope red = Scope::reductive({});
  out.add(check_relations(lam));
  out.add(check_hopf(lam));
  out.add(check_antipode_square(lam));
  out.add(m_matrix_report(n));
  out.add(decomposition_report(tensor(lam, lam)));
  out.add(vector_coordinate_formulas_check(n));
  out.add(superdim_report(n, cutoff));
  out.add(haar_invariance_check(n, cutoff));
  out.add(antipode_square_check(n, cutoff, rng));
  out.add(product_check(n, std::min(cutoff, 2), rng));
  const auto small = dominant_weights(n, n == 1 ? std::min(cutoff, 2) : 1);
  for (const auto& a : small)
    for (const auto& b : small) out.add(orthogonality_check(n, a, b));
  out.add(section_space_check(invariant_functions(n, red, cutoff)));
  const SectionSpace h = sections(weight_module(n, {-Weight::epsilon(n, 1)}), red, cutoff);
  out.add(section_space_check(h));
  out.add(module_structure_check(h, 1, rng));
  for (int m = 0; m <= std::min(cutoff, 2); ++m) {
    Weight mu(n);
    mu[0] = Rational(-m);
    out.add(borel_weil_check(n, {}, mu, cutoff));
  }
  out.add(borel_weil_check(n, {}, Weight::epsilon(n, 1), cutoff));
  out.add(trivialization(lam, red, std::min(cutoff, 2), rng).report);
  out.add(frobenius_check(lam, weight_module(n, {Weight(n)}), red, std::max(cutoff, 1)));
  out.add(corollary_check(lam, {}, std::max(cutoff, 1)));
  out.result()["E_q dimensions"] = nlohmann::json::array();
  for (int k = 0; k <= cutoff; ++k) out.result()["E_q dimensions"].push_back(invariant_functions(n, red, k).dim());
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact computations for the quantum supergroup OSP_q(1|2n)"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled identities");

  std::string what, lambda_text, mu_text, theta_text, module_text, element_text, word_text, w_lambda, v_weight;
  std::vector<std::string> lambdas;
  int cutoff = 2, power = 0;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Rank n")->check(CLI::Range(1, 6)); };

  auto* check = app.add_subcommand("check", "Relations, Hopf axioms or S^2 on a module");
  check->add_option("what", what, "relations | hopf | antipode-square")
      ->required()
      ->check(CLI::IsMember({"relations", "hopf", "antipode-square"}));
  add_n(check);
  check->add_option("--module", module_text, "Module JSON file (default: vector module)");

  auto* irrep = app.add_subcommand("irrep", "Irreducible module W(lambda)");
  add_n(irrep);
  irrep->add_option("--lambda", lambda_text, "Dominant weight, comma separated")->required();

  auto* decomp = app.add_subcommand("decompose", "Decomposition into irreducibles");
  add_n(decomp);
  decomp->add_option("--power", power, "Tensor power of the vector module");
  decomp->add_option("--lambda", lambdas, "Tensor product of W(lambda) factors (repeatable)");
  decomp->add_option("--module", module_text, "Module JSON file");

  auto* superdim = app.add_subcommand("superdim", "Quantum superdimension SD_q(lambda)");
  add_n(superdim);
  superdim->add_option("--lambda", lambda_text, "Dominant weight")->required();

  auto* ortho = app.add_subcommand("haar-orthogonality", "Orthogonality relations of the Haar functional");
  add_n(ortho);
  ortho->add_option("--lambda", lambda_text, "First weight")->required();
  ortho->add_option("--mu", mu_text, "Second weight (default: lambda)");

  auto* eval = app.add_subcommand("evaluate", "Peter-Weyl element: structure maps and pairing with a word");
  add_n(eval);
  eval->add_option("--element", element_text, "e.g. \"t[1;0;2] + -1/2*t[0;0;0]\"")->required();
  eval->add_option("--word", word_text, "Word such as \"e1 f1 k1^-1\"");

  auto* sec = app.add_subcommand("sections", "Sections H_q(V) up to a cutoff");
  add_n(sec);
  sec->add_option("--theta", theta_text, "Subset of simple roots, e.g. 1,2");
  sec->add_option("--module", module_text, "Module JSON file or highest weight")->required();
  sec->add_option("--cutoff", cutoff, "Largest |lambda|");

  auto* inv = app.add_subcommand("invariants", "Invariant functions E_q up to a cutoff");
  add_n(inv);
  inv->add_option("--theta", theta_text, "Subset of simple roots");
  inv->add_option("--cutoff", cutoff, "Largest |lambda|");

  auto* bw = app.add_subcommand("borel-weil", "Holomorphic sections O_q(V_mu)");
  add_n(bw);
  bw->add_option("--theta", theta_text, "Subset of simple roots");
  bw->add_option("--mu", mu_text, "Highest weight of V_mu")->required();
  bw->add_option("--cutoff", cutoff, "Largest |lambda|");

  auto* frob = app.add_subcommand("frobenius", "Frobenius reciprocity for W(lambda) and V_mu");
  add_n(frob);
  frob->add_option("--theta", theta_text, "Subset of simple roots");
  frob->add_option("--w-lambda", w_lambda, "Highest weight of W")->required();
  frob->add_option("--v-weight", v_weight, "Highest weight of V")->required();
  frob->add_option("--cutoff", cutoff, "Largest |lambda|");

  auto* suite = app.add_subcommand("suite", "All checks for one rank");
  add_n(suite);
  suite->add_option("--cutoff", cutoff, "Largest |lambda|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_global_cache(cache_from_environment());
  const int n = cfg.n;
  try {
    const std::vector<int> theta = parse_theta(theta_text, n);
    if (check->parsed()) {
      Output out("check " + what, cfg);
      Module m = vector_module(n);
      if (!module_text.empty()) {
        std::ifstream in(module_text);
        if (!in) throw std::invalid_argument("cannot read " + module_text);
        m = module_from_json(nlohmann::json::parse(in));
      }
      if (what == "relations") out.add(check_relations(m));
      else if (what == "hopf") out.add(check_hopf(m));
      else out.add(check_antipode_square(m));
      return out.finish();
    }
    if (irrep->parsed()) {
      Output out("irrep", cfg);
      const auto w = irreducible(n, parse_weight(lambda_text, n));
      out.result()["dim"] = w->dim();
      out.result()["module"] = to_json(w->module);
      for (const auto& word : w->words) out.result()["words"].push_back(word.str());
      out.add(check_relations(w->module));
      return out.finish();
    }
    if (decomp->parsed()) {
      Output out("decompose", cfg);
      Module m;
      if (!module_text.empty()) {
        std::ifstream in(module_text);
        if (!in) throw std::invalid_argument("cannot read " + module_text);
        m = module_from_json(nlohmann::json::parse(in));
      } else if (!lambdas.empty()) {
        m = irreducible(n, parse_weight(lambdas.front(), n))->module;
        for (std::size_t k = 1; k < lambdas.size(); ++k) m = tensor(m, irreducible(n, parse_weight(lambdas[k], n))->module);
      } else {
        if (power < 1) throw std::invalid_argument("give --power, --lambda or --module");
        m = *vector_power(n, power);
      }
      const Report r = decomposition_report(m);
      out.result()["dim"] = m.dim();
      out.result()["multiplicities"] = r.data["multiplicities"];
      out.add(r);
      return out.finish();
    }
    if (superdim->parsed()) {
      Output out("superdim", cfg);
      const Weight lambda = parse_weight(lambda_text, n);
      const RatFunc sd = superdimension(n, lambda);
      out.result()["sd"] = sd.str();
      out.result()["sd_at_1"] = rf_eval(sd, Rational(1)).get_str();
      out.result()["classical"] = classical_superdimension(n, lambda);
      return out.finish();
    }
    if (ortho->parsed()) {
      Output out("haar-orthogonality", cfg);
      const Weight a = parse_weight(lambda_text, n);
      out.add(orthogonality_check(n, a, mu_text.empty() ? a : parse_weight(mu_text, n)));
      return out.finish();
    }
    if (eval->parsed()) {
      Output out("evaluate", cfg);
      const PWElement f = parse_pw(element_text, n);
      out.result()["element"] = to_json(f);
      out.result()["haar"] = haar(f).str();
      out.result()["counit"] = counit0(f).str();
      out.result()["antipode"] = to_json(antipode0(f));
      nlohmann::json delta = nlohmann::json::array();
      for (const auto& [pair, c] : coproduct0(f))
        delta.push_back({{"left", to_json(PWElement::basis(pair.first.lambda, pair.first.i, pair.first.j))},
                         {"right", to_json(PWElement::basis(pair.second.lambda, pair.second.i, pair.second.j))},
                         {"coeff", c.str()}});
      out.result()["coproduct"] = delta;
      if (!word_text.empty()) out.result()["value"] = evaluate(f, parse_word(word_text, n)).str();
      return out.finish();
    }
    if (sec->parsed()) {
      Output out("sections", cfg);
      const Scope scope = Scope::reductive(theta);
      const SectionSpace s = sections(load_module(module_text, n, theta), scope, cutoff);
      out.result() = to_json(s);
      out.add(section_space_check(s));
      return out.finish();
    }
    if (inv->parsed()) {
      Output out("invariants", cfg);
      const SectionSpace s = invariant_functions(n, Scope::reductive(theta), cutoff);
      out.result() = to_json(s);
      out.add(section_space_check(s));
      return out.finish();
    }
    if (bw->parsed()) {
      Output out("borel-weil", cfg);
      out.add(borel_weil_check(n, theta, parse_weight(mu_text, n), cutoff));
      return out.finish();
    }
    if (frob->parsed()) {
      Output out("frobenius", cfg);
      const Module w = irreducible(n, parse_weight(w_lambda, n))->module;
      const Module v = reductive_irreducible(n, theta, parse_weight(v_weight, n));
      out.add(frobenius_check(w, v, Scope::reductive(theta), cutoff));
      return out.finish();
    }
    if (suite->parsed()) {
      Output out("suite", cfg);
      return run_suite(out, cfg, cutoff);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
