#include "ospq/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ospq {

Scope Scope::reductive(std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  return {Flavor::Reductive, std::move(theta)};
}

Scope Scope::parabolic(std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  return {Flavor::Parabolic, std::move(theta)};
}

bool Scope::in_theta(int i) const { return std::binary_search(theta.begin(), theta.end(), i); }

std::string Scope::str() const {
  std::ostringstream os;
  os << (flavor == Flavor::Full ? "full" : flavor == Flavor::Reductive ? "reductive" : "parabolic");
  if (flavor != Flavor::Full) {
    os << " {";
    for (std::size_t k = 0; k < theta.size(); ++k) os << (k ? "," : "") << theta[k];
    os << "}";
  }
  return os.str();
}

std::vector<int> parse_theta(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = std::stoi(item);
    if (i < 1 || i > n) throw std::invalid_argument("theta index " + item + " outside 1.." + std::to_string(n));
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SparseMatrix Module::K(int i, int power) const {
  const RootDatum d = build_root_datum(n);
  std::vector<RatFunc> diag;
  diag.reserve(weights.size());
  for (const auto& w : weights) diag.push_back(RatFunc::q_power(power * d.pairing(i, w)));
  return sparse_diagonal(diag);
}

SparseMatrix Module::parity_operator() const {
  std::vector<RatFunc> diag;
  for (int p : parity) diag.emplace_back(p ? -1 : 1);
  return sparse_diagonal(diag);
}

std::vector<Weight> Module::character() const {
  std::vector<Weight> c = weights;
  std::sort(c.begin(), c.end());
  return c;
}

Module weight_module(int n, const std::vector<Weight>& weights, const std::vector<int>& parity) {
  Module m;
  m.n = n;
  m.weights = weights;
  m.parity = parity.empty() ? std::vector<int>(weights.size(), 0) : parity;
  const auto d = static_cast<Eigen::Index>(weights.size());
  m.e.assign(static_cast<std::size_t>(n), SparseMatrix(d, d));
  m.f.assign(static_cast<std::size_t>(n), SparseMatrix(d, d));
  return m;
}

namespace {

nlohmann::json sparse_to_json(const SparseMatrix& m) {
  std::vector<std::tuple<Eigen::Index, Eigen::Index, RatFunc>> entries;
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      if (!is_zero(it.value())) entries.emplace_back(it.row(), it.col(), it.value());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [r, c, v] : entries) out.push_back({r, c, to_json(v)});
  return out;
}

SparseMatrix sparse_from_json(const nlohmann::json& j, Eigen::Index dim) {
  std::vector<Eigen::Triplet<RatFunc>> t;
  for (const auto& e : j) t.emplace_back(e[0].get<Eigen::Index>(), e[1].get<Eigen::Index>(), ratfunc_from_json(e[2]));
  SparseMatrix m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

nlohmann::json to_json(const Module& m) {
  nlohmann::json j;
  j["n"] = m.n;
  j["dim"] = m.dim();
  j["parity"] = m.parity;
  j["weights"] = nlohmann::json::array();
  for (const auto& w : m.weights) j["weights"].push_back(to_json(w));
  nlohmann::json gens = nlohmann::json::object();
  for (int i = 1; i <= m.n; ++i) {
    gens["e" + std::to_string(i)] = sparse_to_json(m.E(i));
    gens["f" + std::to_string(i)] = sparse_to_json(m.F(i));
  }
  j["gens"] = std::move(gens);
  return j;
}

Module module_from_json(const nlohmann::json& j) {
  Module m;
  m.n = j.at("n").get<int>();
  m.parity = j.at("parity").get<std::vector<int>>();
  for (const auto& w : j.at("weights")) m.weights.push_back(weight_from_json(w));
  const Eigen::Index d = m.dim();
  if (j.at("dim").get<Eigen::Index>() != d || static_cast<Eigen::Index>(m.weights.size()) != d)
    throw std::invalid_argument("module JSON: inconsistent dimension");
  for (int i = 1; i <= m.n; ++i) {
    m.e.push_back(sparse_from_json(j.at("gens").at("e" + std::to_string(i)), d));
    m.f.push_back(sparse_from_json(j.at("gens").at("f" + std::to_string(i)), d));
  }
  return m;
}

bool has_degree(const SparseMatrix& m, const std::vector<int>& row_parity, const std::vector<int>& col_parity,
                int degree) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (is_zero(it.value())) continue;
      const int pr = row_parity[static_cast<std::size_t>(it.row())];
      const int pc = col_parity[static_cast<std::size_t>(it.col())];
      if (((pr + pc + degree) & 1) != 0) return false;
    }
  return true;
}

}  // namespace ospq
