#include "ospq/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ospq {

Weight Weight::from_ints(const std::vector<int>& coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (int x : coords) c.emplace_back(x);
  return Weight(std::move(c));
}

Weight Weight::epsilon(int rank, int label) {
  Weight w(rank);
  if (label > 0) w[label - 1] = 1;
  if (label < 0) w[-label - 1] = -1;
  return w;
}

bool Weight::is_integer() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::vector<int> Weight::to_ints() const {
  std::vector<int> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    if (x.get_den() != 1) throw std::domain_error("non-integral weight " + str());
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

Rational Weight::size() const {
  Rational s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.c_) x = -x;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight operator*(const Rational& s, Weight w) {
  for (auto& x : w.c_) x *= s;
  return w;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c <=> 0;
  }
  return a.c_.size() <=> b.c_.size();
}

std::string Weight::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  return os.str();
}

Rational dot(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
  Rational s = 0;
  for (int i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w(rank);
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= rank) throw std::invalid_argument("weight '" + text + "' has more than " + std::to_string(rank) + " coordinates");
    w[i++] = parse_rational(item);
  }
  return w;
}

nlohmann::json to_json(const Weight& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : w.coords()) out.push_back(x.get_str());
  return out;
}

Weight weight_from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return Weight(std::move(c));
}

int RootDatum::pairing(int i, const Weight& mu) const {
  Rational p = dot(alpha(i), mu);
  if (p.get_den() != 1) throw std::domain_error("q-exponent (alpha_" + std::to_string(i) + ", " + mu.str() + ") is not an integer");
  return static_cast<int>(p.get_num().get_si());
}

RootDatum build_root_datum(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  RootDatum d;
  d.n = n;
  for (int i = 1; i <= n; ++i) {
    Weight a = Weight::epsilon(n, i);
    if (i < n) a -= Weight::epsilon(n, i + 1);
    d.simple_roots.push_back(a);
    d.parity.push_back(i == n ? 1 : 0);
  }
  d.cartan.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& ai = d.simple_roots[static_cast<std::size_t>(i)];
      Rational a = 2 * dot(ai, d.simple_roots[static_cast<std::size_t>(j)]) / dot(ai, ai);
      d.cartan(i, j) = static_cast<int>(a.get_num().get_si());
    }
  d.highest_root = Rational(2) * Weight::epsilon(n, 1);
  return d;
}

std::vector<Rational> integral_labels(const RootDatum& d, const Weight& mu) {
  std::vector<Rational> l;
  for (int i = 1; i <= d.n; ++i) {
    const Weight& a = d.alpha(i);
    Rational factor = i < d.n ? Rational(2) : Rational(1);
    l.push_back(factor * dot(mu, a) / dot(a, a));
  }
  return l;
}

bool is_integral(const RootDatum& d, const Weight& mu) {
  for (const auto& l : integral_labels(d, mu))
    if (l.get_den() != 1) return false;
  return true;
}

bool is_dominant(const RootDatum& d, const Weight& mu) {
  for (const auto& l : integral_labels(d, mu))
    if (l.get_den() != 1 || sgn(l) < 0) return false;
  return true;
}

Weight two_rho(const RootDatum& d) {
  const int n = d.n;
  Weight even(n), odd(n);
  for (int i = 1; i <= n; ++i) {
    const Weight ei = Weight::epsilon(n, i);
    even += Rational(2) * ei;  // 2 eps_i
    odd += ei;                 // eps_i
    for (int j = i + 1; j <= n; ++j) {
      even += ei - Weight::epsilon(n, j);
      even += ei + Weight::epsilon(n, j);
    }
  }
  return even - odd;
}

std::vector<int> k2rho_exponents(const RootDatum& d) {
  // eps-coordinate i of sum_j c_j alpha_j is c_i - c_{i-1}.
  const Weight target = two_rho(d);
  std::vector<int> c;
  Rational running = 0;
  for (int i = 0; i < d.n; ++i) {
    running += target[i];
    if (running.get_den() != 1) throw std::logic_error("2rho is not in the root lattice");
    c.push_back(static_cast<int>(running.get_num().get_si()));
  }
  Weight check(d.n);
  for (int j = 1; j <= d.n; ++j) check += Rational(c[static_cast<std::size_t>(j - 1)]) * d.alpha(j);
  if (check != target) throw std::logic_error("k2rho exponents do not reproduce 2rho");
  return c;
}

Weight dominant_in_weyl_orbit(const RootDatum& d, const Weight& mu) {
  if (!is_integral(d, mu)) throw std::domain_error("weight " + mu.str() + " is not integral");
  std::vector<Rational> c;
  for (const auto& x : mu.coords()) c.push_back(abs(x));
  std::sort(c.begin(), c.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return Weight(std::move(c));
}

std::vector<Weight> dominant_weights(int n, int cutoff) {
  std::vector<Weight> out;
  for (int total = 0; total <= cutoff; ++total) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (static_cast<int>(cur.size()) == n) {
        if (remaining == 0) parts.push_back(cur);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 0; --p) {
        cur.push_back(p);
        rec(remaining - p, p);
        cur.pop_back();
      }
    };
    rec(total, total);
    for (const auto& p : parts) out.push_back(Weight::from_ints(p));
  }
  return out;
}

}  // namespace ospq
