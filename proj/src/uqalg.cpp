#include "ospq/uqalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ospq {

std::string GenSymbol::str() const {
  switch (kind) {
    case Kind::E: return "e" + std::to_string(index);
    case Kind::F: return "f" + std::to_string(index);
    case Kind::K: break;
  }
  std::string s = "k" + std::to_string(index);
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

int AlgWord::parity() const {
  int p = 0;
  for (const auto& g : factors) p ^= g.parity;
  return p;
}

std::string AlgWord::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? " " : "") + factors[k].str();
  return s;
}

AlgWord operator*(const AlgWord& a, const AlgWord& b) {
  AlgWord w = a;
  w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
  return w;
}

AlgWord parse_word(const std::string& text, int n) {
  std::istringstream is(text);
  std::string tok;
  AlgWord w;
  while (is >> tok) {
    if (tok == "1") continue;
    const char c = tok[0];
    if (c != 'e' && c != 'f' && c != 'k') throw std::invalid_argument("bad generator '" + tok + "'");
    std::size_t pos = 1;
    int i = 0;
    try {
      i = std::stoi(tok.substr(1), &pos);
      pos += 1;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + tok + "'");
    }
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range in '" + tok + "'");
    int power = 1;
    if (pos < tok.size()) {
      if (c != 'k' || tok[pos] != '^') throw std::invalid_argument("bad generator '" + tok + "'");
      power = std::stoi(tok.substr(pos + 1));
    }
    if (c == 'e') w.factors.push_back(GenSymbol::e(n, i));
    if (c == 'f') w.factors.push_back(GenSymbol::f(n, i));
    if (c == 'k' && power != 0) w.factors.push_back(GenSymbol::k(i, power));
  }
  return w;
}

namespace {

// Graded product of two tensor terms with the same number of legs.
TensorTerm tensor_product(const TensorTerm& a, const TensorTerm& b) {
  TensorTerm out{a.coeff * b.coeff, {}};
  int sign = 0;
  for (std::size_t k = 0; k < a.legs.size(); ++k)
    for (std::size_t l = 0; l < k; ++l) sign ^= a.legs[k].parity() & b.legs[l].parity();
  if (sign) out.coeff = -out.coeff;
  for (std::size_t k = 0; k < a.legs.size(); ++k) out.legs.push_back(a.legs[k] * b.legs[k]);
  return out;
}

}  // namespace

TensorElement coproduct(const GenSymbol& g) {
  switch (g.kind) {
    case GenSymbol::Kind::K:
      return {{RatFunc(1), {AlgWord{g}, AlgWord{g}}}};
    case GenSymbol::Kind::E:
      return {{RatFunc(1), {AlgWord{g}, AlgWord{GenSymbol::k(g.index)}}}, {RatFunc(1), {AlgWord{}, AlgWord{g}}}};
    case GenSymbol::Kind::F:
      return {{RatFunc(1), {AlgWord{g}, AlgWord{}}}, {RatFunc(1), {AlgWord{GenSymbol::k(g.index, -1)}, AlgWord{g}}}};
  }
  return {};
}

TensorElement coproduct(const AlgWord& w) {
  TensorElement acc{{RatFunc(1), {AlgWord{}, AlgWord{}}}};
  for (const auto& g : w.factors) {
    TensorElement next;
    for (const auto& a : acc)
      for (const auto& b : coproduct(g)) next.push_back(tensor_product(a, b));
    acc = std::move(next);
  }
  return acc;
}

TensorElement coproduct_on_leg(const TensorElement& t, std::size_t leg) {
  TensorElement out;
  for (const auto& term : t) {
    if (leg >= term.legs.size()) throw std::out_of_range("coproduct_on_leg: leg index");
    for (const auto& split : coproduct(term.legs[leg])) {
      TensorTerm nt{term.coeff * split.coeff, {}};
      for (std::size_t k = 0; k < term.legs.size(); ++k) {
        if (k == leg) {
          nt.legs.push_back(split.legs[0]);
          nt.legs.push_back(split.legs[1]);
        } else {
          nt.legs.push_back(term.legs[k]);
        }
      }
      out.push_back(std::move(nt));
    }
  }
  return out;
}

WordTerm antipode(const GenSymbol& g) {
  switch (g.kind) {
    case GenSymbol::Kind::K:
      return {RatFunc(1), AlgWord{GenSymbol::k(g.index, -g.power)}};
    case GenSymbol::Kind::E:
      return {RatFunc(-1), AlgWord{g, GenSymbol::k(g.index, -1)}};
    case GenSymbol::Kind::F:
      return {RatFunc(-1), AlgWord{GenSymbol::k(g.index), g}};
  }
  return {};
}

WordTerm antipode_inverse(const GenSymbol& g) {
  switch (g.kind) {
    case GenSymbol::Kind::K:
      return {RatFunc(1), AlgWord{GenSymbol::k(g.index, -g.power)}};
    case GenSymbol::Kind::E:
      return {RatFunc(-1), AlgWord{GenSymbol::k(g.index, -1), g}};
    case GenSymbol::Kind::F:
      return {RatFunc(-1), AlgWord{g, GenSymbol::k(g.index)}};
  }
  return {};
}

namespace {

template <class Fn>
WordTerm reverse_graded(const AlgWord& w, Fn on_generator) {
  WordTerm out{RatFunc(1), AlgWord{}};
  int sign = 0;
  int odd_seen = 0;
  for (const auto& g : w.factors) {
    sign ^= odd_seen & g.parity;
    odd_seen ^= g.parity;
  }
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    WordTerm s = on_generator(*it);
    out.coeff *= s.coeff;
    out.word = out.word * s.word;
  }
  if (sign) out.coeff = -out.coeff;
  return out;
}

}  // namespace

WordTerm antipode(const AlgWord& w) {
  return reverse_graded(w, [](const GenSymbol& g) { return antipode(g); });
}

WordTerm antipode_inverse(const AlgWord& w) {
  return reverse_graded(w, [](const GenSymbol& g) { return antipode_inverse(g); });
}

RatFunc counit(const AlgWord& w) {
  for (const auto& g : w.factors)
    if (g.kind != GenSymbol::Kind::K) return RatFunc(0);
  return RatFunc(1);
}

AlgWord k2rho_word(int n) {
  const auto c = k2rho_exponents(build_root_datum(n));
  AlgWord w;
  for (int j = 1; j <= n; ++j)
    if (c[static_cast<std::size_t>(j - 1)] != 0) w.factors.push_back(GenSymbol::k(j, c[static_cast<std::size_t>(j - 1)]));
  return w;
}

std::vector<GenSymbol> generators(int n) { return generators(n, Scope::full()); }

std::vector<GenSymbol> generators(int n, const Scope& scope) {
  std::vector<GenSymbol> g;
  for (int i = 1; i <= n; ++i) {
    g.push_back(GenSymbol::k(i, 1));
    g.push_back(GenSymbol::k(i, -1));
  }
  for (int i = 1; i <= n; ++i)
    if (scope.has_e(i)) g.push_back(GenSymbol::e(n, i));
  for (int i = 1; i <= n; ++i)
    if (scope.has_f(i)) g.push_back(GenSymbol::f(n, i));
  return g;
}

AlgWord random_word(int n, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 4 * n - 1);
  AlgWord w;
  for (int k = 0; k < length; ++k) {
    const int r = pick(rng);
    const int i = r / 4 + 1;
    switch (r % 4) {
      case 0: w.factors.push_back(GenSymbol::e(n, i)); break;
      case 1: w.factors.push_back(GenSymbol::f(n, i)); break;
      case 2: w.factors.push_back(GenSymbol::k(i, 1)); break;
      default: w.factors.push_back(GenSymbol::k(i, -1)); break;
    }
  }
  return w;
}

SparseMatrix evaluate(const Module& m, const GenSymbol& g) {
  if (g.index < 1 || g.index > m.n) throw std::out_of_range("generator index out of range");
  switch (g.kind) {
    case GenSymbol::Kind::E: return m.E(g.index);
    case GenSymbol::Kind::F: return m.F(g.index);
    case GenSymbol::Kind::K: break;
  }
  return m.K(g.index, g.power);
}

SparseMatrix evaluate(const Module& m, const AlgWord& w) {
  SparseMatrix acc = sparse_identity<RatFunc>(m.dim());
  for (const auto& g : w.factors) acc = multiply(acc, evaluate(m, g));
  return acc;
}

SparseMatrix evaluate(const Module& m, const AlgElement& x) {
  SparseMatrix acc(m.dim(), m.dim());
  for (const auto& t : x) acc += t.coeff * evaluate(m, t.word);
  prune_zeros(acc);
  return acc;
}

SparseMatrix evaluate(const std::vector<const Module*>& legs, const TensorElement& t) {
  Eigen::Index dim = 1;
  for (const auto* m : legs) dim *= m->dim();
  SparseMatrix acc(dim, dim);
  for (const auto& term : t) {
    if (term.legs.size() != legs.size()) throw std::invalid_argument("tensor element and module leg count differ");
    SparseMatrix prod = sparse_identity<RatFunc>(1);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      int later = 0;
      for (std::size_t l = k + 1; l < legs.size(); ++l) later ^= term.legs[l].parity();
      SparseMatrix x = evaluate(*legs[k], term.legs[k]);
      if (later) x = multiply(x, legs[k]->parity_operator());
      prod = kronecker(prod, x);
    }
    acc += term.coeff * prod;
  }
  prune_zeros(acc);
  return acc;
}

namespace {

std::string first_difference(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  SparseMatrix d = lhs - rhs;
  prune_zeros(d);
  for (Eigen::Index k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(d, k); it; ++it) {
      std::ostringstream os;
      os << "entry (" << it.row() << "," << it.col() << "): lhs - rhs = " << it.value();
      return os.str();
    }
  return {};
}

void expect_equal(Report& r, const std::string& name, const SparseMatrix& lhs, const SparseMatrix& rhs) {
  const bool ok = sparse_equal(lhs, rhs);
  r.add(name, ok, ok ? std::string{} : first_difference(lhs, rhs));
}

}  // namespace

Report check_relations(const Module& m) {
  Report r;
  r.title = "relations";
  const int n = m.n;
  const RootDatum d = build_root_datum(n);
  const SparseMatrix id = sparse_identity<RatFunc>(m.dim());
  const RatFunc q_diff = RatFunc::q_power(1) - RatFunc::q_power(-1);
  for (int i = 1; i <= n; ++i) {
    const SparseMatrix ki = m.K(i), kinv = m.K(i, -1);
    expect_equal(r, "k" + std::to_string(i) + " k" + std::to_string(i) + "^-1 = 1", multiply(ki, kinv), id);
    for (int j = 1; j <= n; ++j) {
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      expect_equal(r, "k_i k_j = k_j k_i (" + ij + ")", multiply(ki, m.K(j)), multiply(m.K(j), ki));
      const int a = static_cast<int>(dot(d.alpha(i), d.alpha(j)).get_num().get_si());
      if (m.scope.has_e(j))
        expect_equal(r, "k_i e_j = q^(a_i,a_j) e_j k_i (" + ij + ")", multiply(ki, m.E(j)),
                     RatFunc::q_power(a) * multiply(m.E(j), ki));
      if (m.scope.has_f(j))
        expect_equal(r, "k_i f_j = q^-(a_i,a_j) f_j k_i (" + ij + ")", multiply(ki, m.F(j)),
                     RatFunc::q_power(-a) * multiply(m.F(j), ki));
      if (m.scope.has_e(i) && m.scope.has_f(j)) {
        const int sign = (i == n && j == n) ? -1 : 1;  // anticommutator for two odd generators
        SparseMatrix bracket = multiply(m.E(i), m.F(j)) - RatFunc(sign) * multiply(m.F(j), m.E(i));
        SparseMatrix rhs(m.dim(), m.dim());
        if (i == j) rhs = (RatFunc(1) / q_diff) * SparseMatrix(ki - kinv);
        prune_zeros(bracket);
        prune_zeros(rhs);
        expect_equal(r, "[e_i, f_j} (" + ij + ")", bracket, rhs);
      }
    }
  }
  // Serre relations: (Ad x_i)^{1 - a_ij}(x_j) = 0 with Ad x_i(y) = x_i y - (-1)^{[x_i][y]} k_i y k_i^-1 x_i.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int steps = 1 - d.cartan(i - 1, j - 1);
      const int pi = i == n ? 1 : 0;
      const SparseMatrix ki = m.K(i), kinv = m.K(i, -1);
      for (int family = 0; family < 2; ++family) {
        const bool have = family == 0 ? (m.scope.has_e(i) && m.scope.has_e(j)) : (m.scope.has_f(i) && m.scope.has_f(j));
        if (!have) continue;
        const SparseMatrix& xi = family == 0 ? m.E(i) : m.F(i);
        SparseMatrix y = family == 0 ? m.E(j) : m.F(j);
        int py = j == n ? 1 : 0;
        for (int s = 0; s < steps; ++s) {
          SparseMatrix conj = multiply(multiply(ki, y), kinv);
          SparseMatrix next = multiply(xi, y) - RatFunc((pi & py) ? -1 : 1) * multiply(conj, xi);
          prune_zeros(next);
          y = std::move(next);
          py ^= pi;
        }
        const std::string name = std::string("(Ad ") + (family == 0 ? "e" : "f") + std::to_string(i) + ")^" +
                                 std::to_string(steps) + "(" + (family == 0 ? "e" : "f") + std::to_string(j) + ") = 0";
        expect_equal(r, name, y, SparseMatrix(m.dim(), m.dim()));
      }
    }
  return r;
}

Report check_hopf(const Module& m) {
  Report r;
  r.title = "hopf";
  const SparseMatrix id = sparse_identity<RatFunc>(m.dim());
  const std::vector<const Module*> three{&m, &m, &m};
  for (const auto& g : generators(m.n)) {
    const std::string name = g.str();
    const AlgWord w{g};
    const SparseMatrix x = evaluate(m, w);
    const TensorElement delta = coproduct(w);
    SparseMatrix left(m.dim(), m.dim()), right(m.dim(), m.dim());
    SparseMatrix s_left(m.dim(), m.dim()), s_right(m.dim(), m.dim());
    for (const auto& t : delta) {
      left += (t.coeff * counit(t.legs[0])) * evaluate(m, t.legs[1]);
      right += (t.coeff * counit(t.legs[1])) * evaluate(m, t.legs[0]);
      const WordTerm s0 = antipode(t.legs[0]);
      const WordTerm s1 = antipode(t.legs[1]);
      s_left += (t.coeff * s0.coeff) * evaluate(m, s0.word * t.legs[1]);
      s_right += (t.coeff * s1.coeff) * evaluate(m, t.legs[0] * s1.word);
    }
    prune_zeros(left);
    prune_zeros(right);
    prune_zeros(s_left);
    prune_zeros(s_right);
    const SparseMatrix unit = counit(w) * id;
    expect_equal(r, "m(eps (x) id)Delta(" + name + ") = " + name, left, x);
    expect_equal(r, "m(id (x) eps)Delta(" + name + ") = " + name, right, x);
    expect_equal(r, "m(S (x) id)Delta(" + name + ") = eps(" + name + ")", s_left, unit);
    expect_equal(r, "m(id (x) S)Delta(" + name + ") = eps(" + name + ")", s_right, unit);
    const WordTerm sinv = antipode_inverse(w);
    const WordTerm back = antipode(sinv.word);
    expect_equal(r, "S(S^-1(" + name + ")) = " + name, (sinv.coeff * back.coeff) * evaluate(m, back.word), x);
    expect_equal(r, "(Delta (x) id)Delta(" + name + ") = (id (x) Delta)Delta(" + name + ")",
                 evaluate(three, coproduct_on_leg(delta, 0)), evaluate(three, coproduct_on_leg(delta, 1)));
  }
  return r;
}

Report check_antipode_square(const Module& m) {
  Report r;
  r.title = "antipode square";
  const AlgWord k = k2rho_word(m.n);
  const SparseMatrix kmat = evaluate(m, k);
  const WordTerm kinv = antipode(k);
  const SparseMatrix kinv_mat = kinv.coeff * evaluate(m, kinv.word);
  for (const auto& g : generators(m.n)) {
    const WordTerm s1 = antipode(g);
    const WordTerm s2 = antipode(s1.word);
    const SparseMatrix lhs = (s1.coeff * s2.coeff) * evaluate(m, s2.word);
    expect_equal(r, "S^2(" + g.str() + ") = K2rho " + g.str() + " K2rho^-1", lhs,
                 multiply(multiply(kmat, evaluate(m, g)), kinv_mat));
  }
  return r;
}

}  // namespace ospq
