#include "ospq/coordring.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

const Irrep& irrep_of(const Weight& lambda) { return *irreducible(lambda.rank(), lambda); }

int basis_parity(const Weight& lambda, int i) { return irrep_of(lambda).module.parity[static_cast<std::size_t>(i)]; }

}  // namespace

int PWIndex::parity() const { return basis_parity(lambda, i) ^ basis_parity(lambda, j); }

std::strong_ordering operator<=>(const PWIndex& a, const PWIndex& b) {
  if (auto c = a.lambda <=> b.lambda; c != 0) return c;
  if (auto c = a.i <=> b.i; c != 0) return c;
  return a.j <=> b.j;
}

PWElement PWElement::basis(const Weight& lambda, int i, int j, const RatFunc& c) {
  PWElement f;
  f.add({lambda, i, j}, c);
  return f;
}

PWElement PWElement::one(int n) { return basis(Weight(n), 0, 0); }

RatFunc PWElement::coefficient(const PWIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

int PWElement::degree_bound() const {
  int k = 0;
  for (const auto& [idx, _] : terms_) k = std::max(k, static_cast<int>(idx.lambda.size().get_num().get_si()));
  return k;
}

void PWElement::add(const PWIndex& idx, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PWElement& PWElement::operator+=(const PWElement& o) {
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

PWElement& PWElement::operator-=(const PWElement& o) {
  for (const auto& [idx, c] : o.terms_) add(idx, -c);
  return *this;
}

PWElement operator*(const RatFunc& c, const PWElement& f) {
  PWElement out;
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : f.terms_) out.terms_.emplace(idx, c * v);
  return out;
}

nlohmann::json to_json(const PWElement& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [idx, c] : f.terms())
    out.push_back({{"lambda", to_json(idx.lambda)}, {"i", idx.i}, {"j", idx.j}, {"coeff", to_json(c)}});
  return out;
}

PWElement pw_from_json(const nlohmann::json& j) {
  PWElement f;
  for (const auto& t : j)
    f.add({weight_from_json(t.at("lambda")), t.at("i").get<int>(), t.at("j").get<int>()}, ratfunc_from_json(t.at("coeff")));
  return f;
}

PWElement parse_pw(const std::string& text, int n) {
  PWElement f;
  std::size_t pos = 0;
  auto fail = [&]() { throw std::invalid_argument("cannot parse Peter-Weyl element '" + text + "'"); };
  while (pos < text.size()) {
    const std::size_t open = text.find("t[", pos);
    if (open == std::string::npos) {
      if (text.find_first_not_of(" \t") >= pos && text.substr(pos).find_first_not_of(" \t+") != std::string::npos) fail();
      break;
    }
    std::string prefix = text.substr(pos, open - pos);
    prefix.erase(std::remove_if(prefix.begin(), prefix.end(), [](char c) { return c == ' ' || c == '\t' || c == '+'; }),
                 prefix.end());
    Rational coeff = 1;
    if (!prefix.empty()) {
      if (prefix.back() != '*') {
        if (prefix == "-") coeff = -1;
        else fail();
      } else {
        coeff = parse_rational(prefix.substr(0, prefix.size() - 1));
      }
    }
    const std::size_t close = text.find(']', open);
    if (close == std::string::npos) fail();
    const std::string body = text.substr(open + 2, close - open - 2);
    const auto s1 = body.find(';');
    const auto s2 = body.find(';', s1 == std::string::npos ? 0 : s1 + 1);
    if (s1 == std::string::npos || s2 == std::string::npos) fail();
    const Weight lambda = parse_weight(body.substr(0, s1), n);
    const int i = std::stoi(body.substr(s1 + 1, s2 - s1 - 1));
    const int j = std::stoi(body.substr(s2 + 1));
    const int d = irrep_of(lambda).dim();
    if (i < 0 || j < 0 || i >= d || j >= d) throw std::invalid_argument("index out of range in '" + text + "'");
    f.add({lambda, i, j}, RatFunc(coeff));
    pos = close + 1;
  }
  return f;
}

// ------------------------------------------------------------------ evaluation

RatFunc evaluate(const PWElement& f, const AlgWord& x) {
  RatFunc out(0);
  const Weight* current = nullptr;
  SparseMatrix m;
  Matrix dense;
  for (const auto& [idx, c] : f.terms()) {
    if (current == nullptr || *current != idx.lambda) {
      current = &idx.lambda;
      dense = to_dense(evaluate(irrep_of(idx.lambda).module, x));
    }
    const RatFunc& v = dense(idx.i, idx.j);
    if (!v.is_zero()) out += c * v;
  }
  return out;
}

RatFunc evaluate(const PWElement& f, const AlgElement& x) {
  RatFunc out(0);
  for (const auto& t : x) out += t.coeff * evaluate(f, t.word);
  return out;
}

RatFunc evaluate(const PWTensor& t, const AlgWord& x, const AlgWord& y) {
  RatFunc out(0);
  for (const auto& [pair, c] : t) {
    const RatFunc a = evaluate(PWElement::basis(pair.first.lambda, pair.first.i, pair.first.j), x);
    if (a.is_zero()) continue;
    const RatFunc b = evaluate(PWElement::basis(pair.second.lambda, pair.second.i, pair.second.j), y);
    const bool flip = (pair.second.parity() & x.parity()) != 0;
    out += (flip ? -c : c) * a * b;
  }
  return out;
}

// ------------------------------------------------------------------ product

namespace {

struct ProductTable {
  int dim_mu = 0;
  Decomposition dec;
  std::vector<SparseMatrix> inclusion_rows;  // transposes, so row a of inclusion is column a
};

std::shared_ptr<const ProductTable> product_table(const Weight& lambda, const Weight& mu) {
  static std::mutex m;
  static std::map<std::pair<Weight, Weight>, std::shared_ptr<const ProductTable>> memo;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({lambda, mu});
    if (it != memo.end()) return it->second;
  }
  auto table = std::make_shared<ProductTable>();
  const Irrep& a = irrep_of(lambda);
  const Irrep& b = irrep_of(mu);
  table->dim_mu = b.dim();
  table->dec = decompose(tensor(a.module, b.module));
  for (const auto& s : table->dec.summands) table->inclusion_rows.push_back(s.inclusion.transpose());
  std::lock_guard<std::mutex> lock(m);
  return memo.emplace(std::make_pair(lambda, mu), table).first->second;
}

const PWElement& basis_product(const PWIndex& f, const PWIndex& g) {
  static std::mutex m;
  static std::map<std::pair<PWIndex, PWIndex>, PWElement> memo;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({f, g});
    if (it != memo.end()) return it->second;
  }
  const auto table = product_table(f.lambda, g.lambda);
  const Irrep& wl = irrep_of(f.lambda);
  const Irrep& wm = irrep_of(g.lambda);
  const int pi = wl.module.parity[static_cast<std::size_t>(f.i)];
  const int pr = wm.module.parity[static_cast<std::size_t>(g.i)];
  const int ps = wm.module.parity[static_cast<std::size_t>(g.j)];
  const int row = f.i * table->dim_mu + g.i;
  const int col = f.j * table->dim_mu + g.j;
  PWElement out;
  for (std::size_t k = 0; k < table->dec.summands.size(); ++k) {
    const Summand& s = table->dec.summands[k];
    const auto& par = s.irrep->module.parity;
    for (SparseMatrix::InnerIterator ic(table->inclusion_rows[k], row); ic; ++ic) {
      const int c = static_cast<int>(ic.row());
      for (Eigen::Index d = 0; d < s.projection.rows(); ++d) {
        const RatFunc p = s.projection.coeff(d, col);
        if (p.is_zero()) continue;
        const bool flip = (s.degree & (par[static_cast<std::size_t>(c)] ^ par[static_cast<std::size_t>(d)])) != 0;
        const RatFunc v = ic.value() * p;
        out.add({s.lambda, c, static_cast<int>(d)}, flip ? -v : v);
      }
    }
  }
  if (((pr ^ ps) & pi) != 0) out = RatFunc(-1) * out;
  std::lock_guard<std::mutex> lock(m);
  return memo.emplace(std::make_pair(f, g), std::move(out)).first->second;
}

}  // namespace

PWElement multiply(const PWElement& f, const PWElement& g) {
  PWElement out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out += (ca * cb) * basis_product(a, b);
  return out;
}

PWTensor coproduct0(const PWElement& f) {
  PWTensor out;
  for (const auto& [idx, c] : f.terms()) {
    const auto& par = irrep_of(idx.lambda).module.parity;
    const int pi = par[static_cast<std::size_t>(idx.i)], pj = par[static_cast<std::size_t>(idx.j)];
    for (int k = 0; k < static_cast<int>(par.size()); ++k) {
      const int pk = par[static_cast<std::size_t>(k)];
      const RatFunc v = ((pi ^ pk) & (pj ^ pk)) ? -c : c;
      auto key = std::make_pair(PWIndex{idx.lambda, idx.i, k}, PWIndex{idx.lambda, k, idx.j});
      auto [it, inserted] = out.emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ antipode

namespace {

struct DualData {
  Weight dagger;
  Matrix phi;  // W(dagger) -> W(lambda)*
  Matrix phi_inv;
  int degree = 0;
};

std::shared_ptr<const DualData> dual_data(const Weight& lambda, bool use_inverse) {
  static std::mutex m;
  static std::map<std::pair<Weight, bool>, std::shared_ptr<const DualData>> memo;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({lambda, use_inverse});
    if (it != memo.end()) return it->second;
  }
  const int n = lambda.rank();
  auto data = std::make_shared<DualData>();
  data->dagger = lowest_weight_and_dagger(n, lambda).second;
  const Module dual = dual_module(irrep_of(lambda).module, use_inverse);
  const auto homs = hom_space(irrep_of(data->dagger).module, dual, Scope::full());
  if (homs.size() != 1) throw std::logic_error("no unique isomorphism W(lambda dagger) -> W(lambda)* for " + lambda.str());
  data->phi = homs.front().matrix;
  data->degree = homs.front().degree;
  data->phi_inv = inverse(data->phi);
  std::lock_guard<std::mutex> lock(m);
  return memo.emplace(std::make_pair(lambda, use_inverse), data).first->second;
}

// t_ij(S^{+-1} x) = (-1)^{([i]+[j])[i]} sum_cd (-1)^{|Phi|([c]+[d])} Phi_jc Phi^-1_di t^dagger_cd(x).
PWElement antipode_impl(const PWElement& f, bool use_inverse) {
  PWElement out;
  for (const auto& [idx, coeff] : f.terms()) {
    const auto data = dual_data(idx.lambda, use_inverse);
    const auto& par = irrep_of(idx.lambda).module.parity;
    const auto& dpar = irrep_of(data->dagger).module.parity;
    const int pi = par[static_cast<std::size_t>(idx.i)], pj = par[static_cast<std::size_t>(idx.j)];
    const RatFunc base = ((pi ^ pj) & pi) ? -coeff : coeff;
    for (Eigen::Index c = 0; c < data->phi.cols(); ++c) {
      const RatFunc& a = data->phi(idx.j, c);
      if (a.is_zero()) continue;
      for (Eigen::Index d = 0; d < data->phi_inv.cols(); ++d) {
        const RatFunc& b = data->phi_inv(d, idx.i);
        if (b.is_zero()) continue;
        const bool flip = (data->degree & (dpar[static_cast<std::size_t>(c)] ^ dpar[static_cast<std::size_t>(d)])) != 0;
        const RatFunc v = base * a * b;
        out.add({data->dagger, static_cast<int>(c), static_cast<int>(d)}, flip ? -v : v);
      }
    }
  }
  return out;
}

}  // namespace

PWElement antipode0(const PWElement& f) { return antipode_impl(f, false); }
PWElement antipode0_inverse(const PWElement& f) { return antipode_impl(f, true); }

RatFunc counit0(const PWElement& f) { return evaluate(f, AlgWord{}); }

PWElement tilde(const Weight& lambda, int j, int i) {
  const auto& par = irrep_of(lambda).module.parity;
  const int pi = par[static_cast<std::size_t>(i)], pj = par[static_cast<std::size_t>(j)];
  PWElement s = antipode0(PWElement::basis(lambda, i, j));
  return (pi & (pi ^ pj)) ? RatFunc(-1) * s : s;
}

RatFunc haar(const PWElement& f) {
  for (const auto& [idx, c] : f.terms())
    if (idx.lambda.size() == 0) return c;
  return RatFunc(0);
}

std::vector<PWElement> matrix_coefficients(const Module& w) {
  const int d = w.dim();
  std::vector<PWElement> out(static_cast<std::size_t>(d * d));
  const Decomposition dec = decompose(w);
  for (const auto& s : dec.summands) {
    const Matrix inc = to_dense(s.inclusion);
    const Matrix proj = to_dense(s.projection);
    const auto& par = s.irrep->module.parity;
    for (int a = 0; a < d; ++a)
      for (Eigen::Index c = 0; c < inc.cols(); ++c) {
        if (inc(a, c).is_zero()) continue;
        for (Eigen::Index e = 0; e < proj.rows(); ++e)
          for (int b = 0; b < d; ++b) {
            if (proj(e, b).is_zero()) continue;
            const bool flip = (s.degree & (par[static_cast<std::size_t>(c)] ^ par[static_cast<std::size_t>(e)])) != 0;
            const RatFunc v = inc(a, c) * proj(e, b);
            out[static_cast<std::size_t>(a * d + b)].add({s.lambda, static_cast<int>(c), static_cast<int>(e)},
                                                          flip ? -v : v);
          }
      }
  }
  return out;
}

// ------------------------------------------------------------------ translations

PWElement circ(const AlgWord& x, const PWElement& f) {
  PWElement out;
  const Weight* current = nullptr;
  SparseMatrix m;
  for (const auto& [idx, c] : f.terms()) {
    if (current == nullptr || *current != idx.lambda) {
      current = &idx.lambda;
      m = evaluate(irrep_of(idx.lambda).module, x);
    }
    for (SparseMatrix::InnerIterator it(m, idx.j); it; ++it)
      out.add({idx.lambda, idx.i, static_cast<int>(it.row())}, c * it.value());
  }
  return out;
}

PWElement circ(const AlgElement& x, const PWElement& f) {
  PWElement out;
  for (const auto& t : x) out += t.coeff * circ(t.word, f);
  return out;
}

PWElement dot(const AlgWord& x, const PWElement& f) {
  const WordTerm s = antipode_inverse(x);
  const int px = x.parity();
  PWElement out;
  const Weight* current = nullptr;
  SparseMatrix mt;
  for (const auto& [idx, c] : f.terms()) {
    const auto& par = irrep_of(idx.lambda).module.parity;
    if (current == nullptr || *current != idx.lambda) {
      current = &idx.lambda;
      mt = SparseMatrix(evaluate(irrep_of(idx.lambda).module, s.word).transpose());
    }
    const int pj = par[static_cast<std::size_t>(idx.j)];
    for (SparseMatrix::InnerIterator it(mt, idx.i); it; ++it) {
      const int k = static_cast<int>(it.row());
      const bool flip = (px & (par[static_cast<std::size_t>(k)] ^ pj)) != 0;
      const RatFunc v = s.coeff * c * it.value();
      out.add({idx.lambda, k, idx.j}, flip ? -v : v);
    }
  }
  return out;
}

PWElement dot(const AlgElement& x, const PWElement& f) {
  PWElement out;
  for (const auto& t : x) out += t.coeff * dot(t.word, f);
  return out;
}

// ------------------------------------------------------------------ superdimension

RatFunc superdimension(int n, const Weight& lambda) {
  const Module& w = irreducible(n, lambda)->module;
  const SparseMatrix k = evaluate(w, k2rho_word(n));
  RatFunc sd(0);
  for (int a = 0; a < w.dim(); ++a) {
    const RatFunc v = k.coeff(a, a);
    sd += w.parity[static_cast<std::size_t>(a)] ? -v : v;
  }
  if (sd.is_zero()) throw std::logic_error("quantum superdimension of W(" + lambda.str() + ") vanishes");
  return sd;
}

int classical_superdimension(int n, const Weight& lambda) {
  int sd = 0;
  for (int p : irreducible(n, lambda)->module.parity) sd += p ? -1 : 1;
  return sd;
}

std::vector<PWIndex> pw_basis(int n, int cutoff) {
  std::vector<PWIndex> out;
  for (const auto& lambda : dominant_weights(n, cutoff)) {
    const int d = irreducible(n, lambda)->dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.push_back({lambda, i, j});
  }
  return out;
}

// ------------------------------------------------------------------ checks

namespace {

std::string show(const RatFunc& a, const RatFunc& b) {
  std::ostringstream os;
  os << "lhs = " << a << ", rhs = " << b;
  return os.str();
}

std::vector<AlgWord> sample_words(int n, std::mt19937_64& rng, int samples) {
  std::vector<AlgWord> words{AlgWord{}};
  for (const auto& g : generators(n)) words.push_back(AlgWord{g});
  std::uniform_int_distribution<int> len(2, 4);
  for (int s = 0; s < samples; ++s) words.push_back(random_word(n, len(rng), rng));
  return words;
}

}  // namespace

Report orthogonality_check(int n, const Weight& lambda, const Weight& mu) {
  Report r;
  r.title = "orthogonality " + lambda.str() + " / " + mu.str();
  const Irrep& wl = *irreducible(n, lambda);
  const Irrep& wm = *irreducible(n, mu);
  const bool same = lambda == mu;
  const AlgWord k2rho = k2rho_word(n);
  const RatFunc sd = same ? superdimension(n, lambda) : RatFunc(1);
  const Matrix kl = to_dense(evaluate(wl.module, k2rho));
  const auto& pl = wl.module.parity;
  const auto& pm = wm.module.parity;
  std::size_t fail1 = 0, fail2 = 0, total = 0;
  std::string first1, first2;
  for (int i = 0; i < wl.dim(); ++i)
    for (int j = 0; j < wl.dim(); ++j)
      for (int rr = 0; rr < wm.dim(); ++rr)
        for (int s = 0; s < wm.dim(); ++s) {
          ++total;
          const int bi = pl[static_cast<std::size_t>(i)], bj = pl[static_cast<std::size_t>(j)];
          const int br = pm[static_cast<std::size_t>(rr)];
          // first identity
          RatFunc lhs = haar(multiply(PWElement::basis(lambda, i, j), tilde(mu, rr, s)));
          if (((bj & br) ^ bi ^ bj) != 0) lhs = -lhs;
          RatFunc rhs(0);
          if (same && i == rr) rhs = kl(s, j) / sd;
          if (lhs != rhs) {
            if (fail1++ == 0) first1 = "i,j,r,s = " + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(rr) + "," + std::to_string(s) + ": " + show(lhs, rhs);
          }
          // second identity
          RatFunc lhs2 = haar(multiply(tilde(lambda, i, j), PWElement::basis(mu, rr, s)));
          if ((bj & br) != 0) lhs2 = -lhs2;
          RatFunc rhs2(0);
          if (same && j == s) rhs2 = evaluate(tilde(lambda, i, rr), k2rho) / sd;
          if (lhs2 != rhs2) {
            if (fail2++ == 0) first2 = "i,j,r,s = " + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(rr) + "," + std::to_string(s) + ": " + show(lhs2, rhs2);
          }
        }
  r.add("int t_ij ~t_rs (-1)^{[j][r]+[i]+[j]} = delta_ir delta_lm t_sj(K2rho)/SD", fail1 == 0,
        fail1 ? std::to_string(fail1) + " of " + std::to_string(total) + " fail; first " + first1 : "");
  r.add("int ~t_ij t_rs (-1)^{[j][r]} = delta_js delta_lm ~t_ir(K2rho)/SD", fail2 == 0,
        fail2 ? std::to_string(fail2) + " of " + std::to_string(total) + " fail; first " + first2 : "");
  r.data["combinations"] = total;
  return r;
}

Report haar_invariance_check(int n, int cutoff) {
  Report r;
  r.title = "haar invariance";
  r.add("int 1 = 1", haar(PWElement::one(n)) == RatFunc(1));
  std::size_t bad_left = 0, bad_right = 0, count = 0;
  for (const auto& idx : pw_basis(n, cutoff)) {
    const PWElement f = PWElement::basis(idx.lambda, idx.i, idx.j);
    const PWElement expected = haar(f) * PWElement::one(n);
    PWElement left, right;
    for (const auto& [pair, c] : coproduct0(f)) {
      const RatFunc h1 = haar(PWElement::basis(pair.first.lambda, pair.first.i, pair.first.j));
      const RatFunc h2 = haar(PWElement::basis(pair.second.lambda, pair.second.i, pair.second.j));
      left += (c * h1) * PWElement::basis(pair.second.lambda, pair.second.i, pair.second.j);
      right += (c * h2) * PWElement::basis(pair.first.lambda, pair.first.i, pair.first.j);
    }
    ++count;
    if (left != expected) ++bad_left;
    if (right != expected) ++bad_right;
  }
  r.add("(int (x) id)Delta(f) = int(f) 1", bad_left == 0, std::to_string(bad_left) + " failures");
  r.add("(id (x) int)Delta(f) = int(f) 1", bad_right == 0, std::to_string(bad_right) + " failures");
  r.data["basis_elements"] = count;
  return r;
}

Report antipode_square_check(int n, int cutoff, std::mt19937_64& rng, int samples) {
  Report r;
  r.title = "antipode square";
  const AlgWord k = k2rho_word(n);
  const WordTerm kinv = antipode(k);  // k-powers: S(K) = K^-1
  const auto words = sample_words(n, rng, samples);
  std::size_t bad = 0, count = 0;
  std::string first;
  for (const auto& idx : pw_basis(n, cutoff)) {
    const PWElement f = PWElement::basis(idx.lambda, idx.i, idx.j);
    const PWElement s2 = antipode0(antipode0(f));
    for (const auto& x : words) {
      ++count;
      const RatFunc lhs = evaluate(s2, x);
      const RatFunc rhs = evaluate(f, k * x * kinv.word);
      if (lhs != rhs && bad++ == 0) first = "t[" + idx.lambda.str() + ";" + std::to_string(idx.i) + ";" +
                                             std::to_string(idx.j) + "] on " + x.str() + ": " + show(lhs, rhs);
    }
  }
  r.add("<S0^2 f, x> = <f, K2rho x K2rho^-1>", bad == 0, bad ? std::to_string(bad) + " failures; first " + first : "");
  r.data["pairings"] = count;
  return r;
}

Report product_check(int n, int cutoff, std::mt19937_64& rng, int samples) {
  Report r;
  r.title = "product";
  const auto basis = pw_basis(n, cutoff);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  const auto words = sample_words(n, rng, samples);
  auto elem = [](const PWIndex& i) { return PWElement::basis(i.lambda, i.i, i.j); };
  std::size_t bad_hom = 0, bad_assoc = 0, bad_unit = 0, bad_cop = 0;
  for (int s = 0; s < samples; ++s) {
    const PWElement f = elem(basis[pick(rng)]), g = elem(basis[pick(rng)]), h = elem(basis[pick(rng)]);
    const PWElement fg = multiply(f, g);
    const int pg = g.terms().begin()->first.parity();
    for (const auto& x : words) {
      RatFunc expected(0);
      for (const auto& t : coproduct(x)) {
        const RatFunc a = evaluate(f, t.legs[0]);
        if (a.is_zero()) continue;
        const RatFunc b = evaluate(g, t.legs[1]);
        const bool flip = (pg & t.legs[0].parity()) != 0;
        expected += (flip ? -t.coeff : t.coeff) * a * b;
      }
      if (evaluate(fg, x) != expected) ++bad_hom;
    }
    if (multiply(multiply(f, g), h) != multiply(f, multiply(g, h))) ++bad_assoc;
    if (multiply(PWElement::one(n), f) != f || multiply(f, PWElement::one(n)) != f) ++bad_unit;
    const PWTensor cf = coproduct0(f);
    for (const auto& x : words)
      for (const auto& y : {words[1 % words.size()], words.back()})
        if (evaluate(cf, x, y) != evaluate(f, x * y)) ++bad_cop;
  }
  r.add("<fg, x> = sum (-1)^{[g][x1]} f(x1) g(x2)", bad_hom == 0, std::to_string(bad_hom) + " failures");
  r.add("(fg)h = f(gh)", bad_assoc == 0, std::to_string(bad_assoc) + " failures");
  r.add("1 f = f 1 = f", bad_unit == 0, std::to_string(bad_unit) + " failures");
  r.add("<Delta0 f, x (x) y> = <f, xy>", bad_cop == 0, std::to_string(bad_cop) + " failures");
  return r;
}

Report vector_coordinate_formulas_check(int n) {
  Report r;
  r.title = "vector coordinate formulas";
  const Weight e1 = Weight::epsilon(n, 1);
  const Matrix m = self_duality_M_expected(n);
  auto m_of = [&](int mu) { return m(vector_index(n, mu), vector_index(n, -mu)); };
  std::size_t bad_delta = 0, bad_s = 0;
  for (int mu = -n; mu <= n; ++mu)
    for (int nu = -n; nu <= n; ++nu) {
      const int a = vector_index(n, mu), b = vector_index(n, nu);
      PWTensor expected;
      for (int sigma = -n; sigma <= n; ++sigma) {
        const int sgn = ((mu == 0) + (sigma == 0)) * ((nu == 0) + (sigma == 0));
        expected[{PWIndex{e1, a, vector_index(n, sigma)}, PWIndex{e1, vector_index(n, sigma), b}}] =
            RatFunc(sgn % 2 ? -1 : 1);
      }
      if (coproduct0(PWElement::basis(e1, a, b)) != expected) ++bad_delta;
      const int sgn = (((mu == 0) + (nu == 0)) * (mu == 0)) % 2;
      RatFunc coeff = m_of(-mu) / m_of(-nu);
      if (sgn) coeff = -coeff;
      const PWElement s_expected = PWElement::basis(e1, vector_index(n, -nu), vector_index(n, -mu), coeff);
      if (antipode0(PWElement::basis(e1, a, b)) != s_expected) ++bad_s;
    }
  r.add("Delta0(t_mu nu) closed form", bad_delta == 0, std::to_string(bad_delta) + " failures");
  r.add("S0(t_mu nu) = sign m_-mu t_-nu,-mu / m_-nu", bad_s == 0, std::to_string(bad_s) + " failures");
  return r;
}

}  // namespace ospq
