#include "ospq/repcore.hpp"

#include "ospq/cache.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ospq {

int vector_index(int n, int mu) {
  if (mu > 0) return mu - 1;
  if (mu == 0) return n;
  return 2 * n + 1 + mu;
}

int vector_label(int n, int index) {
  if (index < n) return index + 1;
  if (index == n) return 0;
  return index - 2 * n - 1;
}

Module vector_module(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  const int d = 2 * n + 1;
  Module m;
  m.n = n;
  for (int a = 0; a < d; ++a) {
    const int mu = vector_label(n, a);
    m.weights.push_back(Weight::epsilon(n, mu));
    m.parity.push_back(mu == 0 ? 1 : 0);
  }
  auto at = [n](int mu) { return vector_index(n, mu); };
  for (int i = 1; i <= n; ++i) {
    std::vector<Eigen::Triplet<RatFunc>> te, tf;
    if (i < n) {
      te.emplace_back(at(i), at(i + 1), RatFunc(1));
      te.emplace_back(at(-i - 1), at(-i), RatFunc(1));
      tf.emplace_back(at(i + 1), at(i), RatFunc(1));
      tf.emplace_back(at(-i), at(-i - 1), RatFunc(1));
    } else {
      te.emplace_back(at(n), at(0), RatFunc(1));
      te.emplace_back(at(0), at(-n), RatFunc(-1));
      tf.emplace_back(at(0), at(n), RatFunc(1));
      tf.emplace_back(at(-n), at(0), RatFunc(1));
    }
    SparseMatrix e(d, d), f(d, d);
    e.setFromTriplets(te.begin(), te.end());
    f.setFromTriplets(tf.begin(), tf.end());
    m.e.push_back(std::move(e));
    m.f.push_back(std::move(f));
  }
  return m;
}

Module dual_module(const Module& m, bool use_inverse) {
  Module d;
  d.n = m.n;
  d.parity = m.parity;
  d.scope = m.scope;
  for (const auto& w : m.weights) d.weights.push_back(-w);
  const SparseMatrix pi = m.parity_operator();
  for (int i = 1; i <= m.n; ++i) {
    for (int kind = 0; kind < 2; ++kind) {
      const GenSymbol g = kind == 0 ? GenSymbol::e(m.n, i) : GenSymbol::f(m.n, i);
      const WordTerm s = use_inverse ? antipode_inverse(AlgWord{g}) : antipode(AlgWord{g});
      SparseMatrix t = s.coeff * evaluate(m, s.word);
      if (g.parity) t = multiply(pi, t);
      SparseMatrix dt = t.transpose();
      prune_zeros(dt);
      (kind == 0 ? d.e : d.f).push_back(std::move(dt));
    }
  }
  return d;
}

Module tensor(const Module& a, const Module& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor product of modules of different rank");
  Module t;
  t.n = a.n;
  t.scope = a.scope;
  for (int i = 0; i < a.dim(); ++i)
    for (int r = 0; r < b.dim(); ++r) {
      t.weights.push_back(a.weights[static_cast<std::size_t>(i)] + b.weights[static_cast<std::size_t>(r)]);
      t.parity.push_back(a.parity[static_cast<std::size_t>(i)] ^ b.parity[static_cast<std::size_t>(r)]);
    }
  const std::vector<const Module*> legs{&a, &b};
  for (int i = 1; i <= a.n; ++i) {
    t.e.push_back(evaluate(legs, coproduct(AlgWord{GenSymbol::e(a.n, i)})));
    t.f.push_back(evaluate(legs, coproduct(AlgWord{GenSymbol::f(a.n, i)})));
  }
  return t;
}

std::shared_ptr<const Module> vector_power(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Module>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  std::shared_ptr<const Module> out;
  if (k == 0)
    out = std::make_shared<const Module>(weight_module(n, {Weight(n)}));
  else if (k == 1)
    out = std::make_shared<const Module>(vector_module(n));
  else
    out = std::make_shared<const Module>(tensor(*vector_power(n, k - 1), vector_module(n)));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::make_pair(n, k), out).first->second;
}

namespace {

using BlockKey = std::pair<Weight, int>;

std::map<BlockKey, std::vector<int>> weight_parity_blocks(const Module& m) {
  std::map<BlockKey, std::vector<int>> blocks;
  for (int a = 0; a < m.dim(); ++a)
    blocks[{m.weights[static_cast<std::size_t>(a)], m.parity[static_cast<std::size_t>(a)]}].push_back(a);
  return blocks;
}

std::map<Weight, std::vector<int>> weight_blocks(const Module& m) {
  std::map<Weight, std::vector<int>> blocks;
  for (int a = 0; a < m.dim(); ++a) blocks[m.weights[static_cast<std::size_t>(a)]].push_back(a);
  return blocks;
}

Vector restrict_to(const Vector& v, const std::vector<int>& idx) {
  Vector r(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) r(static_cast<Eigen::Index>(k)) = v(idx[k]);
  return r;
}

bool is_zero_vector(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

Vector apply(const SparseMatrix& x, const Vector& v) {
  Vector out = Vector::Zero(x.rows());
  for (Eigen::Index k = 0; k < x.outerSize(); ++k) {
    if (is_zero(v(k))) continue;
    for (SparseMatrix::InnerIterator it(x, k); it; ++it) out(it.row()) += it.value() * v(k);
  }
  return out;
}

Vector apply_word(const Module& m, const AlgWord& w, Vector v) {
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) v = apply(evaluate(m, *it), v);
  return v;
}

// Null space of the scoped e_i on the columns idx.
std::vector<Vector> kernel_of_raising(const Module& m, const std::vector<int>& idx) {
  std::vector<std::vector<std::pair<int, RatFunc>>> rows;  // sparse rows
  std::map<std::pair<int, int>, std::size_t> row_of;
  for (int i = 1; i <= m.n; ++i) {
    if (!m.scope.has_e(i)) continue;
    const SparseMatrix& e = m.E(i);
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (SparseMatrix::InnerIterator it(e, idx[c]); it; ++it) {
        auto key = std::make_pair(i, static_cast<int>(it.row()));
        auto [pos, inserted] = row_of.emplace(key, rows.size());
        if (inserted) rows.emplace_back();
        rows[pos->second].emplace_back(static_cast<int>(c), it.value());
      }
  }
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) a(static_cast<Eigen::Index>(r), c) += v;
  Matrix ns = null_space(a);
  std::vector<Vector> out;
  for (Eigen::Index k = 0; k < ns.cols(); ++k) {
    Vector v = Vector::Zero(m.dim());
    for (std::size_t c = 0; c < idx.size(); ++c) v(idx[c]) = ns(static_cast<Eigen::Index>(c), k);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<HighestWeightVector> highest_weight_vectors(const Module& m) {
  auto blocks = weight_parity_blocks(m);
  std::vector<BlockKey> keys;
  for (const auto& [k, _] : blocks) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const BlockKey& a, const BlockKey& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<HighestWeightVector> out;
  for (const auto& key : keys)
    for (auto& v : kernel_of_raising(m, blocks[key])) out.push_back({key.first, key.second, std::move(v)});
  return out;
}

Generated generate_submodule(const Module& ambient, const Vector& u, const Weight& weight, int parity,
                             const Scope& scope) {
  const int n = ambient.n;
  const RootDatum d = build_root_datum(n);
  const auto blocks = weight_blocks(ambient);
  auto block_of = [&](const Weight& w) -> const std::vector<int>* {
    auto it = blocks.find(w);
    return it == blocks.end() ? nullptr : &it->second;
  };

  Generated g;
  std::vector<Weight> weights;
  std::vector<int> parities;
  std::map<Weight, SpanBuilder<RatFunc>> spans;
  std::map<Weight, std::vector<int>> members;

  auto try_add = [&](const Vector& v, const Weight& w, int p, const AlgWord& word) {
    const auto* idx = block_of(w);
    if (idx == nullptr) return false;
    if (!spans[w].add(restrict_to(v, *idx))) return false;
    for (int a : *idx)
      if (!is_zero(v(a)) && ambient.parity[static_cast<std::size_t>(a)] != p)
        throw std::logic_error("generated vector is not homogeneous");
    members[w].push_back(static_cast<int>(g.vectors.size()));
    g.vectors.push_back(v);
    g.words.push_back(word);
    weights.push_back(w);
    parities.push_back(p);
    return true;
  };

  if (!try_add(u, weight, parity, AlgWord{})) throw std::invalid_argument("generating vector is zero");
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    struct Candidate {
      Weight w;
      int p;
      AlgWord word;
      Vector v;
    };
    std::vector<Candidate> cands;
    for (int k : frontier)
      for (int i = 1; i <= n; ++i) {
        if (!scope.has_f(i)) continue;
        Vector v = apply(ambient.F(i), g.vectors[static_cast<std::size_t>(k)]);
        if (is_zero_vector(v)) continue;
        const int pi = i == n ? 1 : 0;
        cands.push_back({weights[static_cast<std::size_t>(k)] - d.alpha(i), parities[static_cast<std::size_t>(k)] ^ pi,
                         AlgWord{GenSymbol::f(n, i)} * g.words[static_cast<std::size_t>(k)], std::move(v)});
      }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.w > b.w; });
    std::vector<int> next;
    for (const auto& c : cands)
      if (try_add(c.v, c.w, c.p, c.word)) next.push_back(static_cast<int>(g.vectors.size()) - 1);
    frontier = std::move(next);
  }

  const auto dim = static_cast<Eigen::Index>(g.vectors.size());
  Module& m = g.module;
  m.n = n;
  m.weights = weights;
  m.parity = parities;
  m.scope = scope;
  for (int i = 1; i <= n; ++i) {
    for (int kind = 0; kind < 2; ++kind) {
      SparseMatrix out(dim, dim);
      const bool in_scope = kind == 0 ? scope.has_e(i) : scope.has_f(i);
      if (in_scope) {
        const SparseMatrix& x = kind == 0 ? ambient.E(i) : ambient.F(i);
        std::vector<Eigen::Triplet<RatFunc>> trip;
        for (Eigen::Index k = 0; k < dim; ++k) {
          Vector y = apply(x, g.vectors[static_cast<std::size_t>(k)]);
          if (is_zero_vector(y)) continue;
          const Weight target = kind == 0 ? weights[static_cast<std::size_t>(k)] + d.alpha(i)
                                          : weights[static_cast<std::size_t>(k)] - d.alpha(i);
          auto sp = spans.find(target);
          Vector c;
          if (sp == spans.end() || !sp->second.coordinates(restrict_to(y, *block_of(target)), c))
            throw std::logic_error("generated subspace is not closed under the action");
          const auto& mem = members[target];
          for (Eigen::Index j = 0; j < c.size(); ++j)
            if (!is_zero(c(j))) trip.emplace_back(mem[static_cast<std::size_t>(j)], k, c(j));
        }
        out.setFromTriplets(trip.begin(), trip.end());
      }
      (kind == 0 ? m.e : m.f).push_back(std::move(out));
    }
  }
  return g;
}

namespace {

nlohmann::json irrep_to_json(const Irrep& w) {
  nlohmann::json words = nlohmann::json::array();
  for (const auto& x : w.words) words.push_back(x.str());
  return {{"lambda", to_json(w.lambda)}, {"module", to_json(w.module)}, {"words", words}};
}

Irrep irrep_from_json(const nlohmann::json& j) {
  Irrep w;
  w.lambda = weight_from_json(j.at("lambda"));
  w.module = module_from_json(j.at("module"));
  for (const auto& x : j.at("words")) w.words.push_back(parse_word(x.get<std::string>(), w.module.n));
  if (static_cast<int>(w.words.size()) != w.module.dim()) throw std::invalid_argument("irrep JSON: word count");
  return w;
}

Irrep build_irreducible(int n, const Weight& lambda) {
  if (lambda == Weight(n)) return {lambda, weight_module(n, {Weight(n)}), {AlgWord{}}};
  const int k = static_cast<int>(lambda.size().get_num().get_si());
  const auto power = vector_power(n, k);
  std::vector<int> idx;
  for (int a = 0; a < power->dim(); ++a)
    if (power->weights[static_cast<std::size_t>(a)] == lambda) idx.push_back(a);
  const auto hw = kernel_of_raising(*power, idx);
  if (hw.empty()) throw std::logic_error("no highest weight vector of weight " + lambda.str());
  Generated g = generate_submodule(*power, hw.front(), lambda, 0, Scope::full());
  return {lambda, std::move(g.module), std::move(g.words)};
}

}  // namespace

std::shared_ptr<const Irrep> irreducible(int n, const Weight& lambda) {
  const RootDatum d = build_root_datum(n);
  if (lambda.rank() != n || !is_dominant(d, lambda) || !lambda.is_integer())
    throw std::invalid_argument("weight " + lambda.str() + " is not dominant integral");
  static std::mutex mu;
  static std::map<std::pair<int, Weight>, std::shared_ptr<const Irrep>> memo;
  const auto key = std::make_pair(n, lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const nlohmann::json params{{"n", n}, {"lambda", to_json(lambda)}};
  std::shared_ptr<const Irrep> out;
  if (auto cache = global_cache()) {
    if (auto hit = cache->get("irrep", params)) {
      try {
        out = std::make_shared<const Irrep>(irrep_from_json(*hit));
      } catch (const std::exception&) {
        out.reset();
      }
    }
  }
  if (!out) {
    out = std::make_shared<const Irrep>(build_irreducible(n, lambda));
    if (auto cache = global_cache()) cache->put("irrep", params, irrep_to_json(*out));
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, out).first->second;
}

std::vector<std::pair<Weight, int>> Decomposition::multiplicities() const {
  std::vector<std::pair<Weight, int>> out;
  for (const auto& s : summands) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == s.lambda; });
    if (it == out.end())
      out.emplace_back(s.lambda, 1);
    else
      ++it->second;
  }
  return out;
}

Decomposition decompose(const Module& m) {
  const RootDatum d = build_root_datum(m.n);
  Decomposition dec;
  std::vector<Eigen::Triplet<RatFunc>> trip;
  std::vector<Weight> col_weight;
  int offset = 0;
  for (const auto& h : highest_weight_vectors(m)) {
    if (!is_dominant(d, h.weight)) throw std::logic_error("highest weight " + h.weight.str() + " is not dominant");
    Summand s;
    s.lambda = h.weight;
    s.degree = h.parity;
    s.irrep = irreducible(m.n, h.weight);
    std::vector<Eigen::Triplet<RatFunc>> inc;
    for (int k = 0; k < s.irrep->dim(); ++k) {
      const AlgWord& w = s.irrep->words[static_cast<std::size_t>(k)];
      Vector v = apply_word(m, w, h.vec);
      const bool flip = (h.parity & w.parity()) != 0;
      for (Eigen::Index a = 0; a < v.size(); ++a)
        if (!is_zero(v(a))) {
          const RatFunc val = flip ? -v(a) : v(a);
          inc.emplace_back(a, k, val);
          trip.emplace_back(a, offset + k, val);
        }
      col_weight.push_back(s.irrep->module.weights[static_cast<std::size_t>(k)]);
    }
    s.inclusion = SparseMatrix(m.dim(), s.irrep->dim());
    s.inclusion.setFromTriplets(inc.begin(), inc.end());
    offset += s.irrep->dim();
    dec.summands.push_back(std::move(s));
  }
  if (offset != m.dim())
    throw std::logic_error("highest weight vectors generate " + std::to_string(offset) + " of " +
                           std::to_string(m.dim()) + " dimensions");

  // B = [inclusions] is weight preserving, so it is inverted weight block by weight block.
  SparseMatrix b(m.dim(), m.dim());
  b.setFromTriplets(trip.begin(), trip.end());
  std::map<Weight, std::vector<int>> rows = weight_blocks(m), cols;
  for (int c = 0; c < m.dim(); ++c) cols[col_weight[static_cast<std::size_t>(c)]].push_back(c);
  const Matrix bd = to_dense(b);
  std::vector<Eigen::Triplet<RatFunc>> inv_trip;
  for (const auto& [w, r] : rows) {
    const auto& c = cols[w];
    if (c.size() != r.size()) throw std::logic_error("weight multiplicities differ at " + w.str());
    Matrix block(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = bd(r[i], c[j]);
    const Matrix inv = inverse(block);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j)
        if (!is_zero(inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))))
          inv_trip.emplace_back(c[i], r[j], inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  }
  SparseMatrix binv(m.dim(), m.dim());
  binv.setFromTriplets(inv_trip.begin(), inv_trip.end());
  offset = 0;
  for (auto& s : dec.summands) {
    s.projection = binv.middleRows(offset, s.irrep->dim());
    offset += s.irrep->dim();
  }
  const Report r = check_decomposition(m, dec);
  if (!r.pass()) throw std::logic_error("decomposition identities fail");
  return dec;
}

Report check_decomposition(const Module& m, const Decomposition& d) {
  Report r;
  r.title = "decomposition";
  SparseMatrix sum(m.dim(), m.dim());
  int total = 0;
  bool orthogonal = true, intertwining = true;
  for (std::size_t a = 0; a < d.summands.size(); ++a) {
    const auto& sa = d.summands[a];
    total += sa.irrep->dim();
    sum += multiply(sa.inclusion, sa.projection);
    for (std::size_t b = 0; b < d.summands.size(); ++b) {
      const SparseMatrix prod = multiply(sa.projection, d.summands[b].inclusion);
      orthogonal = orthogonal &&
                   (a == b ? sparse_equal(prod, sparse_identity<RatFunc>(sa.irrep->dim())) : sparse_is_zero(prod));
    }
    for (int i = 1; i <= m.n; ++i)
      for (int kind = 0; kind < 2; ++kind) {
        const SparseMatrix& xw = kind == 0 ? sa.irrep->module.E(i) : sa.irrep->module.F(i);
        const SparseMatrix& xm = kind == 0 ? m.E(i) : m.F(i);
        const int sign = (sa.degree && i == m.n) ? -1 : 1;
        intertwining = intertwining && sparse_equal(multiply(sa.inclusion, xw), RatFunc(sign) * multiply(xm, sa.inclusion));
      }
  }
  prune_zeros(sum);
  r.add("dimension sum", total == m.dim(), std::to_string(total) + " vs " + std::to_string(m.dim()));
  r.add("sum of inclusion o projection = identity", sparse_equal(sum, sparse_identity<RatFunc>(m.dim())));
  r.add("projection o inclusion = delta identity", orthogonal);
  r.add("inclusions are intertwiners", intertwining);
  return r;
}

Weight lowest_weight(const Module& v) {
  std::vector<Weight> found;
  for (int a = 0; a < v.dim(); ++a) {
    bool killed = true;
    for (int i = 1; i <= v.n && killed; ++i) {
      if (!v.scope.has_f(i)) continue;
      const SparseMatrix& f = v.F(i);
      for (SparseMatrix::InnerIterator it(f, a); it; ++it)
        if (!is_zero(it.value())) killed = false;
    }
    if (killed) found.push_back(v.weights[static_cast<std::size_t>(a)]);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() != 1) throw std::logic_error("module does not have a unique lowest weight");
  return found.front();
}

std::pair<Weight, Weight> lowest_weight_and_dagger(int n, const Weight& lambda) {
  const Weight low = lowest_weight(irreducible(n, lambda)->module);
  return {low, -low};
}

Matrix self_duality_M(int n) {
  const Module lam = vector_module(n);
  const Module dual = dual_module(lam);
  const auto homs = hom_space(dual, lam, Scope::full());
  if (homs.size() != 1) throw std::logic_error("vector module self-duality: expected a unique isomorphism");
  Matrix m = homs.front().matrix;
  const RatFunc norm = m(vector_index(n, 1), vector_index(n, -1));
  if (is_zero(norm)) throw std::logic_error("vector module self-duality: w*_-1 does not map to w_1");
  const RatFunc inv = RatFunc(1) / norm;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) m(i, j) *= inv;
  return m;
}

Matrix self_duality_M_expected(int n) {
  const int d = 2 * n + 1;
  Matrix m = Matrix::Zero(d, d);
  const RatFunc mq = RatFunc(LaurentPoly::monomial(-1, 1));
  auto power = [&](int k) {
    RatFunc r(1);
    for (int s = 0; s < k; ++s) r *= mq;
    return r;
  };
  for (int mu = -n; mu <= n; ++mu) {
    const int k = mu > 0 ? mu - 1 : mu == 0 ? n : 2 * n + mu;
    m(vector_index(n, mu), vector_index(n, -mu)) = power(k);
  }
  return m;
}

Module restrict(const Module& m, const Scope& scope) {
  Module r = m;
  r.scope = scope;
  return r;
}

Module extend_to_parabolic(const Module& v) {
  if (v.scope.flavor != Flavor::Reductive) throw std::invalid_argument("extend_to_parabolic expects a reductive module");
  Module p = v;
  p.scope = Scope::parabolic(v.scope.theta);
  for (int i = 1; i <= v.n; ++i)
    if (!v.scope.in_theta(i)) {
      p.e[static_cast<std::size_t>(i - 1)] = SparseMatrix(v.dim(), v.dim());
      p.f[static_cast<std::size_t>(i - 1)] = SparseMatrix(v.dim(), v.dim());
    }
  if (!check_relations(p).pass()) throw std::logic_error("parabolic extension violates the defining relations");
  return p;
}

Module reductive_irreducible(int n, const std::vector<int>& theta, const Weight& mu) {
  const RootDatum d = build_root_datum(n);
  const Scope scope = Scope::reductive(theta);
  if (!is_integral(d, mu)) {
    if (!theta.empty()) throw std::domain_error("non-integral weight " + mu.str() + " with nonempty theta");
    Module c = weight_module(n, {mu});
    c.scope = scope;
    return c;
  }
  const auto w = irreducible(n, dominant_in_weyl_orbit(d, mu));
  std::vector<int> idx;
  for (int a = 0; a < w->dim(); ++a)
    if (w->module.weights[static_cast<std::size_t>(a)] == mu) idx.push_back(a);
  if (idx.size() != 1) throw std::logic_error("weight " + mu.str() + " is not extremal");
  Vector u = Vector::Zero(w->dim());
  u(idx.front()) = RatFunc(1);
  for (int j : theta)
    if (!is_zero_vector(apply(w->module.E(j), u)))
      throw std::invalid_argument("weight " + mu.str() + " is not highest for theta");
  return generate_submodule(w->module, u, mu, w->module.parity[static_cast<std::size_t>(idx.front())], scope).module;
}

std::vector<Intertwiner> hom_space(const Module& a, const Module& b, const Scope& scope) {
  if (a.n != b.n) throw std::invalid_argument("hom_space: rank mismatch");
  const int n = a.n;
  std::vector<Intertwiner> out;
  const auto blocks_b = weight_blocks(b);
  for (int degree = 0; degree < 2; ++degree) {
    std::vector<std::pair<int, int>> unknowns;
    std::map<std::pair<int, int>, int> unknown_of;
    for (int c = 0; c < a.dim(); ++c) {
      auto it = blocks_b.find(a.weights[static_cast<std::size_t>(c)]);
      if (it == blocks_b.end()) continue;
      for (int r : it->second)
        if ((b.parity[static_cast<std::size_t>(r)] ^ a.parity[static_cast<std::size_t>(c)]) == degree) {
          unknown_of[{r, c}] = static_cast<int>(unknowns.size());
          unknowns.emplace_back(r, c);
        }
    }
    if (unknowns.empty()) continue;
    std::map<std::tuple<int, int, int>, std::map<int, RatFunc>> eqs;
    int gen = 0;
    for (int i = 1; i <= n; ++i)
      for (int kind = 0; kind < 2; ++kind, ++gen) {
        if (!(kind == 0 ? scope.has_e(i) : scope.has_f(i))) continue;
        const SparseMatrix& xa = kind == 0 ? a.E(i) : a.F(i);
        const SparseMatrix& xb = kind == 0 ? b.E(i) : b.F(i);
        const SparseMatrix xat = xa.transpose();
        const RatFunc s((degree && i == n) ? -1 : 1);
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          const auto [r0, c0] = unknowns[u];
          for (SparseMatrix::InnerIterator it(xat, c0); it; ++it)
            eqs[{gen, r0, static_cast<int>(it.row())}][static_cast<int>(u)] += it.value();
          for (SparseMatrix::InnerIterator it(xb, r0); it; ++it)
            eqs[{gen, static_cast<int>(it.row()), c0}][static_cast<int>(u)] -= s * it.value();
        }
      }
    Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(eqs.size()), static_cast<Eigen::Index>(unknowns.size()));
    Eigen::Index row = 0;
    for (const auto& [_, terms] : eqs) {
      for (const auto& [u, v] : terms) sys(row, u) = v;
      ++row;
    }
    const Matrix ns = null_space(sys);
    for (Eigen::Index k = 0; k < ns.cols(); ++k) {
      Intertwiner phi{Matrix::Zero(b.dim(), a.dim()), degree, scope};
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        phi.matrix(unknowns[u].first, unknowns[u].second) = ns(static_cast<Eigen::Index>(u), k);
      out.push_back(std::move(phi));
    }
  }
  return out;
}

bool is_intertwiner(const Intertwiner& phi, const Module& a, const Module& b) {
  if (phi.matrix.rows() != b.dim() || phi.matrix.cols() != a.dim()) return false;
  for (Eigen::Index r = 0; r < phi.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < phi.matrix.cols(); ++c) {
      if (is_zero(phi.matrix(r, c))) continue;
      if (b.weights[static_cast<std::size_t>(r)] != a.weights[static_cast<std::size_t>(c)]) return false;
      if ((b.parity[static_cast<std::size_t>(r)] ^ a.parity[static_cast<std::size_t>(c)]) != phi.degree) return false;
    }
  const SparseMatrix p = to_sparse(phi.matrix);
  for (int i = 1; i <= a.n; ++i)
    for (int kind = 0; kind < 2; ++kind) {
      if (!(kind == 0 ? phi.scope.has_e(i) : phi.scope.has_f(i))) continue;
      const SparseMatrix& xa = kind == 0 ? a.E(i) : a.F(i);
      const SparseMatrix& xb = kind == 0 ? b.E(i) : b.F(i);
      const RatFunc s((phi.degree && i == a.n) ? -1 : 1);
      if (!sparse_equal(multiply(p, xa), s * multiply(xb, p))) return false;
    }
  return true;
}

Matrix tensor_maps(const Matrix& p, const Matrix& r, int r_degree, const std::vector<int>& p_source_parity) {
  SparseMatrix ps = to_sparse(p);
  if (r_degree) {
    std::vector<RatFunc> diag;
    for (int x : p_source_parity) diag.emplace_back(x ? -1 : 1);
    ps = multiply(ps, sparse_diagonal(diag));
  }
  return to_dense(kronecker(ps, to_sparse(r)));
}

Intertwiner cartan_product_hom(int n, const Weight& lambda1, const Intertwiner& phi1, const Weight& lambda2,
                               const Intertwiner& phi2) {
  const auto w1 = irreducible(n, lambda1);
  const auto w2 = irreducible(n, lambda2);
  const Module t = tensor(w1->module, w2->module);
  const Decomposition dec = decompose(t);
  const Weight top = lambda1 + lambda2;
  auto it = std::find_if(dec.summands.begin(), dec.summands.end(), [&](const Summand& s) { return s.lambda == top; });
  if (it == dec.summands.end()) throw std::logic_error("W(lambda1 + lambda2) missing from the tensor product");
  Intertwiner out;
  out.degree = phi1.degree ^ phi2.degree ^ it->degree;
  out.scope = phi1.scope;
  out.matrix = tensor_maps(phi1.matrix, phi2.matrix, phi2.degree, w1->module.parity) * to_dense(it->inclusion);
  if (is_zero_matrix(out.matrix)) throw std::logic_error("induced Cartan product homomorphism vanishes");
  return out;
}

}  // namespace ospq
