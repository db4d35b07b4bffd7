#include "ospq/homogeneous.hpp"

#include <algorithm>

#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

const Irrep& irrep_of(const Weight& lambda) { return *irreducible(lambda.rank(), lambda); }

int weight_norm(const Weight& w) { return static_cast<int>(w.size().get_num().get_si()); }

int pw_parity(const PWIndex& idx) { return idx.parity(); }

BundleElement zero_bundle(int dim) { return BundleElement(static_cast<std::size_t>(dim)); }

bool equal(const BundleElement& a, const BundleElement& b) { return a == b; }

std::string count_detail(std::size_t bad, std::size_t total) {
  return std::to_string(bad) + " of " + std::to_string(total) + " fail";
}

// Splits f into its even and odd parts.
std::pair<PWElement, PWElement> by_parity(const PWElement& f) {
  PWElement even, odd;
  for (const auto& [idx, c] : f.terms()) (pw_parity(idx) ? odd : even).add(idx, c);
  return {even, odd};
}

bool in_invariants(const PWElement& f, int n, const Scope& scope) {
  for (const auto& g : generators(n, scope)) {
    const AlgWord x{g};
    if (circ(x, f) != counit(x) * f) return false;
  }
  return true;
}

bool in_w_tensor_invariants(const BundleElement& xi, int n, const Scope& scope) {
  for (const auto& f : xi)
    if (!in_invariants(f, n, scope)) return false;
  return true;
}

int max_constituent(const Module& w) {
  int k = 0;
  for (const auto& [lambda, _] : decompose(w).multiplicities()) k = std::max(k, weight_norm(lambda));
  return k;
}

Module with_scope(Module m, const Scope& scope) {
  m.scope = scope;
  return m;
}

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace

// ------------------------------------------------------------------ bundle elements

BundleElement circ(const AlgWord& x, const Module& v, const BundleElement& zeta) {
  BundleElement out = zero_bundle(v.dim());
  const int px = x.parity();
  for (int a = 0; a < v.dim(); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (zeta[ua].is_zero()) continue;
    out[ua] = circ(x, zeta[ua]);
    if (px & v.parity[ua]) out[ua] = RatFunc(-1) * out[ua];
  }
  return out;
}

BundleElement dot(const AlgWord& x, const Module& v, const BundleElement& zeta) {
  BundleElement out = zero_bundle(v.dim());
  const int px = x.parity();
  for (int a = 0; a < v.dim(); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (zeta[ua].is_zero()) continue;
    out[ua] = dot(x, zeta[ua]);
    if (px & v.parity[ua]) out[ua] = RatFunc(-1) * out[ua];
  }
  return out;
}

BundleElement act_antipode(const AlgWord& x, const Module& v, const BundleElement& zeta) {
  const WordTerm s = antipode(x);
  const SparseMatrix m = evaluate(v, s.word);
  BundleElement out = zero_bundle(v.dim());
  for (Eigen::Index a = 0; a < m.outerSize(); ++a)
    for (SparseMatrix::InnerIterator it(m, a); it; ++it)
      out[static_cast<std::size_t>(it.row())] += (s.coeff * it.value()) * zeta[static_cast<std::size_t>(a)];
  return out;
}

BundleElement left_multiply(const PWElement& a, const Module& v, const BundleElement& zeta) {
  const auto [even, odd] = by_parity(a);
  BundleElement out = zero_bundle(v.dim());
  for (int b = 0; b < v.dim(); ++b) {
    const auto ub = static_cast<std::size_t>(b);
    if (zeta[ub].is_zero()) continue;
    out[ub] = multiply(even, zeta[ub]);
    const PWElement o = multiply(odd, zeta[ub]);
    if (v.parity[ub]) out[ub] -= o;
    else out[ub] += o;
  }
  return out;
}

BundleElement right_multiply(const BundleElement& zeta, const PWElement& a) {
  BundleElement out(zeta.size());
  for (std::size_t b = 0; b < zeta.size(); ++b)
    if (!zeta[b].is_zero()) out[b] = multiply(zeta[b], a);
  return out;
}

bool is_zero(const BundleElement& zeta) {
  for (const auto& f : zeta)
    if (!f.is_zero()) return false;
  return true;
}

std::optional<GenSymbol> section_violation(const Module& v, const Scope& scope, const BundleElement& zeta) {
  for (const auto& g : generators(v.n, scope)) {
    const AlgWord x{g};
    if (!equal(circ(x, v, zeta), act_antipode(x, v, zeta))) return g;
  }
  return std::nullopt;
}

std::vector<BundleElement> comodule_map(const Module& w) {
  const int d = w.dim();
  const auto t = matrix_coefficients(w);
  std::vector<BundleElement> out(static_cast<std::size_t>(d), zero_bundle(d));
  for (int b = 0; b < d; ++b)
    for (int a = 0; a < d; ++a) {
      const int pa = w.parity[static_cast<std::size_t>(a)], pb = w.parity[static_cast<std::size_t>(b)];
      const PWElement& f = t[static_cast<std::size_t>(a * d + b)];
      out[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = (pa & (pa ^ pb)) ? RatFunc(-1) * f : f;
    }
  return out;
}

// ------------------------------------------------------------------ section spaces

int SectionSpace::block_dim(std::size_t b) const {
  return static_cast<int>(blocks[b].homs.size()) * irrep_of(blocks[b].lambda).dim();
}

int SectionSpace::parity(const Section& s) const {
  const auto& blk = blocks[static_cast<std::size_t>(s.block)];
  return blk.homs[static_cast<std::size_t>(s.hom)].degree ^
         irrep_of(blk.lambda).module.parity[static_cast<std::size_t>(s.row)];
}

BundleElement SectionSpace::expand(const Section& s) const {
  const auto& blk = blocks[static_cast<std::size_t>(s.block)];
  const Matrix& phi = blk.homs[static_cast<std::size_t>(s.hom)].matrix;
  BundleElement out = zero_bundle(v.dim());
  for (Eigen::Index j = 0; j < phi.cols(); ++j) {
    bool any = false;
    for (Eigen::Index a = 0; a < phi.rows() && !any; ++a) any = !phi(a, j).is_zero();
    if (!any) continue;
    const PWElement t = tilde(blk.lambda, s.row, static_cast<int>(j));
    for (Eigen::Index a = 0; a < phi.rows(); ++a)
      if (!phi(a, j).is_zero()) out[static_cast<std::size_t>(a)] += phi(a, j) * t;
  }
  return out;
}

std::vector<BundleElement> SectionSpace::expand_all() const {
  std::vector<BundleElement> out;
  out.reserve(basis.size());
  for (const auto& s : basis) out.push_back(expand(s));
  return out;
}

nlohmann::json to_json(const SectionSpace& s) {
  nlohmann::json j;
  j["scope"] = s.scope.str();
  j["cutoff"] = s.cutoff;
  j["dim"] = s.dim();
  j["module"] = to_json(s.v);
  j["blocks"] = nlohmann::json::array();
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto& blk = s.blocks[b];
    nlohmann::json jb;
    jb["lambda"] = to_json(blk.lambda);
    jb["d_lambda"] = irrep_of(blk.lambda).dim();
    jb["dim"] = s.block_dim(b);
    jb["intertwiners"] = nlohmann::json::array();
    for (const auto& phi : blk.homs) {
      nlohmann::json m = nlohmann::json::array();
      for (Eigen::Index r = 0; r < phi.matrix.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < phi.matrix.cols(); ++c) row.push_back(to_json(phi.matrix(r, c)));
        m.push_back(std::move(row));
      }
      jb["intertwiners"].push_back({{"degree", phi.degree}, {"matrix", std::move(m)}});
    }
    j["blocks"].push_back(std::move(jb));
  }
  j["sections"] = nlohmann::json::array();
  for (const auto& sec : s.basis) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& f : s.expand(sec)) comps.push_back(to_json(f));
    j["sections"].push_back({{"block", sec.block}, {"hom", sec.hom}, {"row", sec.row}, {"expansion", std::move(comps)}});
  }
  return j;
}

BundleSpan::BundleSpan(int dim_v, const std::vector<BundleElement>& elements) : dim_v_(dim_v) {
  for (const auto& z : elements)
    for (int a = 0; a < dim_v; ++a)
      for (const auto& [idx, _] : z[static_cast<std::size_t>(a)].terms()) index_.emplace(std::make_pair(a, idx), 0);
  Eigen::Index k = 0;
  for (auto& [_, v] : index_) v = k++;
  for (const auto& z : elements) {
    bool outside = false;
    if (span_.add(flatten(z, outside))) used_.push_back(count_);
    ++count_;
  }
}

Vector BundleSpan::flatten(const BundleElement& zeta, bool& outside) const {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(index_.size()));
  outside = false;
  for (int a = 0; a < dim_v_; ++a)
    for (const auto& [idx, c] : zeta[static_cast<std::size_t>(a)].terms()) {
      auto it = index_.find({a, idx});
      if (it == index_.end()) {
        outside = true;
        return out;
      }
      out(it->second) = c;
    }
  return out;
}

std::optional<Vector> BundleSpan::coordinates(const BundleElement& zeta) const {
  bool outside = false;
  const Vector flat = flatten(zeta, outside);
  if (outside) return std::nullopt;
  Vector c;
  if (!span_.coordinates(flat, c)) return std::nullopt;
  Vector out = Vector::Zero(count_);
  for (std::size_t k = 0; k < used_.size(); ++k) out(used_[k]) = c(static_cast<Eigen::Index>(k));
  return out;
}

SectionSpace sections(const Module& v, const Scope& scope, int cutoff) {
  if (scope.flavor == Flavor::Full) throw std::invalid_argument("sections need a reductive or parabolic scope");
  const Module vs = with_scope(v, scope);
  const RootDatum d = build_root_datum(v.n);
  // W(lambda) has integral weights only, so nothing maps to a non-integral weight space
  const bool integral =
      std::all_of(vs.weights.begin(), vs.weights.end(), [&](const Weight& w) { return is_integral(d, w); });
  if (integral && !check_relations(vs).pass())
    throw std::invalid_argument("module violates the relations of " + scope.str());
  SectionSpace s;
  s.scope = scope;
  s.v = vs;
  s.cutoff = cutoff;
  for (const auto& lambda : dominant_weights(v.n, cutoff)) {
    SectionBlock blk{lambda, integral ? hom_space(irrep_of(lambda).module, vs, scope) : std::vector<Intertwiner>{}};
    const int d = irrep_of(lambda).dim();
    const int b = static_cast<int>(s.blocks.size());
    for (int h = 0; h < static_cast<int>(blk.homs.size()); ++h)
      for (int i = 0; i < d; ++i) s.basis.push_back({b, h, i});
    s.blocks.push_back(std::move(blk));
  }
  return s;
}

SectionSpace invariant_functions(int n, const Scope& scope, int cutoff) {
  if (scope.flavor != Flavor::Reductive) throw std::invalid_argument("invariant functions need a reductive scope");
  return sections(weight_module(n, {Weight(n)}), scope, cutoff);
}

SectionSpace holomorphic_sections(const Module& v, const Scope& scope, int cutoff) {
  if (scope.flavor != Flavor::Parabolic) throw std::invalid_argument("holomorphic sections need a parabolic scope");
  return sections(v, scope, cutoff);
}

std::vector<PWElement> invariant_elements(const SectionSpace& e) {
  std::vector<PWElement> out;
  for (const auto& z : e.expand_all()) out.push_back(z.front());
  return out;
}

Module section_module(const SectionSpace& s) {
  const int n = s.v.n;
  Module m;
  m.n = n;
  m.e.assign(static_cast<std::size_t>(n), SparseMatrix(s.dim(), s.dim()));
  m.f.assign(static_cast<std::size_t>(n), SparseMatrix(s.dim(), s.dim()));
  for (const auto& sec : s.basis) {
    m.parity.push_back(s.parity(sec));
    m.weights.push_back(irrep_of(s.blocks[static_cast<std::size_t>(sec.block)].lambda)
                            .module.weights[static_cast<std::size_t>(sec.row)]);
  }
  const auto expanded = s.expand_all();
  std::vector<std::vector<Eigen::Triplet<RatFunc>>> e_trip(static_cast<std::size_t>(n)), f_trip(e_trip);
  std::size_t start = 0;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto len = static_cast<std::size_t>(s.block_dim(b));
    if (len == 0) continue;
    const std::vector<BundleElement> block(expanded.begin() + static_cast<std::ptrdiff_t>(start),
                                           expanded.begin() + static_cast<std::ptrdiff_t>(start + len));
    const BundleSpan span(s.v.dim(), block);
    for (std::size_t k = 0; k < len; ++k) {
      const auto col = static_cast<int>(start + k);
      for (int i = 1; i <= n; ++i) {
        const RatFunc kv = m.K(i).coeff(col, col);
        if (dot(AlgWord{GenSymbol::k(i, 1)}, s.v, block[k]) != [&] {
              BundleElement z = block[k];
              for (auto& f : z) f = kv * f;
              return z;
            }())
          throw std::logic_error("dot action of k" + std::to_string(i) + " does not match the section weight");
        for (int kind = 0; kind < 2; ++kind) {
          const GenSymbol g = kind == 0 ? GenSymbol::e(n, i) : GenSymbol::f(n, i);
          const auto c = span.coordinates(dot(AlgWord{g}, s.v, block[k]));
          if (!c) throw std::logic_error("dot action of " + g.str() + " leaves the section block");
          auto& trip = (kind == 0 ? e_trip : f_trip)[static_cast<std::size_t>(i - 1)];
          for (Eigen::Index r = 0; r < c->size(); ++r)
            if (!(*c)(r).is_zero()) trip.emplace_back(static_cast<int>(start) + static_cast<int>(r), col, (*c)(r));
        }
      }
    }
    start += len;
  }
  for (int i = 0; i < n; ++i) {
    m.e[static_cast<std::size_t>(i)].setFromTriplets(e_trip[static_cast<std::size_t>(i)].begin(),
                                                      e_trip[static_cast<std::size_t>(i)].end());
    m.f[static_cast<std::size_t>(i)].setFromTriplets(f_trip[static_cast<std::size_t>(i)].begin(),
                                                      f_trip[static_cast<std::size_t>(i)].end());
  }
  return m;
}

// ------------------------------------------------------------------ checks

Report section_space_check(const SectionSpace& s) {
  Report r;
  r.title = "section space " + s.scope.str();
  std::size_t bad = 0, leaks = 0;
  std::string first;
  const auto gens = generators(s.v.n, s.scope);
  for (const auto& sec : s.basis) {
    const BundleElement z = s.expand(sec);
    if (auto g = section_violation(s.v, s.scope, z); g && bad++ == 0)
      first = "block " + s.blocks[static_cast<std::size_t>(sec.block)].lambda.str() + " row " +
              std::to_string(sec.row) + " fails for " + g->str();
    const Weight& lambda = s.blocks[static_cast<std::size_t>(sec.block)].lambda;
    for (const auto& g : gens)
      for (const auto& f : circ(AlgWord{g}, s.v, z))
        for (const auto& [idx, _] : f.terms())
          if (idx.lambda != lambda) ++leaks;
  }
  r.add("x o zeta = (S(x) (x) id) zeta for every basis section and scoped generator", bad == 0,
        bad ? count_detail(bad, s.basis.size()) + "; first " + first : "");
  r.add("circ action of scoped generators preserves lambda blocks", leaks == 0, std::to_string(leaks) + " leaks");
  std::size_t block_bad = 0;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const int expected =
        static_cast<int>(hom_space(irrep_of(s.blocks[b].lambda).module, s.v, s.scope).size()) *
        irrep_of(s.blocks[b].lambda).dim();
    if (expected != s.block_dim(b)) ++block_bad;
  }
  r.add("block dimension = d_lambda * dim Hom(W(lambda), V)", block_bad == 0);
  const BundleSpan span(s.v.dim(), s.expand_all());
  r.add("sections are linearly independent", span.rank() == s.dim(),
        std::to_string(span.rank()) + " of " + std::to_string(s.dim()));
  r.data["dim"] = s.dim();
  return r;
}

Report module_structure_check(const SectionSpace& s, int e_cutoff, std::mt19937_64& rng, int samples) {
  Report r;
  r.title = "module structure " + s.scope.str();
  const int n = s.v.n;
  const Scope red = Scope::reductive(s.scope.theta);
  const auto e_elems = invariant_elements(invariant_functions(n, red, e_cutoff));
  const auto basis = s.expand_all();
  const BundleSpan span(s.v.dim(), basis);

  bool unit_ok = true;
  for (const auto& z : basis)
    if (left_multiply(PWElement::one(n), s.v, z) != z || right_multiply(z, PWElement::one(n)) != z) unit_ok = false;
  r.add("1 zeta = zeta 1 = zeta", unit_ok);

  std::size_t bad_left = 0, bad_right = 0, total = 0;
  for (const auto& z : basis)
    for (const auto& a : e_elems) {
      ++total;
      if (section_violation(s.v, s.scope, left_multiply(a, s.v, z))) ++bad_left;
      if (section_violation(s.v, s.scope, right_multiply(z, a))) ++bad_right;
    }
  r.add("a zeta is a section for a in E_q", bad_left == 0, count_detail(bad_left, total));
  r.add("zeta a is a section for a in E_q", bad_right == 0, count_detail(bad_right, total));

  std::size_t bad_dot = 0, bad_closure = 0, dot_total = 0;
  for (const auto& z : basis)
    for (const auto& g : generators(n)) {
      ++dot_total;
      const BundleElement xz = dot(AlgWord{g}, s.v, z);
      if (section_violation(s.v, s.scope, xz)) ++bad_dot;
      if (!span.coordinates(xz)) ++bad_closure;
    }
  r.add("x . zeta is a section for every generator x", bad_dot == 0, count_detail(bad_dot, dot_total));
  r.add("x . zeta re-expands in the section basis", bad_closure == 0, count_detail(bad_closure, dot_total));

  std::size_t bad_comm = 0, comm_total = 0;
  const auto scoped = generators(n, s.scope);
  if (!basis.empty() && !scoped.empty()) {
    std::uniform_int_distribution<std::size_t> pick_z(0, basis.size() - 1), pick_p(0, scoped.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int k = 0; k < samples; ++k) {
      const BundleElement& z = basis[pick_z(rng)];
      const AlgWord p{scoped[pick_p(rng)]};
      const AlgWord x = random_word(n, len(rng), rng);
      ++comm_total;
      BundleElement rhs = dot(x, s.v, circ(p, s.v, z));
      if (p.parity() & x.parity())
        for (auto& f : rhs) f = RatFunc(-1) * f;
      if (circ(p, s.v, dot(x, s.v, z)) != rhs) ++bad_comm;
    }
  }
  r.add("p o (x . zeta) = (-1)^{[p][x]} x . (p o zeta)", bad_comm == 0, count_detail(bad_comm, comm_total));

  std::size_t bad_co = 0, co_total = 0, bad_dual = 0, dual_total = 0;
  for (const auto& z : basis) {
    std::map<PWIndex, BundleElement> legs;
    for (int a = 0; a < s.v.dim(); ++a)
      for (const auto& [pair, c] : coproduct0(z[static_cast<std::size_t>(a)])) {
        const PWElement third = antipode0_inverse(PWElement::basis(pair.first.lambda, pair.first.i, pair.first.j));
        const RatFunc sc = (pair.first.parity() & pair.second.parity()) ? -c : c;
        for (const auto& [idx, c3] : third.terms()) {
          auto it = legs.try_emplace(idx, zero_bundle(s.v.dim())).first;
          it->second[static_cast<std::size_t>(a)].add(pair.second, sc * c3);
        }
      }
    for (const auto& [_, leg] : legs) {
      ++co_total;
      if (!is_zero(leg) && section_violation(s.v, s.scope, leg)) ++bad_co;
    }
    for (const auto& g : generators(n)) {
      ++dual_total;
      BundleElement paired = zero_bundle(s.v.dim());
      for (const auto& [idx, leg] : legs) {
        const RatFunc c = evaluate(PWElement::basis(idx.lambda, idx.i, idx.j), AlgWord{g});
        if (c.is_zero()) continue;
        // graded evaluation of the last leg: x passes v_a and the middle leg
        for (int a = 0; a < s.v.dim(); ++a)
          for (const auto& [mid, cm] : leg[static_cast<std::size_t>(a)].terms()) {
            const bool flip = (g.parity & (s.v.parity[static_cast<std::size_t>(a)] ^ mid.parity())) != 0;
            paired[static_cast<std::size_t>(a)].add(mid, flip ? -(c * cm) : c * cm);
          }
      }
      if (paired != dot(AlgWord{g}, s.v, z)) ++bad_dual;
    }
  }
  r.add("coaction id (x) (id (x) S^-1) Delta maps sections to sections (x) T_q", bad_co == 0,
        count_detail(bad_co, co_total));
  r.add("pairing the last leg of the coaction with x gives x . zeta", bad_dual == 0, count_detail(bad_dual, dual_total));
  r.data["sections"] = s.dim();
  r.data["invariant_functions"] = e_elems.size();
  return r;
}

// ------------------------------------------------------------------ trivialization

namespace {

// P(S^power (x) id) followed by multiplication: t (x) f -> (-1)^{[t][f]} f S^power(t).
PWElement flip_multiply(const PWElement& t, const PWElement& f, int power) {
  PWElement out;
  for (const auto& [ti, tc] : t.terms()) {
    PWElement st = PWElement::basis(ti.lambda, ti.i, ti.j, tc);
    for (int k = 0; k < power; ++k) st = antipode0(st);
    const auto [even, odd] = by_parity(f);
    out += multiply(even, st);
    if (ti.parity()) out -= multiply(odd, st);
    else out += multiply(odd, st);
  }
  return out;
}

BundleElement apply_eta(const std::vector<BundleElement>& delta, const BundleElement& zeta, bool inverse) {
  const std::size_t d = delta.size();
  BundleElement out = zero_bundle(static_cast<int>(d));
  for (std::size_t j = 0; j < d; ++j) {
    if (zeta[j].is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const PWElement& t = delta[j][i];
      if (t.is_zero()) continue;
      out[i] += multiply(inverse ? antipode0(t) : t, zeta[j]);
    }
  }
  return out;
}

BundleElement apply_kappa(const std::vector<BundleElement>& delta, const BundleElement& zeta, bool inverse) {
  const std::size_t d = delta.size();
  BundleElement out = zero_bundle(static_cast<int>(d));
  for (std::size_t j = 0; j < d; ++j) {
    if (zeta[j].is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i)
      if (!delta[j][i].is_zero()) out[i] += flip_multiply(delta[j][i], zeta[j], inverse ? 1 : 2);
  }
  return out;
}

}  // namespace

Trivialization trivialization(const Module& w, const Scope& scope, int cutoff, std::mt19937_64& rng) {
  if (scope.flavor != Flavor::Reductive) throw std::invalid_argument("trivialization needs a reductive scope");
  const int n = w.n;
  Trivialization t;
  Report& r = t.report;
  r.title = "trivialization " + scope.str();
  t.shift = max_constituent(w);
  const Module wr = restrict(w, scope);
  t.h = sections(wr, scope, cutoff);
  t.e = invariant_functions(n, scope, cutoff);
  const auto delta = comodule_map(w);
  const auto h_basis = t.h.expand_all();
  const auto e_elems = invariant_elements(t.e);

  std::vector<BundleElement> w_e;  // w_a (x) e_b
  for (int a = 0; a < w.dim(); ++a)
    for (const auto& e : e_elems) {
      BundleElement xi = zero_bundle(w.dim());
      xi[static_cast<std::size_t>(a)] = e;
      w_e.push_back(std::move(xi));
    }

  std::size_t eta_into = 0, eta_back = 0, inv_into = 0, inv_back = 0;
  std::size_t kappa_into = 0, kappa_back = 0, kinv_into = 0, kinv_back = 0;
  for (const auto& z : h_basis) {
    const BundleElement eta = apply_eta(delta, z, false);
    if (!in_w_tensor_invariants(eta, n, scope)) ++eta_into;
    if (apply_eta(delta, eta, true) != z) ++eta_back;
    t.eta.push_back(eta);
    const BundleElement kappa = apply_kappa(delta, z, false);
    if (!in_w_tensor_invariants(kappa, n, scope)) ++kappa_into;
    if (apply_kappa(delta, kappa, true) != z) ++kappa_back;
    t.kappa.push_back(kappa);
  }
  for (const auto& xi : w_e) {
    const BundleElement back = apply_eta(delta, xi, true);
    if (section_violation(wr, scope, back)) ++inv_into;
    if (apply_eta(delta, back, false) != xi) ++inv_back;
    const BundleElement kback = apply_kappa(delta, xi, true);
    if (section_violation(wr, scope, kback)) ++kinv_into;
    if (apply_kappa(delta, kback, false) != xi) ++kinv_back;
  }
  const std::size_t nh = h_basis.size(), nw = w_e.size();
  r.add("eta(H_q(W)) lies in W (x) E_q", eta_into == 0, count_detail(eta_into, nh));
  r.add("eta^-1 eta = id on H_q(W)", eta_back == 0, count_detail(eta_back, nh));
  r.add("eta^-1(W (x) E_q) lies in H_q(W)", inv_into == 0, count_detail(inv_into, nw));
  r.add("eta eta^-1 = id on W (x) E_q", inv_back == 0, count_detail(inv_back, nw));
  r.add("kappa(H_q(W)) lies in W (x) E_q", kappa_into == 0, count_detail(kappa_into, nh));
  r.add("kappa^-1 kappa = id on H_q(W)", kappa_back == 0, count_detail(kappa_back, nh));
  r.add("kappa^-1(W (x) E_q) lies in H_q(W)", kinv_into == 0, count_detail(kinv_into, nw));
  r.add("kappa kappa^-1 = id on W (x) E_q", kinv_back == 0, count_detail(kinv_back, nw));

  const BundleSpan eta_span(w.dim(), t.eta);
  r.add("eta is injective on the truncation", eta_span.rank() == static_cast<int>(nh),
        "rank " + std::to_string(eta_span.rank()) + ", dim " + std::to_string(nh));

  // Module maps against E_q elements of low degree.
  const auto e_low = invariant_elements(invariant_functions(n, scope, std::min(cutoff, 1)));
  std::size_t bad_right = 0, bad_left = 0, mod_total = 0;
  for (std::size_t k = 0; k < nh; ++k)
    for (const auto& a : e_low) {
      ++mod_total;
      if (apply_eta(delta, right_multiply(h_basis[k], a), false) != right_multiply(t.eta[k], a)) ++bad_right;
      if (apply_kappa(delta, left_multiply(a, wr, h_basis[k]), false) != left_multiply(a, wr, t.kappa[k])) ++bad_left;
    }
  r.add("eta(zeta a) = eta(zeta) a", bad_right == 0, count_detail(bad_right, mod_total));
  r.add("kappa(a zeta) = a kappa(zeta)", bad_left == 0, count_detail(bad_left, mod_total));
  (void)rng;

  // Filtration bookkeeping: H_q(W) blocks against W (x) E_q blocks.
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t b = 0; b < t.h.blocks.size(); ++b)
    blocks.push_back({{"lambda", t.h.blocks[b].lambda.str()},
                      {"H_q(W)", t.h.block_dim(b)},
                      {"W (x) E_q", w.dim() * t.e.block_dim(b)}});
  r.data["blocks"] = blocks;
  r.data["dim H_q(W)"] = nh;
  r.data["dim W (x) E_q"] = nw;
  r.data["degree shift"] = t.shift;
  return t;
}

// ------------------------------------------------------------------ projectivity

ProjectivityWitness projectivity_witness(const Module& v, const Scope& scope, int cutoff, std::mt19937_64& rng) {
  if (scope.flavor != Flavor::Reductive) throw std::invalid_argument("projectivity witness needs a reductive scope");
  const int n = v.n;
  const RootDatum rd = build_root_datum(n);
  const Module vs = with_scope(v, scope);
  ProjectivityWitness out;
  Report& r = out.report;
  r.title = "projectivity " + scope.str();
  std::vector<int> v_block_sum;
  for (const auto& hw : highest_weight_vectors(vs)) {
    ProjectivitySummand s;
    s.mu = hw.weight;
    if (!is_integral(rd, s.mu)) throw std::invalid_argument("weight " + s.mu.str() + " is not integral");
    s.mu_hat = dominant_in_weyl_orbit(rd, s.mu);
    s.v_s = generate_submodule(vs, hw.vec, hw.weight, hw.parity, scope).module;
    s.v_s.scope = scope;
    const Module wr = restrict(irreducible(n, s.mu_hat)->module, scope);
    const int dv = s.v_s.dim(), dw = wr.dim();
    std::optional<Intertwiner> iota;
    for (const auto& h : hom_space(s.v_s, wr, scope))
      if (rank(h.matrix) == dv) {
        iota = h;
        break;
      }
    if (!iota) throw std::runtime_error("no embedding of V_s into W(" + s.mu_hat.str() + ")");
    s.embedding = iota->matrix;
    std::optional<Matrix> proj;
    for (const auto& h : hom_space(wr, s.v_s, scope)) {
      const Matrix pi = h.matrix * s.embedding;
      if (is_zero_matrix(pi)) continue;
      const RatFunc c = pi(0, 0);
      if (c.is_zero() || !same_matrix(pi, c * Matrix::Identity(dv, dv))) continue;
      proj = (RatFunc(1) / c) * h.matrix;
      break;
    }
    if (!proj) throw std::runtime_error("no projection W(" + s.mu_hat.str() + ") -> V_s");
    const Matrix kernel = null_space(*proj);
    Module comp;
    comp.n = n;
    comp.scope = scope;
    SpanBuilder<RatFunc> span;
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
      const Vector col = kernel.col(c);
      span.add(col);
      std::optional<int> at;
      for (int a = 0; a < dw; ++a)
        if (!col(a).is_zero()) {
          if (!at) at = a;
          else if (wr.weights[static_cast<std::size_t>(a)] != wr.weights[static_cast<std::size_t>(*at)] ||
                   wr.parity[static_cast<std::size_t>(a)] != wr.parity[static_cast<std::size_t>(*at)])
            throw std::logic_error("complement basis is not homogeneous");
        }
      comp.weights.push_back(wr.weights[static_cast<std::size_t>(*at)]);
      comp.parity.push_back(wr.parity[static_cast<std::size_t>(*at)]);
    }
    const auto kc = kernel.cols();
    comp.e.assign(static_cast<std::size_t>(n), SparseMatrix(kc, kc));
    comp.f.assign(static_cast<std::size_t>(n), SparseMatrix(kc, kc));
    bool closed = true;
    for (int i = 1; i <= n; ++i)
      for (int kind = 0; kind < 2; ++kind) {
        if (!(kind == 0 ? scope.has_e(i) : scope.has_f(i))) continue;
        const Matrix x = to_dense(kind == 0 ? wr.E(i) : wr.F(i));
        Matrix img(kc, kc);
        for (Eigen::Index c = 0; c < kc; ++c) {
          Vector coords;
          if (!span.coordinates(x * kernel.col(c), coords)) {
            closed = false;
            coords = Vector::Zero(kc);
          }
          img.col(c) = coords;
        }
        (kind == 0 ? comp.e : comp.f)[static_cast<std::size_t>(i - 1)] = to_sparse(img);
      }
    s.complement = comp;
    const std::string tag = "V_s(" + s.mu.str() + ") in W(" + s.mu_hat.str() + "): ";
    r.add(tag + "complement is a submodule", closed && check_relations(comp).pass());
    Matrix both(dw, dv + kc);
    both.leftCols(dv) = s.embedding;
    both.rightCols(kc) = kernel;
    r.add(tag + "W = V_s + V_s^perp is direct", rank(both) == dw,
          "dim V_s " + std::to_string(dv) + ", dim V_s^perp " + std::to_string(kc) + ", dim W " + std::to_string(dw));
    const SectionSpace hw_s = sections(wr, scope, cutoff);
    const SectionSpace hv_s = sections(s.v_s, scope, cutoff);
    const SectionSpace hp_s = sections(comp, scope, cutoff);
    bool blocks_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t b = 0; b < hw_s.blocks.size(); ++b) {
      if (hv_s.block_dim(b) + hp_s.block_dim(b) != hw_s.block_dim(b)) blocks_ok = false;
      rows.push_back({{"lambda", hw_s.blocks[b].lambda.str()},
                      {"H_q(V_s)", hv_s.block_dim(b)},
                      {"H_q(V_s^perp)", hp_s.block_dim(b)},
                      {"H_q(W)", hw_s.block_dim(b)}});
      if (v_block_sum.size() <= b) v_block_sum.resize(b + 1, 0);
      v_block_sum[b] += hp_s.block_dim(b);
    }
    r.add(tag + "dim H_q(V_s) + dim H_q(V_s^perp) = dim H_q(W) per block", blocks_ok);
    r.data["summands"].push_back({{"mu", s.mu.str()},
                                  {"mu_hat", s.mu_hat.str()},
                                  {"dim V_s", dv},
                                  {"dim V_s^perp", kc},
                                  {"blocks", rows}});
    Trivialization triv = trivialization(irreducible(n, s.mu_hat)->module, scope, cutoff, rng);
    r.merge(triv.report, tag);
    out.summands.push_back(std::move(s));
  }
  // H_q(V) itself against the summands' W blocks.
  const SectionSpace hv = sections(vs, scope, cutoff);
  bool total_ok = true;
  for (std::size_t b = 0; b < hv.blocks.size(); ++b) {
    int w_dim = 0;
    for (const auto& s : out.summands)
      w_dim += static_cast<int>(hom_space(irrep_of(hv.blocks[b].lambda).module,
                                          restrict(irreducible(n, s.mu_hat)->module, scope), scope)
                                    .size()) *
               irrep_of(hv.blocks[b].lambda).dim();
    if (hv.block_dim(b) + (b < v_block_sum.size() ? v_block_sum[b] : 0) != w_dim) total_ok = false;
  }
  r.add("H_q(V) + H_q(V^perp) = H_q(W) per block", total_ok);
  return out;
}

// ------------------------------------------------------------------ Borel-Weil

Report borel_weil_check(int n, const std::vector<int>& theta, const Weight& mu, int cutoff) {
  Report r;
  r.title = "Borel-Weil mu = " + mu.str() + ", " + Scope::parabolic(theta).str();
  const RootDatum rd = build_root_datum(n);
  const Scope par = Scope::parabolic(theta);
  const Module v = extend_to_parabolic(reductive_irreducible(n, theta, mu));
  const Weight low = lowest_weight(v);
  const Weight minus_low = -low;
  r.data["lowest_weight"] = low.str();
  const bool dominant = is_integral(rd, minus_low) && is_dominant(rd, minus_low);
  if (!dominant) {
    const SectionSpace o = holomorphic_sections(v, par, cutoff);
    r.add("O_q(V_mu) = 0", o.dim() == 0, "dim " + std::to_string(o.dim()));
    r.data["dim"] = o.dim();
    return r;
  }
  const Weight nu = lowest_weight_and_dagger(n, minus_low).second;
  const int k = std::max(cutoff, weight_norm(nu));
  r.data["nu"] = nu.str();
  r.data["cutoff"] = k;
  const SectionSpace o = holomorphic_sections(v, par, k);
  r.merge(section_space_check(o));
  const int d_nu = irreducible(n, nu)->dim();
  r.add("dim O_q(V_mu) = d_nu", o.dim() == d_nu, std::to_string(o.dim()) + " vs " + std::to_string(d_nu));
  bool single = true;
  std::optional<std::size_t> nu_block;
  for (std::size_t b = 0; b < o.blocks.size(); ++b) {
    const bool contributes = !o.blocks[b].homs.empty();
    if (contributes && o.blocks[b].lambda != nu) single = false;
    if (o.blocks[b].homs.size() > 1) single = false;
    if (o.blocks[b].lambda == nu) nu_block = b;
  }
  r.add("only lambda = nu contributes, with a one-dimensional Hom space", single && nu_block &&
                                                                                o.blocks[*nu_block].homs.size() == 1);
  r.data["dim"] = o.dim();
  if (!nu_block || o.blocks[*nu_block].homs.size() != 1) return r;
  const int phi_degree = o.blocks[*nu_block].homs.front().degree;
  std::vector<BundleElement> zeta;
  for (const auto& sec : o.basis)
    if (static_cast<std::size_t>(sec.block) == *nu_block) zeta.push_back(o.expand(sec));
  const Module& wnu = irreducible(n, nu)->module;
  for (const auto& g : generators(n)) {
    const Matrix t = to_dense(evaluate(wnu, g));
    std::size_t bad = 0;
    for (int i = 0; i < d_nu; ++i) {
      BundleElement rhs = zero_bundle(v.dim());
      for (int j = 0; j < d_nu; ++j)
        if (!t(j, i).is_zero())
          for (int a = 0; a < v.dim(); ++a)
            rhs[static_cast<std::size_t>(a)] += t(j, i) * zeta[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
      if (g.parity & phi_degree)
        for (auto& f : rhs) f = RatFunc(-1) * f;
      if (dot(AlgWord{g}, v, zeta[static_cast<std::size_t>(i)]) != rhs) ++bad;
    }
    r.add("x . zeta_i = (-1)^{[x][phi]} sum_j t_ji(x) zeta_j for x = " + g.str(), bad == 0,
          count_detail(bad, static_cast<std::size_t>(d_nu)));
  }
  return r;
}

// ------------------------------------------------------------------ Frobenius reciprocity

namespace {

// F-bar(phi)(w_b) = sum_a phi(w_a) (x) S_0(delta(w_b)_a), a bundle element of V (x) T_q.
std::vector<BundleElement> frobenius_bar(const Matrix& phi, const std::vector<BundleElement>& delta, int dim_v) {
  std::vector<BundleElement> out;
  for (const auto& db : delta) {
    BundleElement z = zero_bundle(dim_v);
    for (std::size_t a = 0; a < db.size(); ++a) {
      if (db[a].is_zero()) continue;
      const PWElement s = antipode0(db[a]);
      for (int rr = 0; rr < dim_v; ++rr)
        if (!phi(rr, static_cast<Eigen::Index>(a)).is_zero())
          z[static_cast<std::size_t>(rr)] += phi(rr, static_cast<Eigen::Index>(a)) * s;
    }
    out.push_back(std::move(z));
  }
  return out;
}

Matrix evaluation_at_one(const std::vector<BundleElement>& sections, int dim_v) {
  Matrix m(dim_v, static_cast<Eigen::Index>(sections.size()));
  for (std::size_t s = 0; s < sections.size(); ++s)
    for (int a = 0; a < dim_v; ++a) m(a, static_cast<Eigen::Index>(s)) = counit0(sections[s][static_cast<std::size_t>(a)]);
  return m;
}

}  // namespace

Report frobenius_check(const Module& w, const Module& v, const Scope& scope, int cutoff) {
  Report r;
  r.title = "Frobenius reciprocity " + scope.str();
  if (scope.flavor != Flavor::Reductive) throw std::invalid_argument("Frobenius reciprocity needs a reductive scope");
  const int n = w.n;
  const int needed = max_constituent(w);
  r.add("cutoff covers the constituents of W", cutoff >= needed,
        "cutoff " + std::to_string(cutoff) + ", needed " + std::to_string(needed));
  const Module vs = with_scope(v, scope);
  const auto rhs = hom_space(restrict(w, scope), vs, scope);
  const SectionSpace h = sections(vs, scope, cutoff);
  const Module hm = section_module(h);
  const auto lhs = hom_space(w, hm, Scope::full());
  r.add("dim Hom_Uq(W, H_q(V)) = dim Hom_Uk(W, V)", lhs.size() == rhs.size(),
        std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()));

  // Multiplicity pairing of W's constituents against highest weight vectors in the section blocks.
  std::map<Weight, int> h_mult;
  for (const auto& hw : highest_weight_vectors(hm)) ++h_mult[hw.weight];
  std::size_t pairing = 0;
  for (const auto& [lambda, m] : decompose(w).multiplicities()) pairing += static_cast<std::size_t>(m * h_mult[lambda]);
  r.add("multiplicity pairing equals dim Hom_Uk(W, V)", pairing == rhs.size(), std::to_string(pairing));
  r.data["dim_lhs"] = lhs.size();
  r.data["dim_rhs"] = rhs.size();

  const auto delta = comodule_map(w);
  const auto basis = h.expand_all();
  const BundleSpan span(v.dim(), basis);
  std::size_t bad_ff = 0, bad_in = 0, bad_hom = 0, bad_fbar_f = 0, bad_f_hom = 0;
  for (const auto& phi : rhs) {
    const auto bar = frobenius_bar(phi.matrix, delta, v.dim());
    Matrix coords(h.dim(), w.dim());
    bool inside = true;
    for (int b = 0; b < w.dim(); ++b) {
      const auto c = span.coordinates(bar[static_cast<std::size_t>(b)]);
      if (!c) {
        inside = false;
        break;
      }
      coords.col(b) = *c;
    }
    if (!inside) {
      ++bad_in;
      continue;
    }
    if (!is_intertwiner(Intertwiner{coords, phi.degree, Scope::full()}, w, hm)) ++bad_hom;
    if (!same_matrix(evaluation_at_one(bar, v.dim()), phi.matrix)) ++bad_ff;
  }
  for (const auto& psi : lhs) {
    Matrix f_psi = evaluation_at_one(basis, v.dim()) * psi.matrix;
    if (!is_intertwiner(Intertwiner{f_psi, psi.degree, scope}, restrict(w, scope), vs)) ++bad_f_hom;
    const auto bar = frobenius_bar(f_psi, delta, v.dim());
    Matrix coords(h.dim(), w.dim());
    bool ok = true;
    for (int b = 0; b < w.dim() && ok; ++b) {
      const auto c = span.coordinates(bar[static_cast<std::size_t>(b)]);
      if (!c) ok = false;
      else coords.col(b) = *c;
    }
    if (!ok || !same_matrix(coords, psi.matrix)) ++bad_fbar_f;
  }
  r.add("F-bar(phi) takes values in H_q(V)", bad_in == 0, count_detail(bad_in, rhs.size()));
  r.add("F-bar(phi) is a U_q homomorphism", bad_hom == 0, count_detail(bad_hom, rhs.size()));
  r.add("F(psi) is a U_k homomorphism", bad_f_hom == 0, count_detail(bad_f_hom, lhs.size()));
  r.add("F F-bar = id", bad_ff == 0, count_detail(bad_ff, rhs.size()));
  r.add("F-bar F = id", bad_fbar_f == 0, count_detail(bad_fbar_f, lhs.size()));
  (void)n;
  return r;
}

Report corollary_check(const Module& w, const std::vector<int>& theta, int cutoff) {
  Report r;
  r.title = "O_q(W) = W";
  const Scope par = Scope::parabolic(theta);
  const int needed = max_constituent(w);
  const SectionSpace o = holomorphic_sections(restrict(w, par), par, std::max(cutoff, needed));
  r.add("dim O_q(W) = dim W", o.dim() == w.dim(), std::to_string(o.dim()) + " vs " + std::to_string(w.dim()));
  const Module om = section_module(o);
  const auto delta = comodule_map(w);
  const auto images = frobenius_bar(Matrix::Identity(w.dim(), w.dim()), delta, w.dim());
  const BundleSpan span(w.dim(), o.expand_all());
  Matrix coords(o.dim(), w.dim());
  bool inside = true;
  for (int b = 0; b < w.dim() && inside; ++b) {
    const auto c = span.coordinates(images[static_cast<std::size_t>(b)]);
    if (!c) inside = false;
    else coords.col(b) = *c;
  }
  r.add("(id (x) S) delta maps W into O_q(W)", inside);
  if (!inside) return r;
  r.add("(id (x) S) delta is bijective", coords.rows() == coords.cols() && rank(coords) == w.dim());
  r.add("(id (x) S) delta intertwines the dot action", is_intertwiner(Intertwiner{coords, 0, Scope::full()}, w, om));
  auto mult = [](const Module& m) {
    auto v = decompose(m).multiplicities();
    std::sort(v.begin(), v.end());
    return v;
  };
  r.add("decompositions match", mult(w) == mult(om));
  r.data["dim"] = o.dim();
  return r;
}

nlohmann::json central_homs_diagnostic(int n, const std::vector<int>& theta, int max_m) {
  const Scope scope = Scope::reductive(theta);
  const Module trivial = with_scope(weight_module(n, {Weight(n)}), scope);
  const Weight gamma = build_root_datum(n).highest_root;
  const int big_n = n - static_cast<int>(theta.size());
  // partitions of m into at most big_n parts
  auto partitions = [](int m, int parts) {
    std::vector<std::vector<long>> p(static_cast<std::size_t>(m + 1), std::vector<long>(static_cast<std::size_t>(parts + 1), 0));
    for (int k = 0; k <= parts; ++k) p[0][static_cast<std::size_t>(k)] = 1;
    for (int a = 1; a <= m; ++a)
      for (int k = 1; k <= parts; ++k)
        p[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] =
            p[static_cast<std::size_t>(a)][static_cast<std::size_t>(k - 1)] +
            (a >= k ? p[static_cast<std::size_t>(a - k)][static_cast<std::size_t>(k)] : 0);
    return parts < 0 ? 0L : p[static_cast<std::size_t>(m)][static_cast<std::size_t>(parts)];
  };
  nlohmann::json out;
  out["theta"] = theta;
  out["N"] = big_n;
  out["rows"] = nlohmann::json::array();
  for (int m = 1; m <= max_m; ++m) {
    Weight lambda = gamma;
    for (int k = 1; k < m; ++k) lambda = lambda + gamma;
    const auto homs = hom_space(irreducible(n, lambda)->module, trivial, scope);
    out["rows"].push_back({{"m", m},
                           {"lambda", lambda.str()},
                           {"dim_hom", homs.size()},
                           {"claimed", big_n > 0 ? partitions(m, big_n) : 0}});
  }
  return out;
}

}  // namespace ospq
