#include "ospq/scalars.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ospq {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '+') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in rational: " + text);
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Assumes lowest exponent of p is >= 0.
Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  d.assign(static_cast<std::size_t>(p.high_exponent() + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift = 0) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) terms.emplace_back(static_cast<int>(i) + shift, d[i]);
  return LaurentPoly::from_terms(std::move(terms));
}

// Long division a = q*b + r; returns q and leaves r in a.
Dense divide(Dense& a, const Dense& b) {
  trim(a);
  const std::size_t nb = b.size();
  if (a.size() < nb) return {};
  Dense quot(a.size() - nb + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k >= nb; --k) {
    const std::size_t top = k - 1;
    if (sgn(a[top]) == 0) continue;
    Rational c = a[top] / lead;
    const std::size_t shift = k - nb;
    quot[shift] = c;
    for (std::size_t i = 0; i < nb; ++i) a[shift + i] -= c * b[i];
  }
  trim(a);
  return quot;
}

void make_monic(Dense& a) {
  if (a.empty()) return;
  Rational lead = a.back();
  if (lead == 1) return;
  for (auto& c : a) c /= lead;
}

}  // namespace

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    make_monic(b);
    divide(a, b);
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational LaurentPoly::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_)
    if (e == exponent) return c;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += shift;
  return p;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    if (e != 0 && sgn(q0) == 0) throw std::domain_error("pole of q^e at q = 0");
    Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (int k = 0; k < std::abs(e); ++k) power *= base;
    sum += c * power;
  }
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly p = a;
    const auto& [e, c] = b.terms_[0];
    for (auto& t : p.terms_) {
      t.first += e;
      t.second *= c;
    }
    return p;
  }
  if (a.is_monomial()) return b * a;
  const int lo = a.low_exponent() + b.low_exponent();
  const int hi = a.high_exponent() + b.high_exponent();
  Dense acc(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  return from_dense(acc, lo);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first <=> b.terms_[i].first;
    int c = cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

namespace {

void render_terms(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
}

}  // namespace

std::string LaurentPoly::str() const {
  std::ostringstream os;
  render_terms(os, *this);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly gauss_integer(int m) {
  // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}
  if (m == 0) return {};
  const int sign = m > 0 ? 1 : -1;
  const int a = std::abs(m);
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < a; ++k) terms.emplace_back(a - 1 - 2 * k, Rational(sign));
  return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- RatFunc

RatFunc rf_normalize(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RatFunc();
  const int s = den.low_exponent();
  if (s != 0) {
    num = num.shifted(-s);
    den = den.shifted(-s);
  }
  if (!den.is_constant() && !num.is_constant()) {
    const int t = num.low_exponent();
    Dense a = to_dense(num.shifted(-t));
    Dense b = to_dense(den);
    if (a.size() > 1) {
      Dense g = poly_gcd(a, b);
      if (g.size() > 1) {
        Dense qa = divide(a, g);
        Dense qb = divide(b, g);
        num = from_dense(qa, t);
        den = from_dense(qb);
      }
    }
  }
  const Rational lead = den.leading_coefficient();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

Rational rf_eval(const RatFunc& f, const Rational& q0) { return f.eval(q0); }

Rational RatFunc::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (sgn(d) == 0) throw std::domain_error("pole at q = " + q0.get_str());
  return num_.eval(q0) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero polynomial");
  return rf_normalize(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.den_.is_one()) {
    // (a/d + b) = (a + b d)/d keeps gcd 1.
    if (den_.is_one())
      num_ += o.num_;
    else
      num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    LaurentPoly n = num_ * o.den_ + o.num_;
    num_ = std::move(n);
    den_ = o.den_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this = rf_normalize(std::move(num_), std::move(den_));
  }
  LaurentPoly n = num_ * o.den_ + o.num_ * den_;
  LaurentPoly d = den_ * o.den_;
  return *this = rf_normalize(std::move(n), std::move(d));
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.num_.is_monomial() && o.den_.is_one()) {
    num_ *= o.num_;
    // q^k c is a unit; normalization only needs the scale folded into num.
    return *this;
  }
  if (num_.is_monomial() && den_.is_one()) {
    LaurentPoly n = o.num_ * num_;
    return *this = RatFunc(std::move(n), o.den_, 0);
  }
  return *this = rf_normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"e", e}, {"c", c.get_str()}});
  return out;
}

nlohmann::json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at("e").get<int>(), parse_rational(t.at("c").get<std::string>()));
  return LaurentPoly::from_terms(std::move(terms));
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  return rf_normalize(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace ospq
