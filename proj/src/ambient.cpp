#include "gwa/ambient.hpp"

#include <stdexcept>

#include "gwa/detail/skew_product.hpp"

namespace gwa {

namespace {

std::string power_token(const char* var, int e) {
  std::string s = var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

AmbAlgebra::AmbAlgebra(UniPoly p, Rational q_plus, Rational q_minus) {
  if (q_plus.is_zero() || q_minus.is_zero()) throw std::invalid_argument("A(p;q+-) needs q+, q- != 0");
  auto split = factor_zero_root(p);
  if (split.k < 1) throw std::invalid_argument("A(p;q+-) needs 0 to be a root of p");
  Rational q = q_plus * q_minus;
  UniPoly hat = hat_decompose(split.tilde);
  GwaAlgebra base(p, q, Rational(0));
  data_ = std::make_shared<const Data>(
      Data{std::move(p), split.k, std::move(split.tilde), std::move(hat), std::move(q_plus), std::move(q_minus),
           std::move(q), std::move(base)});
}

bool operator==(const AmbAlgebra& a, const AmbAlgebra& b) {
  return a.data_ == b.data_ ||
         (a.data_->p == b.data_->p && a.data_->q_plus == b.data_->q_plus && a.data_->q_minus == b.data_->q_minus);
}

AmbElem AmbAlgebra::term(int m, const PairPoly& f) const {
  AmbElem::Terms t;
  if (!f.is_zero()) t.emplace(m, f);
  return AmbElem(*this, std::move(t));
}

AmbElem AmbAlgebra::monomial(int m, int a, int b, const Rational& c) const {
  return term(m, PairPoly::monomial(a, b, c));
}

AmbElem AmbAlgebra::xp() const { return term(-1, PairPoly(1)); }
AmbElem AmbAlgebra::xm() const { return term(1, PairPoly(1)); }
AmbElem AmbAlgebra::zp() const { return monomial(0, 1, 0); }
AmbElem AmbAlgebra::zm() const { return monomial(0, 0, 1); }
AmbElem AmbAlgebra::one() const { return term(0, PairPoly(1)); }
AmbElem AmbAlgebra::zero() const { return AmbElem(*this, {}); }
AmbElem AmbAlgebra::scalar(const Rational& c) const { return term(0, PairPoly(c)); }
AmbElem AmbAlgebra::poly(const PairPoly& f) const { return term(0, f); }
AmbElem AmbAlgebra::poly_in_z(const UniPoly& f) const { return term(0, PairPoly::from_product(f)); }

std::string MonoKey::str() const {
  std::string s;
  if (m != 0) s = power_token(m > 0 ? "xm" : "xp", m > 0 ? m : -m);
  if (a > 0) s += (s.empty() ? "" : "*") + power_token("zp", a);
  if (b > 0) s += (s.empty() ? "" : "*") + power_token("zm", b);
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- AmbElem

AmbElem::AmbElem(AmbAlgebra alg, Terms terms) : alg_(std::move(alg)) {
  for (auto& [m, f] : terms)
    if (!f.is_zero()) terms_.emplace(m, std::move(f));
}

PairPoly AmbElem::coeff(int m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PairPoly() : it->second;
}

std::map<MonoKey, Rational> AmbElem::monomials() const {
  std::map<MonoKey, Rational> out;
  for (auto& [m, f] : terms_)
    for (auto& [ab, c] : f.terms()) out.emplace(MonoKey{m, ab.first, ab.second}, c);
  return out;
}

Rational AmbElem::coefficient_of_one() const { return coeff(0).constant_term(); }

std::optional<int> AmbElem::degree() const {
  std::optional<int> deg;
  for (auto& [m, f] : terms_) {
    for (auto& [ab, c] : f.terms()) {
      int d = alg_.degree_of(m, ab.first, ab.second);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

void AmbElem::check_same(const AmbElem& o) const {
  if (!(alg_ == o.alg_)) throw std::invalid_argument("elements belong to different A(p;q+-)");
}

AmbElem& AmbElem::operator+=(const AmbElem& o) {
  check_same(o);
  detail::add_into(terms_, o.terms_);
  return *this;
}

AmbElem& AmbElem::operator-=(const AmbElem& o) {
  check_same(o);
  detail::add_into(terms_, o.terms_, true);
  return *this;
}

AmbElem& AmbElem::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, f] : terms_) f *= c;
  return *this;
}

AmbElem operator*(const AmbElem& a, const AmbElem& b) {
  a.check_same(b);
  const Rational& qp = a.alg_.q_plus();
  const Rational& qm = a.alg_.q_minus();
  // sigma^j(f)(z+, z-) = f(q+^j z+, q-^j z-)
  auto shift = [&qp, &qm](const PairPoly& f, int j) {
    if (j == 0) return f;
    return f.scale_vars(qp.pow(j), qm.pow(j));
  };
  detail::SkewProduct<PairPoly, decltype(shift)> engine(PairPoly::from_product(a.alg_.p_tilde()), shift);
  return AmbElem(a.alg_, engine.multiply(a.terms_, b.terms_));
}

bool operator==(const AmbElem& a, const AmbElem& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

std::string AmbElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [m, f] = *it;
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += terms_.size() == 1 ? f.str() : "(" + f.str() + ")";
      continue;
    }
    out += power_token(m > 0 ? "xm" : "xp", m > 0 ? m : -m) + "*(" + f.str() + ")";
  }
  return out;
}

AmbElem amb_mul(const AmbElem& a, const AmbElem& b) { return a * b; }

AmbElem amb_power(const AmbElem& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  AmbElem acc = a.algebra().one();
  for (int i = 0; i < n; ++i) acc = acc * a;
  return acc;
}

std::map<int, AmbElem> degree_split(const AmbElem& e) {
  const AmbAlgebra& alg = e.algebra();
  std::map<int, AmbElem> parts;
  for (auto& [key, c] : e.monomials()) {
    int d = alg.degree_of(key.m, key.a, key.b);
    auto it = parts.try_emplace(d, alg.zero()).first;
    it->second += alg.monomial(key.m, key.a, key.b, c);
  }
  return parts;
}

namespace {

AmbElem image_x(const AmbAlgebra& alg) { return alg.xm() * alg.monomial(0, alg.k(), 0); }
AmbElem image_y(const AmbAlgebra& alg) { return alg.monomial(0, 0, alg.k()) * alg.xp(); }

// embed(x^n) = c x-^n zp^{nk} and embed(y^n) = c x+^n zm^{nk}; returns c.
// Found by multiplying out rather than by a closed formula.
Rational leading_scalar(const AmbAlgebra& alg, int signed_n) {
  int n = signed_n > 0 ? signed_n : -signed_n;
  AmbElem img = amb_power(signed_n > 0 ? image_x(alg) : image_y(alg), n);
  MonoKey expected = signed_n > 0 ? MonoKey{n, n * alg.k(), 0} : MonoKey{-n, 0, n * alg.k()};
  auto monos = img.monomials();
  if (monos.size() != 1 || monos.begin()->first != expected)
    throw std::logic_error("image of a generator power is not a single monomial");
  return monos.begin()->second;
}

}  // namespace

AmbElem embed_B(const AmbAlgebra& alg, const GwaElem& e) {
  if (!(e.algebra() == alg.base()))
    throw std::invalid_argument("embed_B: element is not in B(p; q+ q-, 0) of this ambient algebra");
  AmbElem out = alg.zero();
  AmbElem gx = image_x(alg), gy = image_y(alg);
  for (auto& [d, f] : e.terms()) {
    AmbElem head = d >= 0 ? amb_power(gx, d) : amb_power(gy, -d);
    out += head * alg.poly_in_z(f);
  }
  return out;
}

GwaElem project_degree_zero(const AmbAlgebra& alg, const AmbElem& e) {
  if (!(e.algebra() == alg)) throw std::invalid_argument("project_degree_zero: algebra mismatch");
  std::map<int, Rational> scalars;
  GwaElem::Terms out;
  for (auto& [key, c] : e.monomials()) {
    if (alg.degree_of(key.m, key.a, key.b) != 0)
      throw std::invalid_argument("project_degree_zero: term " + key.str() + " is not of degree zero");
    // degree zero forces a = b + |m|k (m > 0) or b = a + |m|k (m < 0), so the
    // monomial is (gen image)^n * (zp zm)^{min(a, b)} up to a scalar.
    int zpow = key.m >= 0 ? key.b : key.a;
    Rational scale(1);
    if (key.m != 0) {
      auto it = scalars.find(key.m);
      if (it == scalars.end()) it = scalars.emplace(key.m, leading_scalar(alg, key.m)).first;
      scale = it->second;
    }
    out[key.m] += UniPoly::monomial(zpow, c / scale);
  }
  return GwaElem(alg.base(), std::move(out));
}

AmbElem veronese_component(const AmbAlgebra& alg, int n, const AmbElem& e) {
  auto parts = degree_split(e);
  auto it = parts.find(n * alg.k());
  return it == parts.end() ? alg.zero() : it->second;
}

}  // namespace gwa
