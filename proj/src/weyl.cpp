#include "gwa/weyl.hpp"

#include <stdexcept>

#include "gwa/detail/skew_product.hpp"

namespace gwa {

GwaAlgebra::GwaAlgebra(UniPoly p, Rational q, Rational r)
    : data_(std::make_shared<const Data>(Data{std::move(p), AffineAuto(std::move(q), std::move(r))})) {
  if (data_->p.is_zero()) throw std::invalid_argument("B(p;q,r) needs p != 0");
}

bool operator==(const GwaAlgebra& a, const GwaAlgebra& b) {
  return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->sigma == b.data_->sigma);
}

GwaElem GwaAlgebra::term(int d, const UniPoly& f) const {
  GwaElem::Terms t;
  if (!f.is_zero()) t.emplace(d, f);
  return GwaElem(*this, std::move(t));
}

GwaElem GwaAlgebra::x() const { return term(1, UniPoly(1)); }
GwaElem GwaAlgebra::y() const { return term(-1, UniPoly(1)); }
GwaElem GwaAlgebra::z() const { return term(0, UniPoly::z()); }
GwaElem GwaAlgebra::one() const { return term(0, UniPoly(1)); }
GwaElem GwaAlgebra::zero() const { return GwaElem(*this, {}); }
GwaElem GwaAlgebra::scalar(const Rational& c) const { return term(0, UniPoly(c)); }
GwaElem GwaAlgebra::poly(const UniPoly& f) const { return term(0, f); }

GwaElem::GwaElem(GwaAlgebra alg, Terms terms) : alg_(std::move(alg)) {
  for (auto& [d, f] : terms)
    if (!f.is_zero()) terms_.emplace(d, std::move(f));
}

UniPoly GwaElem::coeff(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? UniPoly() : it->second;
}

void GwaElem::check_same(const GwaElem& o) const {
  if (!(alg_ == o.alg_)) throw std::invalid_argument("elements belong to different B(p;q,r)");
}

GwaElem& GwaElem::operator+=(const GwaElem& o) {
  check_same(o);
  detail::add_into(terms_, o.terms_);
  return *this;
}

GwaElem& GwaElem::operator-=(const GwaElem& o) {
  check_same(o);
  detail::add_into(terms_, o.terms_, true);
  return *this;
}

GwaElem& GwaElem::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [d, f] : terms_) f *= c;
  return *this;
}

GwaElem operator*(const GwaElem& a, const GwaElem& b) {
  a.check_same(b);
  const AffineAuto& sigma = a.alg_.sigma();
  auto shift = [&sigma](const UniPoly& f, int j) { return sigma.apply(j, f); };
  detail::SkewProduct<UniPoly, decltype(shift)> engine(a.alg_.p(), shift);
  return GwaElem(a.alg_, engine.multiply(a.terms_, b.terms_));
}

bool operator==(const GwaElem& a, const GwaElem& b) { return a.alg_ == b.alg_ && a.terms_ == b.terms_; }

std::string GwaElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [d, f] = *it;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += terms_.size() == 1 ? f.str() : "(" + f.str() + ")";
      continue;
    }
    int e = d > 0 ? d : -d;
    out += d > 0 ? "x" : "y";
    if (e > 1) out += "^" + std::to_string(e);
    out += "*(" + f.str() + ")";
  }
  return out;
}

GwaElem add(const GwaElem& a, const GwaElem& b) { return a + b; }
GwaElem mul(const GwaElem& a, const GwaElem& b) { return a * b; }
GwaElem commutator(const GwaElem& a, const GwaElem& b) { return a * b - b * a; }

GwaElem power(const GwaElem& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  GwaElem acc = a.algebra().one();
  for (int i = 0; i < n; ++i) acc = acc * a;
  return acc;
}

GwaElem commutator_basis(const GwaAlgebra& alg, int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("commutator_basis needs n, k, l >= 0");
  const AffineAuto& sigma = alg.sigma();
  UniPoly sn = s_n(alg.p(), sigma, n);
  UniPoly shifted_z = sigma.apply(n, UniPoly::z());
  UniPoly value = sigma.apply(n, sn) * shifted_z.pow(k + l) - sn * UniPoly::z().pow(k + l);
  return alg.poly(value);
}

}  // namespace gwa
