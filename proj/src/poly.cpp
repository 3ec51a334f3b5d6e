#include "gwa/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gwa {

namespace {

// Appends "c*mono" to out with sign handling. mono empty means a constant.
void append_term(std::string& out, const Rational& c, const std::string& mono) {
  bool first = out.empty();
  bool neg = c.sign() < 0;
  Rational mag = neg ? -c : c;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.str();
  } else if (mag.is_one()) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

std::string power_token(const std::string& var, int e) {
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

UniPoly::UniPoly(Terms terms) {
  for (auto& [d, c] : terms) add_term(d, c);
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative polynomial degree");
  UniPoly p;
  p.add_term(degree, c);
  return p;
}

UniPoly UniPoly::from_coeffs(const std::vector<Rational>& ascending) {
  UniPoly p;
  for (std::size_t i = 0; i < ascending.size(); ++i) p.add_term(static_cast<int>(i), ascending[i]);
  return p;
}

void UniPoly::add_term(int d, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

int UniPoly::low_degree() const {
  if (terms_.empty()) throw std::domain_error("low degree of zero polynomial");
  return terms_.begin()->first;
}

Rational UniPoly::coeff(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::eval(const Rational& at) const {
  // Horner over the sparse support.
  Rational acc(0);
  int prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= at.pow(prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * at.pow(prev);
}

double UniPoly::eval(double at) const {
  double acc = 0.0;
  for (auto& [d, c] : terms_) acc += c.to_double() * std::pow(at, d);
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  if (b.is_zero()) {
    UniPoly out;
    for (auto& [d, c] : terms_) out.add_term(d, c * a.pow(d));
    return out;
  }
  UniPoly out;
  UniPoly lin = UniPoly::monomial(1, a) + UniPoly(b);
  UniPoly power(1);
  int at = 0;
  for (auto& [d, c] : terms_) {
    while (at < d) {
      power = power * lin;
      ++at;
    }
    out += power * c;
  }
  return out;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  UniPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  int dd = *divisor.degree();
  Rational lead = divisor.terms_.rbegin()->second;
  UniPoly quot, rem = *this;
  while (!rem.is_zero() && *rem.degree() >= dd) {
    int shift = *rem.degree() - dd;
    Rational c = rem.terms_.rbegin()->second / lead;
    UniPoly step = UniPoly::monomial(shift, c);
    quot += step;
    rem -= step * divisor;
  }
  return {quot, rem};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (auto& [da, ca] : a.terms_)
    for (auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [d, c] : terms_) append_term(out, c, d == 0 ? "" : power_token(var, d));
  return out;
}

// ---------------------------------------------------------------- PairPoly

PairPoly::PairPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

PairPoly::PairPoly(Terms terms) {
  for (auto& [k, c] : terms) add_term(k, c);
}

PairPoly PairPoly::monomial(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in pair monomial");
  PairPoly p;
  p.add_term({a, b}, c);
  return p;
}

PairPoly PairPoly::from_product(const UniPoly& f) {
  PairPoly p;
  for (auto& [d, c] : f.terms()) p.add_term({d, d}, c);
  return p;
}

void PairPoly::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational PairPoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

PairPoly PairPoly::scale_vars(const Rational& s_plus, const Rational& s_minus) const {
  PairPoly out;
  for (auto& [k, c] : terms_) out.add_term(k, c * s_plus.pow(k.first) * s_minus.pow(k.second));
  return out;
}

std::optional<UniPoly> PairPoly::as_product_poly() const {
  UniPoly::Terms t;
  for (auto& [k, c] : terms_) {
    if (k.first != k.second) return std::nullopt;
    t.emplace(k.first, c);
  }
  return UniPoly(std::move(t));
}

PairPoly& PairPoly::operator+=(const PairPoly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PairPoly& PairPoly::operator-=(const PairPoly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PairPoly& PairPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PairPoly operator*(const PairPoly& a, const PairPoly& b) {
  PairPoly out;
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

std::string PairPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [k, c] : terms_) {
    std::string mono;
    if (k.first > 0) mono = power_token("zp", k.first);
    if (k.second > 0) mono += (mono.empty() ? "" : "*") + power_token("zm", k.second);
    append_term(out, c, mono);
  }
  return out;
}

// ---------------------------------------------------------------- AffineAuto

AffineAuto::AffineAuto(Rational q, Rational r) : q_(std::move(q)), r_(std::move(r)) {
  if (q_.is_zero()) throw std::invalid_argument("sigma(z) = qz + r needs q != 0");
}

std::pair<Rational, Rational> AffineAuto::power(int j) const {
  if (q_.is_one()) return {Rational(1), r_ * Rational(j)};
  Rational qj = q_.pow(j);
  return {qj, r_ * (qj - Rational(1)) / (q_ - Rational(1))};
}

UniPoly AffineAuto::apply(int j, const UniPoly& f) const {
  if (j == 0) return f;
  auto [slope, offset] = power(j);
  return f.compose_affine(slope, offset);
}

UniPoly s_n(const UniPoly& p, const AffineAuto& sigma, int n) {
  if (n < 0) throw std::invalid_argument("s_n needs n >= 0");
  UniPoly acc(1);
  for (int m = 0; m < n; ++m) acc = acc * sigma.apply(-m, p);
  return acc;
}

ZeroRootSplit factor_zero_root(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("undefined factorization: zero polynomial");
  int k = p.low_degree();
  UniPoly::Terms t;
  for (auto& [d, c] : p.terms()) t.emplace(d - k, c);
  return {k, UniPoly(std::move(t))};
}

UniPoly hat_decompose(const UniPoly& tilde) {
  UniPoly::Terms t;
  for (auto& [d, c] : tilde.terms())
    if (d > 0) t.emplace(d - 1, -c);
  return UniPoly(std::move(t));
}

}  // namespace gwa
