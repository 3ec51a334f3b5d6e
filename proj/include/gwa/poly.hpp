#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwa/rational.hpp"

namespace gwa {

/// Sparse univariate polynomial over Q in the variable z. Zero
/// coefficients are never stored, so structural equality is equality.
class UniPoly {
 public:
  using Terms = std::map<int, Rational>;

  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(Terms terms);

  static UniPoly monomial(int degree, const Rational& c = Rational(1));
  static UniPoly z() { return monomial(1); }
  /// Coefficients listed from degree 0 upwards.
  static UniPoly from_coeffs(const std::vector<Rational>& ascending);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::optional<int> degree() const;
  [[nodiscard]] int low_degree() const;
  [[nodiscard]] Rational coeff(int d) const;
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  [[nodiscard]] Rational eval(const Rational& at) const;
  [[nodiscard]] double eval(double at) const;
  /// f(a*z + b).
  [[nodiscard]] UniPoly compose_affine(const Rational& a, const Rational& b) const;
  [[nodiscard]] UniPoly pow(int e) const;
  /// Euclidean division; throws std::domain_error for a zero divisor.
  [[nodiscard]] std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Ascending-degree canonical text, e.g. "1 - 3*z + z^2".
  [[nodiscard]] std::string str(const std::string& var = "z") const;

 private:
  void add_term(int d, const Rational& c);
  Terms terms_;
};

/// Sparse polynomial over Q in the commuting pair z+, z-.
/// Keys are (exponent of z+, exponent of z-).
class PairPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  PairPoly() = default;
  PairPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  PairPoly(int c) : PairPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit PairPoly(Terms terms);

  static PairPoly monomial(int a, int b, const Rational& c = Rational(1));
  /// f(z+ * z-).
  static PairPoly from_product(const UniPoly& f);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] Rational coeff(int a, int b) const;
  [[nodiscard]] Rational constant_term() const { return coeff(0, 0); }
  /// f(s+ z+, s- z-).
  [[nodiscard]] PairPoly scale_vars(const Rational& s_plus, const Rational& s_minus) const;
  /// If every monomial has a == b, returns g with f = g(z+ z-).
  [[nodiscard]] std::optional<UniPoly> as_product_poly() const;

  PairPoly& operator+=(const PairPoly& o);
  PairPoly& operator-=(const PairPoly& o);
  PairPoly& operator*=(const Rational& c);
  friend PairPoly operator+(PairPoly a, const PairPoly& b) { return a += b; }
  friend PairPoly operator-(PairPoly a, const PairPoly& b) { return a -= b; }
  friend PairPoly operator*(const PairPoly& a, const PairPoly& b);
  friend PairPoly operator*(PairPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const PairPoly&, const PairPoly&) = default;

  /// e.g. "1 - zp*zm + 3/2*zp^2".
  [[nodiscard]] std::string str() const;

 private:
  void add_term(const Key& k, const Rational& c);
  Terms terms_;
};

/// The affine automorphism sigma(z) = q z + r of Q[z].
class AffineAuto {
 public:
  AffineAuto(Rational q, Rational r);

  [[nodiscard]] const Rational& q() const { return q_; }
  [[nodiscard]] const Rational& r() const { return r_; }

  /// sigma^j(z) = (slope, offset): q^j z + r (q^j - 1)/(q - 1), or z + j r when q = 1.
  [[nodiscard]] std::pair<Rational, Rational> power(int j) const;
  /// f(sigma^j(z)).
  [[nodiscard]] UniPoly apply(int j, const UniPoly& f) const;

  friend bool operator==(const AffineAuto&, const AffineAuto&) = default;

 private:
  Rational q_;
  Rational r_;
};

/// s_n(z) = prod_{m=0}^{n-1} sigma^{-m}(p).
UniPoly s_n(const UniPoly& p, const AffineAuto& sigma, int n);

/// p = z^k * tilde, tilde(0) != 0. Throws std::domain_error for p = 0.
struct ZeroRootSplit {
  int k = 0;
  UniPoly tilde;
};
ZeroRootSplit factor_zero_root(const UniPoly& p);

/// hat with tilde(z) = tilde(0) - z * hat(z).
UniPoly hat_decompose(const UniPoly& tilde);

}  // namespace gwa
