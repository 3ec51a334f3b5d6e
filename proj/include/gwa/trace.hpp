#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gwa/ambient.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

/// The cyclic trace tau_zeta on B(p; q, r) attached to a root zeta of p.
///
///   hat_tau(z^n) = (1/(1 - q^n)) sum_{i=1}^n t^n_i zeta^i,   hat_tau(1) = 0,
///   t^n_n = 1,  t^n_{n-k} = sum_{i=1}^k C(n,i) r^i q^{n-i}/(1 - q^{n-i}) t^{n-i}_{n-k},
///
/// and tau_zeta kills every x^m z^l, y^m z^l with m > 0.
/// Requires p(0) = p(zeta) = 0 and q not in {0, 1, -1}; the constructor
/// throws std::invalid_argument otherwise. Safe to share between threads.
class TraceFunctional {
 public:
  TraceFunctional(const GwaAlgebra& alg, Rational zeta);

  [[nodiscard]] const Rational& zeta() const { return zeta_; }
  [[nodiscard]] const GwaAlgebra& algebra() const { return alg_; }

  /// t^n_1 .. t^n_n.
  [[nodiscard]] std::vector<Rational> t_coeffs(int n) const;
  [[nodiscard]] Rational hat_tau(const UniPoly& f) const;
  [[nodiscard]] Rational tau(const GwaElem& e) const;

 private:
  Rational t(int n, int i) const;
  Rational t_locked(int n, int i) const;

  GwaAlgebra alg_;
  Rational zeta_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Rational> cache_;
};

struct TraceReport {
  bool pass = true;
  int commutators_checked = 0;
  int pairs_checked = 0;
  std::vector<std::string> counterexamples;
};

/// tau(commutator_basis(n, k, l)) = 0 for n, k, l <= bound, and
/// tau(ab) = tau(ba) on `random_pairs` pseudo-random elements.
TraceReport verify_trace(const TraceFunctional& tf, const GwaAlgebra& alg, int bound, int random_pairs = 50,
                         unsigned seed = 12345);

/// tau_zeta(e_n) on B(p; q, 0). Throws std::invalid_argument unless zeta is
/// a non-zero root of p.
Rational chern_pairing(const AmbAlgebra& amb, const Rational& zeta, int n);

/// Whether p has a root other than 0 over the algebraic closure, i.e. whether
/// p = z^k pt(z) with pt non-constant. Without one every tau_zeta is zero.
bool has_nonzero_root(const UniPoly& p);

/// Rational q is a root of unity iff q = 1 or q = -1.
bool admissible_q(const Rational& q);

}  // namespace gwa
