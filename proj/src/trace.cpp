#include "gwa/trace.hpp"

#include <random>
#include <stdexcept>

#include "gwa/connection.hpp"
#include "gwa/random.hpp"

namespace gwa {

bool admissible_q(const Rational& q) { return !q.is_zero() && q != Rational(1) && q != Rational(-1); }

TraceFunctional::TraceFunctional(const GwaAlgebra& alg, Rational zeta) : alg_(alg), zeta_(std::move(zeta)) {
  if (!admissible_q(alg.q())) throw std::invalid_argument("trace needs q not a root of unity (q != 0, 1, -1)");
  if (!alg.p().eval(Rational(0)).is_zero()) throw std::invalid_argument("trace needs p(0) = 0");
  if (!alg.p().eval(zeta_).is_zero()) throw std::invalid_argument("zeta = " + zeta_.str() + " is not a root of p");
}

Rational TraceFunctional::t_locked(int n, int i) const {
  if (i == n) return Rational(1);
  auto key = std::make_pair(n, i);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const Rational& q = alg_.q();
  const Rational& r = alg_.r();
  int k = n - i;
  Rational acc(0);
  if (!r.is_zero()) {
    for (int j = 1; j <= k; ++j) {
      Rational qn = q.pow(n - j);
      acc += binomial(n, j) * r.pow(j) * qn / (Rational(1) - qn) * t_locked(n - j, i);
    }
  }
  cache_.emplace(key, acc);
  return acc;
}

Rational TraceFunctional::t(int n, int i) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return t_locked(n, i);
}

std::vector<Rational> TraceFunctional::t_coeffs(int n) const {
  if (n < 1) throw std::invalid_argument("t_coeffs needs n >= 1");
  std::vector<Rational> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(t(n, i));
  return out;
}

Rational TraceFunctional::hat_tau(const UniPoly& f) const {
  Rational acc(0);
  if (zeta_.is_zero()) return acc;
  for (auto& [n, c] : f.terms()) {
    if (n == 0) continue;
    Rational s(0);
    for (int i = 1; i <= n; ++i) s += t(n, i) * zeta_.pow(i);
    acc += c * s / (Rational(1) - alg_.q().pow(n));
  }
  return acc;
}

Rational TraceFunctional::tau(const GwaElem& e) const {
  if (!(e.algebra() == alg_)) throw std::invalid_argument("tau: element from a different algebra");
  return hat_tau(e.coeff(0));
}

TraceReport verify_trace(const TraceFunctional& tf, const GwaAlgebra& alg, int bound, int random_pairs,
                         unsigned seed) {
  TraceReport report;
  for (int n = 0; n <= bound; ++n) {
    for (int k = 0; k <= bound; ++k) {
      for (int l = 0; l <= bound; ++l) {
        Rational v = tf.tau(commutator_basis(alg, n, k, l));
        ++report.commutators_checked;
        if (!v.is_zero()) {
          report.pass = false;
          report.counterexamples.push_back("tau([x^" + std::to_string(n) + " z^" + std::to_string(k) + ", z^" +
                                           std::to_string(l) + " y^" + std::to_string(n) + "]) = " + v.str());
        }
      }
    }
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < random_pairs; ++i) {
    GwaElem a = random_gwa_elem(alg, rng, 3, 3);
    GwaElem b = random_gwa_elem(alg, rng, 3, 3);
    Rational ab = tf.tau(a * b), ba = tf.tau(b * a);
    ++report.pairs_checked;
    if (ab != ba) {
      report.pass = false;
      report.counterexamples.push_back("tau(ab) = " + ab.str() + " != tau(ba) = " + ba.str() + " for a = " +
                                       a.str() + ", b = " + b.str());
    }
  }
  return report;
}

Rational chern_pairing(const AmbAlgebra& amb, const Rational& zeta, int n) {
  if (zeta.is_zero()) throw std::invalid_argument("chern_pairing needs a non-zero root zeta");
  if (!amb.p().eval(zeta).is_zero()) throw std::invalid_argument("zeta = " + zeta.str() + " is not a root of p");
  TraceFunctional tf(amb.base(), zeta);
  return tf.tau(amb.base().poly(trace_idempotent(amb, n)));
}

bool has_nonzero_root(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("p must be non-zero");
  return !factor_zero_root(p).tilde.is_constant();
}

}  // namespace gwa
