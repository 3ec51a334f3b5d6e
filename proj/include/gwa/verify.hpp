#pragma once

// Independent oracles and the acceptance checks built on them.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwa/trace.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

/// One line of a verification report.
nlohmann::json make_report(const std::string& check, nlohmann::json params, const std::string& expected,
                           const std::string& got, bool pass);

namespace oracle {

/// f(a z + b) by Horner's rule.
UniPoly substitute(const UniPoly& f, const Rational& a, const Rational& b);

/// sigma^j(f) by applying z -> qz + r (or its inverse) |j| times.
UniPoly shift(const UniPoly& f, const Rational& q, const Rational& r, int j);

/// prod_{m<n} sigma^{-m}(p), via shift().
UniPoly s_n(const UniPoly& p, const Rational& q, const Rational& r, int n);

/// Normal form with coefficients on the LEFT: e -> f_e for sum_e f_e X^e.
using LeftForm = std::map<int, UniPoly>;

/// Reduces a word in the letters x, y, z one letter at a time using only the
/// defining relations. Throws std::invalid_argument on other letters.
LeftForm free_reduce(const UniPoly& p, const Rational& q, const Rational& r, const std::string& word);

/// Converts an engine element (coefficients on the right) to LeftForm.
LeftForm to_left(const GwaElem& e);

/// hat_tau(z^m) for m = 1..n from the shift identity read as a triangular
/// linear system (no use of the t-coefficient recursion).
std::vector<Rational> hat_tau_powers(const Rational& q, const Rational& r, const Rational& zeta, int n);

}  // namespace oracle

/// hat_tau(f) - hat_tau(f(qz + r)) == f(zeta) - f(0).
bool shift_identity_holds(const TraceFunctional& tf, const UniPoly& f);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  int checks = 0;
  std::vector<std::string> failures;  // capped
  nlohmann::json details = nlohmann::json::array();
};

/// Acceptance criteria 1..10.
int criterion_count();
CriterionResult run_criterion(int id);
/// All criteria; `parallel` runs them on separate threads.
std::vector<CriterionResult> run_acceptance(bool parallel = true);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace gwa
