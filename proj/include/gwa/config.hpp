#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gwa/ambient.hpp"
#include "gwa/weyl.hpp"

namespace gwa {

/// Parameters of B(p; q+ q-, r) and A(p; q+-), plus the listed rational roots
/// used for traces.
///
/// JSON form:
///   {"p": {"coeffs": ["0", "1", "-1"]}          ascending, or
///    "p": {"roots": [["0", 1], ["1", 1]], "scale": "1"},
///    "q_plus": "2", "q_minus": "2", "r": "0", "zeta": "1" | ["1", "2"]}
/// In the roots form a root 0 contributes z^m and a root a != 0 contributes
/// (1 - z/a)^m, the same normalisation the lens presets use.
struct Config {
  std::string name = "custom";
  UniPoly p;
  Rational q_plus{1};
  Rational q_minus{1};
  Rational r{0};
  std::vector<Rational> zetas;

  [[nodiscard]] Rational q() const { return q_plus * q_minus; }
  [[nodiscard]] GwaAlgebra weyl() const { return GwaAlgebra(p, q(), r); }
  /// Throws std::invalid_argument unless 0 is a root of p.
  [[nodiscard]] AmbAlgebra ambient() const { return AmbAlgebra(p, q_plus, q_minus); }
  /// Listed roots other than 0.
  [[nodiscard]] std::vector<Rational> nonzero_zetas() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Throws std::invalid_argument on malformed input, p = 0 or a listed zeta
/// that is not a root of p.
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);

/// "sphere", "lens(k,l,q)" or "kleinian-demo"; "degenerate" (p = z^2) is
/// also accepted. Throws std::invalid_argument for an unknown name.
Config preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace gwa
