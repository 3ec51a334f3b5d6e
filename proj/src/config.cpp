#include "gwa/config.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace gwa {

namespace {

Rational rational_field(const nlohmann::json& j, const char* key, const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument(std::string("field '") + key + "' must be a rational string");
}

Rational rational_value(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("expected a rational string, got " + v.dump());
}

UniPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("field 'p' must be an object");
  UniPoly p;
  if (j.contains("coeffs")) {
    std::vector<Rational> coeffs;
    for (auto& c : j.at("coeffs")) coeffs.push_back(rational_value(c));
    p = UniPoly::from_coeffs(coeffs);
  } else if (j.contains("roots")) {
    p = UniPoly(1);
    for (auto& entry : j.at("roots")) {
      if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer() || entry[1].get<int>() < 1)
        throw std::invalid_argument("each root must be [rational string, positive multiplicity]");
      Rational root = rational_value(entry[0]);
      int mult = entry[1].get<int>();
      UniPoly factor = root.is_zero() ? UniPoly::z() : UniPoly(1) - UniPoly::monomial(1, root.inverse());
      p = p * factor.pow(mult);
    }
    p *= rational_field(j, "scale", Rational(1));
  } else {
    throw std::invalid_argument("field 'p' needs 'coeffs' or 'roots'");
  }
  if (p.is_zero()) throw std::invalid_argument("p must be non-zero");
  return p;
}

}  // namespace

std::vector<Rational> Config::nonzero_zetas() const {
  std::vector<Rational> out;
  for (auto& z : zetas)
    if (!z.is_zero()) out.push_back(z);
  return out;
}

nlohmann::json Config::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  if (auto d = p.degree())
    for (int i = 0; i <= *d; ++i) coeffs.push_back(p.coeff(i).str());
  nlohmann::json zs = nlohmann::json::array();
  for (auto& z : zetas) zs.push_back(z.str());
  return {{"name", name},       {"p", {{"coeffs", coeffs}}}, {"p_text", p.str()}, {"q_plus", q_plus.str()},
          {"q_minus", q_minus.str()}, {"r", r.str()},         {"zeta", zs}};
}

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (!j.contains("p")) throw std::invalid_argument("config is missing 'p'");
  Config cfg;
  if (j.contains("name") && j.at("name").is_string()) cfg.name = j.at("name").get<std::string>();
  cfg.p = poly_from_json(j.at("p"));
  cfg.q_plus = rational_field(j, "q_plus", Rational(1));
  cfg.q_minus = rational_field(j, "q_minus", Rational(1));
  cfg.r = rational_field(j, "r", Rational(0));
  if (cfg.q_plus.is_zero() || cfg.q_minus.is_zero()) throw std::invalid_argument("q_plus and q_minus must be non-zero");
  if (j.contains("zeta")) {
    const auto& z = j.at("zeta");
    if (z.is_array())
      for (auto& v : z) cfg.zetas.push_back(rational_value(v));
    else
      cfg.zetas.push_back(rational_value(z));
  }
  for (auto& z : cfg.zetas)
    if (!cfg.p.eval(z).is_zero()) throw std::invalid_argument("zeta = " + z.str() + " is not a root of p");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument("config file '" + path + "': " + ex.what());
  }
  return config_from_json(j);
}

Config preset(const std::string& name) {
  Config cfg;
  cfg.name = name;
  UniPoly z = UniPoly::z();
  if (name == "sphere") {
    cfg.p = z * (UniPoly(1) - z);
    cfg.q_plus = cfg.q_minus = Rational(2);
    cfg.zetas = {Rational(1)};
    return cfg;
  }
  if (name == "kleinian-demo") {
    cfg.p = z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z);
    cfg.q_plus = Rational(3);
    cfg.q_minus = Rational(1);
    cfg.zetas = {Rational(1), Rational(2)};
    return cfg;
  }
  if (name == "degenerate") {
    cfg.p = z.pow(2);
    cfg.q_plus = cfg.q_minus = Rational(2);
    return cfg;
  }
  static const std::regex lens(R"(lens\(\s*(\d+)\s*,\s*(\d+)\s*,\s*([-+]?\d+(?:/\d+)?)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, lens)) {
    int k = std::stoi(m[1]);
    int l = std::stoi(m[2]);
    Rational q = Rational::parse(m[3].str());
    if (k < 1 || l < 1) throw std::invalid_argument("lens(k,l,q) needs k, l >= 1");
    if (q.is_zero()) throw std::invalid_argument("lens(k,l,q) needs q != 0");
    // p(z) = z^k prod_{i<l} (1 - q^{-2i} z), algebra parameter q^{2l}, q+- = q^l
    cfg.p = z.pow(k);
    for (int i = 0; i < l; ++i) {
      cfg.p = cfg.p * (UniPoly(1) - z * q.pow(-2 * i));
      Rational root = q.pow(2 * i);
      if (std::find(cfg.zetas.begin(), cfg.zetas.end(), root) == cfg.zetas.end()) cfg.zetas.push_back(root);
    }
    cfg.q_plus = cfg.q_minus = q.pow(l);
    return cfg;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"sphere", "lens(k,l,q)", "kleinian-demo", "degenerate"}; }

}  // namespace gwa
