#include "gwa/random.hpp"

#include <vector>

namespace gwa {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(std::mt19937& rng) {
  int num = uniform(rng, -9, 9);
  int den = uniform(rng, 1, 4);
  return Rational(num, den);
}

UniPoly random_poly(std::mt19937& rng, int max_degree) {
  std::vector<Rational> coeffs;
  int deg = uniform(rng, 0, max_degree);
  for (int d = 0; d <= deg; ++d) coeffs.push_back(uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng));
  return UniPoly::from_coeffs(coeffs);
}

GwaElem random_gwa_elem(const GwaAlgebra& alg, std::mt19937& rng, int max_power, int max_degree) {
  GwaElem out = alg.zero();
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) out += alg.term(uniform(rng, -max_power, max_power), random_poly(rng, max_degree));
  return out;
}

AmbElem random_amb_elem(const AmbAlgebra& alg, std::mt19937& rng, int max_power, int max_degree) {
  AmbElem out = alg.zero();
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    int m = uniform(rng, -max_power, max_power);
    int a = uniform(rng, 0, max_degree);
    int b = uniform(rng, 0, max_degree - a);
    out += alg.monomial(m, a, b, random_rational(rng));
  }
  return out;
}

AmbElem random_homogeneous(const AmbAlgebra& alg, std::mt19937& rng, int d, int max_size) {
  // enumerate monomials of degree d and size |m| + a + b <= max_size
  std::vector<MonoKey> pool;
  for (int m = -max_size; m <= max_size; ++m) {
    int rest = max_size - (m < 0 ? -m : m);
    for (int a = 0; a <= rest; ++a)
      for (int b = 0; a + b <= rest; ++b)
        if (alg.degree_of(m, a, b) == d) pool.push_back({m, a, b});
  }
  AmbElem out = alg.zero();
  if (pool.empty()) return out;
  int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) {
    const MonoKey& key = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    out += alg.monomial(key.m, key.a, key.b, random_rational(rng));
  }
  return out;
}

}  // namespace gwa
