#include "gwa/connection.hpp"

#include <stdexcept>

namespace gwa {

// ---------------------------------------------------------------- Tensor2

Tensor2::Canonical Tensor2::canonical() const {
  Canonical out;
  for (auto& [left, right] : pairs_) {
    auto lm = left.monomials();
    auto rm = right.monomials();
    for (auto& [lk, lc] : lm) {
      for (auto& [rk, rc] : rm) {
        auto [it, inserted] = out.try_emplace({lk, rk}, lc * rc);
        if (!inserted) {
          it->second += lc * rc;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

bool Tensor2::legs_homogeneous() const {
  for (auto& [left, right] : pairs_) {
    if (left.is_zero() || right.is_zero()) continue;
    int k = left.algebra().k();
    auto dl = left.degree();
    auto dr = right.degree();
    if (!dl || !dr || *dl != bidegree_.first * k || *dr != bidegree_.second * k) return false;
  }
  return true;
}

std::string Tensor2::str() const {
  if (pairs_.empty()) return "0";
  std::string out;
  for (auto& [left, right] : pairs_) {
    if (!out.empty()) out += " + ";
    out += "(" + left.str() + ") (x) (" + right.str() + ")";
  }
  return out;
}

IdemMatrix IdemMatrix::operator*(const IdemMatrix& o) const {
  std::size_t n = size();
  if (o.size() != n) throw std::invalid_argument("matrix size mismatch");
  IdemMatrix out{this->n, {}};
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GwaElem> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      GwaElem acc = entries[i][j].algebra().zero();
      for (std::size_t l = 0; l < n; ++l) {
        if (entries[i][l].is_zero() || o.entries[l][j].is_zero()) continue;
        acc += entries[i][l] * o.entries[l][j];
      }
      row.push_back(std::move(acc));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- omega

namespace {

Rational unit_scale(const AmbAlgebra& alg) {
  return alg.p_tilde().coeff(0).pow(alg.k()).inverse();
}

// pt(0)^k - z^k hat(z)^k divided by pt(z): sum_{i<k} z^i hat^i pt(0)^{k-1-i}.
UniPoly geometric_sum(const AmbAlgebra& alg) {
  const int k = alg.k();
  Rational c0 = alg.p_tilde().coeff(0);
  UniPoly zhat = UniPoly::z() * alg.p_hat();
  UniPoly acc;
  for (int i = 0; i < k; ++i) acc += zhat.pow(i) * c0.pow(k - 1 - i);
  return acc;
}

void check_level(int n, int max_level) {
  if (n > max_level || -n > max_level)
    throw std::invalid_argument("|n| = " + std::to_string(n < 0 ? -n : n) + " exceeds the configured bound " +
                                std::to_string(max_level));
}

}  // namespace

Tensor2 omega(const AmbAlgebra& alg) {
  const int k = alg.k();
  const Rational& q = alg.q();
  Rational scale = unit_scale(alg);
  UniPoly lead = alg.p_hat().compose_affine(q, Rational(0)).pow(k) * (q.pow(k) * scale);
  AmbElem left1 = alg.poly_in_z(lead) * alg.monomial(0, 0, k);
  AmbElem right1 = alg.monomial(0, k, 0);
  AmbElem left2 = alg.xm() * scale;
  AmbElem right2 = alg.poly_in_z(geometric_sum(alg)) * alg.xp();
  return Tensor2({{left1, right1}, {left2, right2}}, {-1, 1});
}

Tensor2 omega_bar(const AmbAlgebra& alg) {
  const int k = alg.k();
  const Rational& q = alg.q();
  Rational scale = unit_scale(alg);
  Rational c = alg.p_tilde().coeff(0).pow(k);
  UniPoly hat_q = alg.p_hat().compose_affine(q, Rational(0));
  UniPoly numer = UniPoly(c) - UniPoly::monomial(k, q.pow(k)) * hat_q.pow(k);
  auto [quot, rem] = numer.divmod(alg.p_tilde().compose_affine(q, Rational(0)));
  if (!rem.is_zero()) throw std::logic_error("omega_bar: inexact division by pt(qz)");
  AmbElem left1 = alg.poly_in_z(alg.p_hat().pow(k) * scale) * alg.monomial(0, k, 0);
  AmbElem right1 = alg.monomial(0, 0, k);
  AmbElem left2 = alg.xp() * scale;
  AmbElem right2 = alg.poly_in_z(quot) * alg.xm();
  return Tensor2({{left1, right1}, {left2, right2}}, {1, -1});
}

Tensor2 omega_n(const AmbAlgebra& alg, int n, int max_level) {
  check_level(n, max_level);
  Tensor2 current({{alg.one(), alg.one()}}, {0, 0});
  if (n == 0) return current;
  const Tensor2 step = n > 0 ? omega(alg) : omega_bar(alg);
  const int sign = n > 0 ? 1 : -1;
  for (int level = 1; level <= sign * n; ++level) {
    std::vector<Tensor2::Pair> next;
    next.reserve(step.size() * current.size());
    for (auto& [wl, wr] : step.pairs())
      for (auto& [ul, ur] : current.pairs()) next.emplace_back(wl * ul, ur * wr);
    current = Tensor2(std::move(next), {-sign * level, sign * level});
  }
  return current;
}

Tensor2 omega_n_alt(const AmbAlgebra& alg, int n, int max_level) {
  check_level(n, max_level);
  Tensor2 current({{alg.one(), alg.one()}}, {0, 0});
  if (n == 0) return current;
  const Tensor2 step = n > 0 ? omega(alg) : omega_bar(alg);
  const int sign = n > 0 ? 1 : -1;
  for (int level = 1; level <= sign * n; ++level) {
    std::vector<Tensor2::Pair> next;
    next.reserve(step.size() * current.size());
    for (auto& [ul, ur] : current.pairs())
      for (auto& [wl, wr] : step.pairs()) next.emplace_back(ul * wl, wr * ur);
    current = Tensor2(std::move(next), {-sign * level, sign * level});
  }
  return current;
}

bool check_connection(const Tensor2& t) {
  if (t.pairs().empty()) return false;
  const AmbAlgebra& alg = t.pairs().front().first.algebra();
  AmbElem sum = alg.zero();
  for (auto& [left, right] : t.pairs()) sum += left * right;
  return sum == alg.one();
}

// ---------------------------------------------------------------- idempotents

IdemMatrix idempotent(const AmbAlgebra& alg, int n, int max_level) {
  Tensor2 w = omega_n(alg, n, max_level);
  const auto& pairs = w.pairs();
  IdemMatrix e{n, {}};
  e.entries.reserve(pairs.size());
  for (auto& row_pair : pairs) {
    std::vector<GwaElem> row;
    row.reserve(pairs.size());
    for (auto& col_pair : pairs) row.push_back(project_degree_zero(alg, row_pair.second * col_pair.first));
    e.entries.push_back(std::move(row));
  }
  return e;
}

UniPoly trace_idempotent(const AmbAlgebra& alg, int n, int max_level) {
  Tensor2 w = omega_n(alg, n, max_level);
  AmbElem sum = alg.zero();
  for (auto& [left, right] : w.pairs()) sum += right * left;
  GwaElem tr = project_degree_zero(alg, sum);
  if (!tr.is_polynomial()) throw std::logic_error("trace of E(" + std::to_string(n) + ") is not a polynomial in z");
  return tr.coeff(0);
}

UniPoly e_n_recursive(const AmbAlgebra& alg, int n) {
  if (n < 1) throw std::invalid_argument("e_n_recursive needs n >= 1");
  const int k = alg.k();
  const Rational& q = alg.q();
  Rational c = alg.p_tilde().coeff(0).pow(k);
  UniPoly zk = UniPoly::monomial(k);
  UniPoly hat_k = alg.p_hat().pow(k);
  UniPoly hat_qk = alg.p_hat().compose_affine(q, Rational(0)).pow(k);
  UniPoly e = (hat_qk * q.pow(k) - hat_k) * zk * c.inverse() + UniPoly(1);
  UniPoly left = UniPoly(c) - hat_k * zk;
  UniPoly right = UniPoly(c) - hat_qk * zk * q.pow(k);
  Rational q_inv = q.inverse();
  for (int level = 1; level < n; ++level) {
    UniPoly back = e.compose_affine(q_inv, Rational(0));
    e = (left * back - right * e) * c.inverse() + e;
  }
  return e;
}

std::vector<GwaElem> row_times(const std::vector<GwaElem>& row, const IdemMatrix& e) {
  if (row.size() != e.size()) throw std::invalid_argument("row length does not match the matrix");
  std::vector<GwaElem> out;
  out.reserve(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    GwaElem acc = e.entries[0][j].algebra().zero();
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero() && !e.entries[i][j].is_zero()) acc += row[i] * e.entries[i][j];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<GwaElem> module_row(const AmbAlgebra& alg, int n, const AmbElem& a, int max_level) {
  if (!a.is_zero()) {
    auto d = a.degree();
    if (!d || *d != n * alg.k())
      throw std::invalid_argument("module_row: element is not homogeneous of Veronese degree " + std::to_string(n));
  }
  Tensor2 w = omega_n(alg, n, max_level);
  IdemMatrix e = idempotent(alg, n, max_level);
  std::vector<GwaElem> coords;
  coords.reserve(w.size());
  for (auto& [left, right] : w.pairs()) coords.push_back(project_degree_zero(alg, a * left));
  return row_times(coords, e);
}

std::optional<UnitPair> unit_in_degree(const AmbAlgebra& alg, int n) {
  if (n == 0) return UnitPair{alg.one(), alg.one()};
  if (!alg.p_tilde().is_constant()) return std::nullopt;
  int m = n > 0 ? n : -n;
  Rational c = alg.p_tilde().coeff(0);
  // x+ x- = x- x+ = c, so x(+/-)^m has inverse x(-/+)^m / c^m.
  AmbElem up = amb_power(alg.xp(), m);
  AmbElem down = amb_power(alg.xm(), m);
  UnitPair out = n > 0 ? UnitPair{up, down * c.pow(m).inverse()} : UnitPair{down, up * c.pow(m).inverse()};
  if (!(out.unit * out.inverse == alg.one()) || !(out.inverse * out.unit == alg.one()))
    throw std::logic_error("unit_in_degree: inverse check failed");
  return out;
}

}  // namespace gwa
