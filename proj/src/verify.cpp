#include "gwa/verify.hpp"

#include <chrono>
#include <future>
#include <random>
#include <stdexcept>

#include "gwa/ambient.hpp"
#include "gwa/config.hpp"
#include "gwa/connection.hpp"
#include "gwa/grading.hpp"
#include "gwa/numrep.hpp"
#include "gwa/random.hpp"

namespace gwa {

nlohmann::json make_report(const std::string& check, nlohmann::json params, const std::string& expected,
                           const std::string& got, bool pass) {
  return {{"check", check}, {"params", std::move(params)}, {"expected", expected}, {"got", got}, {"pass", pass}};
}

namespace oracle {

UniPoly substitute(const UniPoly& f, const Rational& a, const Rational& b) {
  auto d = f.degree();
  if (!d) return {};
  UniPoly lin = UniPoly::monomial(1, a) + UniPoly(b);
  UniPoly out;
  for (int i = *d; i >= 0; --i) out = out * lin + UniPoly(f.coeff(i));
  return out;
}

UniPoly shift(const UniPoly& f, const Rational& q, const Rational& r, int j) {
  UniPoly out = f;
  if (j > 0)
    for (int i = 0; i < j; ++i) out = substitute(out, q, r);
  else
    for (int i = 0; i < -j; ++i) out = substitute(out, q.inverse(), -r / q);
  return out;
}

UniPoly s_n(const UniPoly& p, const Rational& q, const Rational& r, int n) {
  UniPoly out(1);
  for (int m = 0; m < n; ++m) out = out * shift(p, q, r, -m);
  return out;
}

LeftForm free_reduce(const UniPoly& p, const Rational& q, const Rational& r, const std::string& word) {
  LeftForm state{{0, UniPoly(1)}};
  for (char letter : word) {
    LeftForm next;
    for (auto& [e, f] : state) {
      int key = e;
      UniPoly coeff;
      switch (letter) {
        case 'z':  // X^e z = sigma^e(z) X^e
          coeff = f * shift(UniPoly::z(), q, r, e);
          break;
        case 'x':  // y^m x = y^{m-1} p = sigma^{1-m}(p) y^{m-1}
          key = e + 1;
          coeff = e >= 0 ? f : f * shift(p, q, r, e + 1);
          break;
        case 'y':  // x^m y = x^{m-1} sigma(p) = sigma^m(p) x^{m-1}
          key = e - 1;
          coeff = e <= 0 ? f : f * shift(p, q, r, e);
          break;
        default:
          throw std::invalid_argument(std::string("free_reduce: unexpected letter '") + letter + "'");
      }
      next[key] += coeff;
      if (next[key].is_zero()) next.erase(key);
    }
    state = std::move(next);
  }
  return state;
}

LeftForm to_left(const GwaElem& e) {
  const GwaAlgebra& alg = e.algebra();
  LeftForm out;
  for (auto& [d, g] : e.terms()) {
    UniPoly f = shift(g, alg.q(), alg.r(), d);
    if (!f.is_zero()) out[d] = f;
  }
  return out;
}

std::vector<Rational> hat_tau_powers(const Rational& q, const Rational& r, const Rational& zeta, int n) {
  // (1 - q^m) T_m = zeta^m + sum_{j<m} [z^j](qz + r)^m T_j,  T_0 = 0
  std::vector<Rational> t(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int m = 1; m <= n; ++m) {
    UniPoly expanded = substitute(UniPoly::monomial(m), q, r);
    Rational rhs = zeta.pow(m);
    for (int j = 1; j < m; ++j) rhs += expanded.coeff(j) * t[static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(m)] = rhs / (Rational(1) - expanded.coeff(m));
  }
  t.erase(t.begin());
  return t;
}

}  // namespace oracle

bool shift_identity_holds(const TraceFunctional& tf, const UniPoly& f) {
  const GwaAlgebra& alg = tf.algebra();
  Rational lhs = tf.hat_tau(f) - tf.hat_tau(oracle::substitute(f, alg.q(), alg.r()));
  return lhs == f.eval(tf.zeta()) - f.eval(Rational(0));
}

namespace {

constexpr std::size_t kMaxFailures = 20;

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  bool check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      r_.pass = false;
      if (r_.failures.size() < kMaxFailures) r_.failures.push_back(what);
    }
    return ok;
  }

  void detail(nlohmann::json j) { r_.details.push_back(std::move(j)); }

 private:
  CriterionResult& r_;
};

const std::vector<std::string>& core_presets() {
  static const std::vector<std::string> names = {"sphere", "lens(2,1,2)", "kleinian-demo"};
  return names;
}

nlohmann::json params_of(const Config& c) {
  return {{"preset", c.name}, {"p", c.p.str()}, {"q_plus", c.q_plus.str()}, {"q_minus", c.q_minus.str()}};
}

void index_pairing(Recorder& rec) {
  for (auto& name : core_presets()) {
    Config cfg = preset(name);
    AmbAlgebra amb = cfg.ambient();
    for (auto& zeta : cfg.nonzero_zetas()) {
      for (int n = -4; n <= 4; ++n) {
        Rational got = chern_pairing(amb, zeta, n);
        bool ok = rec.check(got == Rational(-n), name + " zeta=" + zeta.str() + " n=" + std::to_string(n) +
                                                     ": got " + got.str());
        auto params = params_of(cfg);
        params["n"] = n;
        params["zeta"] = zeta.str();
        rec.detail(make_report("chern", params, Rational(-n).str(), got.str(), ok));
      }
    }
  }
}

void strong_connection(Recorder& rec) {
  for (auto& name : core_presets()) {
    AmbAlgebra amb = preset(name).ambient();
    for (int n = -4; n <= 4; ++n) {
      std::string tag = name + " n=" + std::to_string(n);
      Tensor2 w = omega_n(amb, n);
      rec.check(check_connection(w), tag + ": legs do not multiply to 1");
      rec.check(w.legs_homogeneous(), tag + ": legs not homogeneous");
      rec.check(w.canonical() == omega_n_alt(amb, n).canonical(), tag + ": omega_n differs from omega_n_alt");
    }
  }
}

void idempotency(Recorder& rec) {
  for (auto& name : core_presets()) {
    AmbAlgebra amb = preset(name).ambient();
    for (int n = -4; n <= 4; ++n) {
      std::string tag = name + " n=" + std::to_string(n);
      Tensor2 w = omega_n(amb, n);
      IdemMatrix e = idempotent(amb, n);
      rec.check(e * e == e, tag + ": E^2 != E");
      rec.check(e.size() == w.size(), tag + ": size mismatch");
      bool entries_ok = true;
      for (std::size_t i = 0; i < w.size() && entries_ok; ++i) {
        for (std::size_t j = 0; j < w.size() && entries_ok; ++j) {
          AmbElem raw = w.pairs()[i].second * w.pairs()[j].first;
          GwaElem projected = project_degree_zero(amb, raw);
          entries_ok = projected == e.entries[i][j] && embed_B(amb, projected) == raw;
        }
      }
      rec.check(entries_ok, tag + ": an entry does not project to degree zero consistently");
    }
  }
}

void oracle_equivalence(Recorder& rec) {
  for (auto& name : core_presets()) {
    AmbAlgebra amb = preset(name).ambient();
    for (int n = 1; n <= 4; ++n) {
      std::string tag = name + " n=" + std::to_string(n);
      UniPoly traced = trace_idempotent(amb, n);
      UniPoly recursed = e_n_recursive(amb, n);
      rec.check(traced == recursed, tag + ": Tr E(n) = " + traced.str() + " vs recursion " + recursed.str());
      rec.check(traced.eval(Rational(0)) == Rational(1), tag + ": e_n(0) = " + traced.eval(Rational(0)).str());
    }
  }
}

void trace_axioms(Recorder& rec) {
  UniPoly p = UniPoly::z() * (UniPoly(1) - UniPoly::z());
  for (const Rational& r : {Rational(0), Rational(1, 2)}) {
    GwaAlgebra alg(p, Rational(4), r);
    TraceFunctional tf(alg, Rational(1));
    std::string tag = "r=" + r.str();
    std::mt19937 rng(2024);
    int failed = 0;
    for (int i = 0; i < 100; ++i) {
      UniPoly f = random_poly(rng, 8);
      if (!rec.check(shift_identity_holds(tf, f), tag + ": shift identity fails on " + f.str())) ++failed;
    }
    auto expected = oracle::hat_tau_powers(alg.q(), r, tf.zeta(), 8);
    for (int m = 1; m <= 8; ++m)
      rec.check(tf.hat_tau(UniPoly::monomial(m)) == expected[static_cast<std::size_t>(m - 1)],
                tag + ": hat_tau(z^" + std::to_string(m) + ") disagrees with the linear-system oracle");
    TraceReport report = verify_trace(tf, alg, 3, 200, 77);
    rec.check(report.pass, tag + ": " + (report.counterexamples.empty() ? "trace check failed"
                                                                        : report.counterexamples.front()));
    rec.detail({{"r", r.str()},
                {"shift_identity_failures", failed},
                {"commutators_checked", report.commutators_checked},
                {"pairs_checked", report.pairs_checked}});
  }
}

void enumerate_words(const std::string& prefix, int max_len, std::vector<std::string>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == max_len) return;
  for (char c : {'x', 'y', 'z'}) enumerate_words(prefix + c, max_len, out);
}

void gwa_engine(Recorder& rec) {
  UniPoly z = UniPoly::z();
  std::vector<GwaAlgebra> algebras = {GwaAlgebra(z * (UniPoly(1) - z), Rational(4), Rational(0)),
                                      GwaAlgebra(z.pow(2) * (UniPoly(1) - z) * (UniPoly(2) - z), Rational(3),
                                                 Rational(1, 2))};
  std::vector<std::string> words;
  enumerate_words("", 5, words);
  for (auto& alg : algebras) {
    std::string tag = "q=" + alg.q().str() + " r=" + alg.r().str();
    for (int n = 1; n <= 4; ++n) {
      UniPoly sn = oracle::s_n(alg.p(), alg.q(), alg.r(), n);
      rec.check(power(alg.y(), n) * power(alg.x(), n) == alg.poly(sn), tag + ": y^n x^n != s_n, n=" + std::to_string(n));
      rec.check(power(alg.x(), n) * power(alg.y(), n) == alg.poly(oracle::shift(sn, alg.q(), alg.r(), n)),
                tag + ": x^n y^n != sigma^n(s_n), n=" + std::to_string(n));
      rec.check(s_n(alg.p(), alg.sigma(), n) == sn, tag + ": s_n disagrees with oracle");
    }
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
      GwaElem a = random_gwa_elem(alg, rng, 3, 3), b = random_gwa_elem(alg, rng, 3, 3),
              c = random_gwa_elem(alg, rng, 3, 3);
      rec.check((a * b) * c == a * (b * c), tag + ": associativity fails for " + a.str() + ", " + b.str() + ", " + c.str());
    }
    for (auto& word : words) {
      GwaElem prod = alg.one();
      for (char letter : word) prod = prod * (letter == 'x' ? alg.x() : letter == 'y' ? alg.y() : alg.z());
      rec.check(oracle::to_left(prod) == oracle::free_reduce(alg.p(), alg.q(), alg.r(), word),
                tag + ": word '" + word + "' disagrees with free reduction");
    }
    rec.detail({{"algebra", tag}, {"words_checked", words.size()}});
  }
}

void degree_zero(Recorder& rec) {
  for (auto& name : core_presets()) {
    AmbAlgebra amb = preset(name).ambient();
    const GwaAlgebra& base = amb.base();
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
      GwaElem a = random_gwa_elem(base, rng, 3, 3), b = random_gwa_elem(base, rng, 3, 3);
      AmbElem ea = embed_B(amb, a);
      rec.check(embed_B(amb, a * b) == ea * embed_B(amb, b), name + ": embed_B not multiplicative on " + a.str() + ", " + b.str());
      rec.check(project_degree_zero(amb, ea) == a, name + ": project(embed(a)) != a for " + a.str());
      AmbElem h = random_homogeneous(amb, rng, 0, 3);
      rec.check(embed_B(amb, project_degree_zero(amb, h)) == h, name + ": embed(project(h)) != h for " + h.str());
    }
  }
}

bool legs_have_degree(const GradedView& view, const Witness& w, int g) {
  for (auto& t : w.terms) {
    if (!t.a.is_zero() && view.degree(t.a) != view.normalize(g)) return false;
    if (!t.b.is_zero() && view.degree(t.b) != view.normalize(-g)) return false;
  }
  return true;
}

void grading_lab(Recorder& rec) {
  for (auto& name : core_presets()) {
    AmbAlgebra amb = preset(name).ambient();
    const int k = amb.k();
    ViewPtr z_view = ambient_view(amb);
    ViewPtr ver = veronese_view(z_view, k);
    for (int g : {1, -1}) {
      auto w = witness_search(*ver, g, 4);
      rec.check(w && w->check() && legs_have_degree(*ver, *w, g),
                name + ": no verified Veronese witness of degree " + std::to_string(g) + " at bound 4");
    }
    if (k == 2) {
      auto none_z = witness_search(*z_view, 1, 10);
      rec.check(!none_z, name + ": unexpected witness for the Z-grading at bound 10");
      ViewPtr quot = induced_quotient_view(z_view, k);
      auto none_q = witness_search(*quot, 1, 8);
      rec.check(!none_q, name + ": unexpected witness for the Z/" + std::to_string(k) + " grading at bound 8");
      rec.detail({{"preset", name}, {"z_grading_bound_10", none_z ? "found" : "none within bound"},
                  {"quotient_bound_8", none_q ? "found" : "none within bound"}});
    }

    // Z > 2Z on A^(k): quotient witnesses by search, K-witnesses from omega.
    const int index = 2;
    ViewPtr qv = induced_quotient_view(ver, index);
    std::map<int, Witness> quotient;
    for (int h = 0; h < index; ++h)
      if (auto w = witness_search(*qv, h, 4)) quotient.emplace(h, *w);
    std::map<int, Witness> kernel;
    for (int c = -3; c <= 3; ++c)
      if (c != 0) kernel.emplace(c, witness_from_tensor(omega_n(amb, -index * c, 2 * index * 3)));
    for (int g : {1, 2}) {
      Witness w = compose_witnesses(*ver, index, quotient, kernel, g);
      rec.check(w.check() && legs_have_degree(*ver, w, g),
                name + ": composed witness of degree " + std::to_string(g) + " fails");
    }
  }
}

void degenerate_case(Recorder& rec) {
  Config cfg = preset("degenerate");
  AmbAlgebra amb = cfg.ambient();
  for (int n = -3; n <= 3; ++n) {
    auto u = unit_in_degree(amb, n);
    std::string tag = "n=" + std::to_string(n);
    if (!rec.check(u.has_value(), tag + ": no unit returned")) continue;
    rec.check(u->unit * u->inverse == amb.one() && u->inverse * u->unit == amb.one(), tag + ": not inverse");
    rec.check(u->unit.degree() == n * amb.k() && u->inverse.degree() == -n * amb.k(), tag + ": wrong degree");
  }
  rec.check(!has_nonzero_root(cfg.p), "z^2 reported as having a non-zero root");
  rec.check(has_nonzero_root(preset("sphere").p), "z(1-z) reported as having no non-zero root");
  bool rejected = false;
  try {
    (void)chern_pairing(amb, Rational(0), 1);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  rec.check(rejected, "chern_pairing accepted zeta = 0");
  rec.detail(make_report("degenerate", params_of(cfg), "no admissible zeta",
                         has_nonzero_root(cfg.p) ? "admissible zeta exists" : "no admissible zeta",
                         !has_nonzero_root(cfg.p)));
}

void representations(Recorder& rec) {
  UniPoly p = UniPoly::z() * (UniPoly(1) - UniPoly::z());
  GwaAlgebra alg(p, Rational(1, 4), Rational(0));
  TruncatedRep rep = truncated_rep(alg, 1.0, 16);
  ResidualReport res = relation_residuals(alg, rep);
  rec.check(res.max() < 1e-10, "truncated rep residual " + std::to_string(res.max()));
  rec.detail({{"dim", 16}, {"xy", res.xy}, {"yx", res.yx}, {"xz", res.xz}, {"yz", res.yz}});
  GwaAlgebra one(p, Rational(1, 2), Rational(1, 4));
  for (int lambda : {1, -1}) {
    for (auto& [rel, v] : one_dim_residuals(one, one_dim_rep(one, lambda)))
      rec.check(v < 1e-12, "one-dimensional rep lambda=" + std::to_string(lambda) + " relation " + rel + " residual " +
                               std::to_string(v));
  }
}

struct Entry {
  const char* title;
  void (*run)(Recorder&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"index pairing tau(e_n) = -n", index_pairing},
      {"strong connection omega(n)", strong_connection},
      {"idempotency E(n)^2 = E(n)", idempotency},
      {"trace of E(n) matches recursion", oracle_equivalence},
      {"trace axioms", trace_axioms},
      {"GWA engine", gwa_engine},
      {"degree-zero part is B(p;q,0)", degree_zero},
      {"grading laboratory", grading_lab},
      {"degenerate case p = z^2", degenerate_case},
      {"numerical representations", representations},
  };
  return list;
}

}  // namespace

int criterion_count() { return static_cast<int>(entries().size()); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
  const Entry& e = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.title = e.title;
  result.pass = true;
  Recorder rec(result);
  auto start = std::chrono::steady_clock::now();
  try {
    e.run(rec);
  } catch (const std::exception& ex) {
    rec.check(false, std::string("exception: ") + ex.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(bool parallel) {
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id));
    return out;
  }
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= criterion_count(); ++id) jobs.push_back(std::async(std::launch::async, run_criterion, id));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"check", "criterion " + std::to_string(r.id)},
          {"title", r.title},
          {"pass", r.pass},
          {"checks", r.checks},
          {"seconds", r.seconds},
          {"failures", r.failures},
          {"details", r.details}};
}

}  // namespace gwa
