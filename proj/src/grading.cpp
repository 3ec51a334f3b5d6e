#include "gwa/grading.hpp"

#include <stdexcept>

namespace gwa {

// ---------------------------------------------------------------- ExactMatrix

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix index");
  if (v.is_zero()) data_[r].erase(c);
  else data_[r][c] = v;
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix index");
  if (v.is_zero()) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

namespace {

struct PivotRow {
  std::map<std::size_t, Rational> row;  // leading entry is 1
  Rational rhs;
};

// Row echelon form built one row at a time; pivots keyed by leading column.
// Returns false if some row reduces to 0 = non-zero.
bool eliminate(const std::vector<std::map<std::size_t, Rational>>& rows, const std::vector<Rational>& rhs,
               std::map<std::size_t, PivotRow>& pivots) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::map<std::size_t, Rational> cur = rows[r];
    Rational b = rhs[r];
    while (!cur.empty()) {
      auto lead = cur.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        Rational inv = lead->second.inverse();
        for (auto& [c, v] : cur) v *= inv;
        b *= inv;
        std::size_t col = lead->first;
        pivots.emplace(col, PivotRow{std::move(cur), std::move(b)});
        cur.clear();
        b = Rational(0);
        break;
      }
      Rational f = lead->second;
      for (auto& [c, v] : it->second.row) {
        auto [slot, inserted] = cur.try_emplace(c, -f * v);
        if (!inserted) {
          slot->second -= f * v;
          if (slot->second.is_zero()) cur.erase(slot);
        }
      }
      b -= f * it->second.rhs;
    }
    if (!b.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> ExactMatrix::solve(const std::vector<Rational>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("rhs length does not match the matrix");
  std::map<std::size_t, PivotRow> pivots;
  if (!eliminate(data_, rhs, pivots)) return std::nullopt;
  std::vector<Rational> x(cols_, Rational(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational val = it->second.rhs;
    for (auto& [c, v] : it->second.row)
      if (c != it->first) val -= v * x[c];
    x[it->first] = val;
  }
  return x;
}

std::size_t ExactMatrix::rank() const {
  std::map<std::size_t, PivotRow> pivots;
  eliminate(data_, std::vector<Rational>(rows_, Rational(0)), pivots);
  return pivots.size();
}

// ---------------------------------------------------------------- views

std::optional<int> GradedView::degree(const AmbElem& e) const {
  auto parts = split(e);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

int GradedView::normalize(int g) const {
  int m = modulus();
  if (m == 0) return g;
  return ((g % m) + m) % m;
}

namespace {

class AmbientView final : public GradedView {
 public:
  explicit AmbientView(AmbAlgebra alg) : alg_(std::move(alg)) {}

  int modulus() const override { return 0; }
  std::string name() const override { return "Z-grading of A(p;q+-)"; }
  const AmbAlgebra& algebra() const override { return alg_; }
  int degree_range(int bound) const override { return (alg_.k() > 1 ? alg_.k() : 1) * bound; }

  std::vector<AmbElem> enumerate_basis(int g, int bound) const override {
    std::vector<AmbElem> out;
    for (int size = 0; size <= bound; ++size) {
      for (int m = -size; m <= size; ++m) {
        int rest = size - (m < 0 ? -m : m);
        for (int a = 0; a <= rest; ++a) {
          int b = rest - a;
          if (alg_.degree_of(m, a, b) == g) out.push_back(alg_.monomial(m, a, b));
        }
      }
    }
    return out;
  }

  std::map<int, AmbElem> split(const AmbElem& e) const override { return degree_split(e); }

 private:
  AmbAlgebra alg_;
};

class QuotientView final : public GradedView {
 public:
  QuotientView(ViewPtr base, int k) : base_(std::move(base)), k_(k) {}

  int modulus() const override { return k_; }
  std::string name() const override { return base_->name() + " mod " + std::to_string(k_); }
  const AmbAlgebra& algebra() const override { return base_->algebra(); }
  int degree_range(int bound) const override { return base_->degree_range(bound); }

  std::vector<AmbElem> enumerate_basis(int h, int bound) const override {
    std::vector<AmbElem> out;
    int range = base_->degree_range(bound);
    for (int d = -range; d <= range; ++d) {
      if (normalize(d) != normalize(h)) continue;
      auto fiber = base_->enumerate_basis(d, bound);
      out.insert(out.end(), fiber.begin(), fiber.end());
    }
    return out;
  }

  std::map<int, AmbElem> split(const AmbElem& e) const override {
    std::map<int, AmbElem> out;
    for (auto& [d, part] : base_->split(e)) {
      auto it = out.try_emplace(normalize(d), algebra().zero()).first;
      it->second += part;
    }
    return out;
  }

 private:
  ViewPtr base_;
  int k_;
};

class VeroneseView final : public GradedView {
 public:
  VeroneseView(ViewPtr base, int k) : base_(std::move(base)), k_(k) {}

  int modulus() const override { return 0; }
  std::string name() const override { return base_->name() + " Veronese " + std::to_string(k_); }
  const AmbAlgebra& algebra() const override { return base_->algebra(); }
  int degree_range(int bound) const override { return base_->degree_range(bound) / k_; }

  std::vector<AmbElem> enumerate_basis(int g, int bound) const override {
    return base_->enumerate_basis(g * k_, bound);
  }

  std::map<int, AmbElem> split(const AmbElem& e) const override {
    std::map<int, AmbElem> out;
    for (auto& [d, part] : base_->split(e)) {
      if (d % k_ != 0)
        throw std::invalid_argument("element has a component of degree " + std::to_string(d) +
                                    " outside the Veronese subalgebra");
      out.emplace(d / k_, part);
    }
    return out;
  }

 private:
  ViewPtr base_;
  int k_;
};

}  // namespace

ViewPtr ambient_view(const AmbAlgebra& alg) { return std::make_shared<AmbientView>(alg); }

ViewPtr induced_quotient_view(const ViewPtr& base, int k) {
  if (k < 1) throw std::invalid_argument("quotient Z -> Z/kZ needs k >= 1");
  if (base->modulus() != 0) throw std::invalid_argument("quotient view needs a Z-graded base");
  return std::make_shared<QuotientView>(base, k);
}

ViewPtr veronese_view(const ViewPtr& base, int k) {
  if (k < 1) throw std::invalid_argument("Veronese view needs k >= 1");
  if (base->modulus() != 0) throw std::invalid_argument("Veronese view needs a Z-graded base");
  return std::make_shared<VeroneseView>(base, k);
}

// ---------------------------------------------------------------- witnesses

AmbElem Witness::product_sum() const {
  if (terms.empty()) throw std::invalid_argument("empty witness");
  AmbElem acc = terms.front().a.algebra().zero();
  for (auto& t : terms) acc += (t.a * t.b) * t.c;
  return acc;
}

bool Witness::check() const { return !terms.empty() && product_sum() == terms.front().a.algebra().one(); }

std::optional<Witness> witness_search(const GradedView& view, int g, int bound) {
  if (bound < 1) throw std::invalid_argument("witness_search needs a bound >= 1");
  auto left = view.enumerate_basis(view.normalize(g), bound);
  auto right = view.enumerate_basis(view.inverse(g), bound);
  if (left.empty() || right.empty()) return std::nullopt;

  // one column per pair (i, j), one row per monomial seen in any product
  std::map<MonoKey, std::size_t> row_of;
  row_of.emplace(MonoKey{0, 0, 0}, 0);
  std::vector<std::vector<std::pair<MonoKey, Rational>>> columns;
  columns.reserve(left.size() * right.size());
  for (auto& a : left) {
    for (auto& b : right) {
      auto monos = view.multiply(a, b).monomials();
      std::vector<std::pair<MonoKey, Rational>> col(monos.begin(), monos.end());
      for (auto& [key, c] : col) row_of.try_emplace(key, row_of.size());
      columns.push_back(std::move(col));
    }
  }
  ExactMatrix system(row_of.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (auto& [key, c] : columns[j]) system.set(row_of.at(key), j, c);
  std::vector<Rational> rhs(row_of.size(), Rational(0));
  rhs[row_of.at(MonoKey{0, 0, 0})] = Rational(1);

  auto solution = system.solve(rhs);
  if (!solution) return std::nullopt;
  Witness w;
  for (std::size_t j = 0; j < solution->size(); ++j) {
    const Rational& c = (*solution)[j];
    if (c.is_zero()) continue;
    w.terms.push_back({left[j / right.size()], right[j % right.size()], c});
  }
  if (!w.check()) throw std::logic_error("witness_search: solver returned a non-witness");
  return w;
}

Witness witness_from_tensor(const Tensor2& t) {
  Witness w;
  for (auto& [left, right] : t.pairs())
    if (!left.is_zero() && !right.is_zero()) w.terms.push_back({left, right, Rational(1)});
  return w;
}

Witness compose_witnesses(const GradedView& g_view, int index, const std::map<int, Witness>& quotient,
                          const std::map<int, Witness>& veronese, int g) {
  const AmbAlgebra& alg = g_view.algebra();
  if (g == 0) return Witness{{{alg.one(), alg.one(), Rational(1)}}};
  if (index < 1) throw std::invalid_argument("compose_witnesses needs index >= 1");
  int h = ((g % index) + index) % index;
  auto qit = quotient.find(h);
  if (qit == quotient.end())
    throw std::invalid_argument("missing quotient witness for class " + std::to_string(h) + " mod " +
                                std::to_string(index));
  Witness out;
  for (auto& outer : qit->second.terms) {
    for (auto& [d, a_part] : g_view.split(outer.a)) {
      int shift = d - g;
      if (shift % index != 0)
        throw std::invalid_argument("quotient witness has a leg of degree " + std::to_string(d) +
                                    " outside the class of " + std::to_string(g));
      int corrector = -(shift / index);
      const Witness* inner = nullptr;
      Witness trivial{{{alg.one(), alg.one(), Rational(1)}}};
      if (auto vit = veronese.find(corrector); vit != veronese.end()) inner = &vit->second;
      else if (corrector == 0) inner = &trivial;
      else
        throw std::invalid_argument("missing Veronese witness for K-degree " + std::to_string(corrector));
      for (auto& t : inner->terms) out.terms.push_back({a_part * t.a, t.b * outer.b, outer.c * t.c});
    }
  }
  return out;
}

}  // namespace gwa
