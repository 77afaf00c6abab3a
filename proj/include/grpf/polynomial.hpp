#pragma once

#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "grpf/common.hpp"

namespace grpf {

/// Sparse multivariate polynomial over a field policy (PrimeField, RationalField).
template <class Field>
class Polynomial {
 public:
  using Scalar = typename Field::value_type;
  using Monomial = std::vector<int>;

  Polynomial(const Field& f, int nvars) : field_(f), nvars_(nvars) {}

  static Polynomial constant(const Field& f, int nvars, const Scalar& c) {
    Polynomial p(f, nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static Polynomial variable(const Field& f, int nvars, int index) {
    Polynomial p(f, nvars);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index)] = 1;
    p.add_term(std::move(m), f.one());
    return p;
  }

  const Field& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Monomial m, const Scalar& c) {
    if (field_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.field_, a.nvars_);
    Monomial m(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, a.field_.mul(ca, cb));
      }
    return r;
  }

  Polynomial scaled(const Scalar& s) const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, field_.mul(c, s));
    return r;
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
  }

  bool is_homogeneous() const {
    const int d = total_degree();
    for (const auto& [m, c] : terms_)
      if (degree_of(m) != d) return false;
    return true;
  }

  Scalar evaluate(std::span<const Scalar> x) const {
    Scalar acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t = field_.mul(t, x[i]);
      acc = field_.add(acc, t);
    }
    return acc;
  }

  Polynomial derivative(int var) const {
    Polynomial r(field_, nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Monomial mm = m;
      --mm[v];
      r.add_term(std::move(mm), field_.mul(c, field_.from_int(static_cast<long long>(m[v]))));
    }
    return r;
  }

  /// Coefficients (ascending powers of s) of this polynomial along x = a + s b.
  std::vector<Scalar> restrict_to_line(std::span<const Scalar> a, std::span<const Scalar> b) const {
    std::vector<Scalar> out(static_cast<std::size_t>(std::max(total_degree(), 0) + 1), field_.zero());
    for (const auto& [m, c] : terms_) {
      std::vector<Scalar> prod{c};
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) {
          std::vector<Scalar> next(prod.size() + 1, field_.zero());
          for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j] = field_.add(next[j], field_.mul(prod[j], a[i]));
            next[j + 1] = field_.add(next[j + 1], field_.mul(prod[j], b[i]));
          }
          prod = std::move(next);
        }
      for (std::size_t j = 0; j < prod.size(); ++j) out[j] = field_.add(out[j], prod[j]);
    }
    return out;
  }

  std::string str(const std::string& var = "u") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest monomials first, deterministic
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      os << (first ? "" : " + ");
      const bool constant = degree_of(m) == 0;
      bool sep = false;
      if (constant || c != field_.one()) {
        os << field_.str(c);
        sep = true;
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << (sep ? "*" : "") << var << (i + 1);
        if (m[i] > 1) os << '^' << m[i];
        sep = true;
      }
      first = false;
    }
    return os.str();
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  static int degree_of(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }

  Field field_;
  int nvars_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace grpf
