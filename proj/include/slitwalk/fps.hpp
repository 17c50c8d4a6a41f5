#pragma once

// Sparse Laurent polynomials in up to three variables and power series in t
// truncated at a fixed order, over an exact coefficient field.

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slitwalk/errors.hpp"
#include "slitwalk/exactnum.hpp"

namespace slitwalk {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<BigRat> {
  static bool is_zero(const BigRat& x) { return sgn(x) == 0; }
  static BigRat from_rat(const BigRat& q) { return q; }
};

template <int D>
struct FieldTraits<QuadElem<D>> {
  static bool is_zero(const QuadElem<D>& x) { return x.is_zero(); }
  static QuadElem<D> from_rat(const BigRat& q) { return QuadElem<D>(q); }
};

template <class F>
bool field_is_zero(const F& x) {
  return FieldTraits<F>::is_zero(x);
}

// Exponent vector; slots at or beyond the arity are always zero.
using Exponents = std::array<int, 3>;
inline constexpr int kMaxArity = 3;

template <class F>
class Laurent {
 public:
  using Terms = std::map<Exponents, F>;

  explicit Laurent(int arity = 1) : arity_(arity) {
    if (arity < 1 || arity > kMaxArity) throw PreconditionError("Laurent arity must be 1..3");
  }

  static Laurent constant(const F& c, int arity) {
    Laurent p(arity);
    p.add_term({0, 0, 0}, c);
    return p;
  }

  static Laurent monomial(const F& c, const Exponents& e, int arity) {
    Laurent p(arity);
    p.add_term(e, c);
    return p;
  }

  static Laurent from_terms(std::initializer_list<std::pair<Exponents, F>> terms, int arity) {
    Laurent p(arity);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  F coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }
  F constant_term() const { return coeff({0, 0, 0}); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
  }

  void add_term(const Exponents& e, const F& c) {
    check_exponents(e);
    if (field_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (field_is_zero(it->second)) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const F& s) {
    if (field_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  Laurent& operator/=(const F& s) {
    if (field_is_zero(s)) throw DivisionByZero("Laurent polynomial divided by zero");
    for (auto& [e, c] : terms_) c /= s;
    return *this;
  }

  friend Laurent operator+(Laurent l, const Laurent& r) { return l += r; }
  friend Laurent operator-(Laurent l, const Laurent& r) { return l -= r; }
  friend Laurent operator-(Laurent l) {
    for (auto& [e, c] : l.terms_) c = -c;
    return l;
  }
  friend Laurent operator*(Laurent l, const F& s) { return l *= s; }
  friend Laurent operator*(const F& s, Laurent l) { return l *= s; }
  friend Laurent operator/(Laurent l, const F& s) { return l /= s; }

  friend Laurent operator*(const Laurent& l, const Laurent& r) {
    l.check_arity(r);
    Laurent out(l.arity_);
    if (l.is_zero() || r.is_zero()) return out;
    for (const auto& [el, cl] : l.terms_) {
      for (const auto& [er, cr] : r.terms_) {
        Exponents e{el[0] + er[0], el[1] + er[1], el[2] + er[2]};
        auto [it, inserted] = out.terms_.try_emplace(e, cl);
        if (inserted) {
          it->second *= cr;
        } else {
          it->second += cl * cr;
        }
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return field_is_zero(kv.second); });
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& l, const Laurent& r) {
    return l.arity_ == r.arity_ && l.terms_ == r.terms_;
  }
  friend bool operator!=(const Laurent& l, const Laurent& r) { return !(l == r); }

  // Smallest / largest exponent of one variable; nullopt for the zero polynomial.
  std::optional<int> min_exponent(int var) const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_) m = m ? std::min(*m, e[var]) : e[var];
    return m;
  }
  std::optional<int> max_exponent(int var) const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_) m = m ? std::max(*m, e[var]) : e[var];
    return m;
  }

  template <class Pred>
  Laurent filter(Pred keep) const {
    Laurent out(arity_);
    for (const auto& [e, c] : terms_) {
      if (keep(e)) out.terms_.emplace(e, c);
    }
    return out;
  }

  // Multiply by the monomial with exponent vector delta.
  Laurent shifted(const Exponents& delta) const {
    Laurent out(arity_);
    for (const auto& [e, c] : terms_) {
      out.add_term({e[0] + delta[0], e[1] + delta[1], e[2] + delta[2]}, c);
    }
    return out;
  }

  // Re-embed into a polynomial ring of another arity: variable v of this
  // polynomial becomes variable slots[v] of the result.
  Laurent remapped(int new_arity, const std::array<int, kMaxArity>& slots) const {
    Laurent out(new_arity);
    for (const auto& [e, c] : terms_) {
      Exponents ne{0, 0, 0};
      for (int v = 0; v < arity_; ++v) ne[slots[v]] += e[v];
      out.add_term(ne, c);
    }
    return out;
  }

  // Sum of all coefficients (every variable set to 1).
  F sum_coefficients() const {
    F s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Substitute the value x for variable var; x must be invertible when
  // negative exponents occur.
  Laurent substituted(int var, const F& x) const {
    Laurent out(arity_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne[var] = 0;
      out.add_term(ne, c * power(x, e[var]));
    }
    return out;
  }

  static F power(const F& x, int k) {
    if (k < 0) {
      if (field_is_zero(x)) throw DivisionByZero("negative power of zero");
      return power(F(1) / x, -k);
    }
    F r(1);
    F b = x;
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

 private:
  void check_arity(const Laurent& o) const {
    if (o.arity_ != arity_) {
      throw ArityMismatch("Laurent polynomials of arity " + std::to_string(arity_) + " and " +
                          std::to_string(o.arity_));
    }
  }
  void check_exponents(const Exponents& e) const {
    for (int v = arity_; v < kMaxArity; ++v) {
      if (e[v] != 0) throw ArityMismatch("exponent in unused variable slot");
    }
  }

  int arity_;
  Terms terms_;
};

using LaurentPoly = Laurent<BigRat>;

// Power series in t known modulo t^(order+1), coefficients Laurent polynomials.
template <class F>
class TSeries {
 public:
  using Coeff = Laurent<F>;

  TSeries(int order, int arity) : arity_(arity), coeffs_(checked_len(order), Coeff(arity)) {}

  static TSeries one(int order, int arity) {
    TSeries s(order, arity);
    s.coeffs_[0] = Coeff::constant(F(1), arity);
    return s;
  }

  // Coefficients beyond order are dropped; missing ones are zero.
  static TSeries from_coeffs(std::vector<Coeff> coeffs, int order, int arity) {
    TSeries s(order, arity);
    for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= order; ++n) {
      if (coeffs[n].arity() != arity) throw ArityMismatch("coefficient arity differs from series");
      s.coeffs_[n] = std::move(coeffs[n]);
    }
    return s;
  }

  // Scalar series from a coefficient sequence.
  static TSeries from_scalars(const std::vector<F>& c, int order, int arity = 1) {
    TSeries s(order, arity);
    for (std::size_t n = 0; n < c.size() && static_cast<int>(n) <= order; ++n) {
      s.coeffs_[n] = Coeff::constant(c[n], arity);
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int arity() const { return arity_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](int n) const { return coeffs_.at(n); }
  Coeff& at(int n) { return coeffs_.at(n); }

  TSeries truncated(int order) const {
    TSeries s(std::min(order, this->order()), arity_);
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c.is_zero(); });
  }

  template <class Fn>
  TSeries map_coeffs(Fn fn, int new_arity) const {
    TSeries s(order(), new_arity);
    for (int n = 0; n <= order(); ++n) s.coeffs_[n] = fn(coeffs_[n]);
    return s;
  }
  template <class Fn>
  TSeries map_coeffs(Fn fn) const {
    return map_coeffs(fn, arity_);
  }

  TSeries& operator+=(const TSeries& o) { return combine(o, +1); }
  TSeries& operator-=(const TSeries& o) { return combine(o, -1); }
  TSeries& operator*=(const F& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend TSeries operator+(TSeries l, const TSeries& r) { return l += r; }
  friend TSeries operator-(TSeries l, const TSeries& r) { return l -= r; }
  friend TSeries operator-(TSeries l) {
    for (auto& c : l.coeffs_) c = -c;
    return l;
  }
  friend TSeries operator*(TSeries l, const F& s) { return l *= s; }
  friend TSeries operator*(const F& s, TSeries l) { return l *= s; }

  // Exact equality of order, arity and every coefficient.
  friend bool operator==(const TSeries& l, const TSeries& r) {
    return l.arity_ == r.arity_ && l.coeffs_ == r.coeffs_;
  }
  friend bool operator!=(const TSeries& l, const TSeries& r) { return !(l == r); }

 private:
  static std::size_t checked_len(int order) {
    if (order < 0) throw PreconditionError("truncation order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  TSeries& combine(const TSeries& o, int sgn_) {
    if (o.arity_ != arity_) throw ArityMismatch("series arity mismatch");
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Coeff(arity_));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (sgn_ > 0) {
        coeffs_[n] += o.coeffs_[n];
      } else {
        coeffs_[n] -= o.coeffs_[n];
      }
    }
    return *this;
  }

  int arity_;
  std::vector<Coeff> coeffs_;
};

// Cauchy product, truncated at the smaller order.
template <class F>
TSeries<F> ts_mul(const TSeries<F>& a, const TSeries<F>& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("ts_mul: series arity mismatch");
  const int order = std::min(a.order(), b.order());
  TSeries<F> out(order, a.arity());
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      out.at(i + j) += a[i] * b[j];
    }
  }
  return out;
}

template <class F>
TSeries<F> operator*(const TSeries<F>& a, const TSeries<F>& b) {
  return ts_mul(a, b);
}

template <class F>
const F& scalar_constant_term(const TSeries<F>& a, const char* op) {
  static const F zero(0);
  const auto& c0 = a[0];
  if (!c0.is_constant()) {
    throw PreconditionError(std::string(op) + ": constant term in t is not a scalar");
  }
  if (c0.is_zero()) return zero;
  return c0.terms().begin()->second;
}

// Reciprocal; the t^0 coefficient must be a nonzero scalar.
template <class F>
TSeries<F> ts_recip(const TSeries<F>& a) {
  const F& a0 = scalar_constant_term(a, "ts_recip");
  if (field_is_zero(a0)) throw PreconditionError("ts_recip: non-unit constant term");
  const F inv0 = F(1) / a0;
  const int order = a.order();
  TSeries<F> b(order, a.arity());
  b.at(0) = Laurent<F>::constant(inv0, a.arity());
  for (int n = 1; n <= order; ++n) {
    Laurent<F> acc(a.arity());
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc += a[k] * b[n - k];
    }
    b.at(n) = -(acc * inv0);
  }
  return b;
}

// Principal square root; the t^0 coefficient must be exactly 1.
template <class F>
TSeries<F> ts_sqrt(const TSeries<F>& a) {
  const F& a0 = scalar_constant_term(a, "ts_sqrt");
  if (a0 != F(1)) throw PreconditionError("ts_sqrt: constant term must be 1");
  const int order = a.order();
  TSeries<F> b(order, a.arity());
  b.at(0) = Laurent<F>::constant(F(1), a.arity());
  const F half = F(1) / F(2);
  for (int n = 1; n <= order; ++n) {
    Laurent<F> acc = a[n];
    for (int k = 1; k < n; ++k) {
      if (b[k].is_zero() || b[n - k].is_zero()) continue;
      acc -= b[k] * b[n - k];
    }
    b.at(n) = acc * half;
  }
  return b;
}

// t d/dt
template <class F>
TSeries<F> ts_theta(const TSeries<F>& a) {
  TSeries<F> out(a.order(), a.arity());
  for (int n = 1; n <= a.order(); ++n) out.at(n) = a[n] * F(n);
  return out;
}

// Logarithm; constant term must be 1. Uses t L' = t a' / a, solved order by order.
template <class F>
TSeries<F> ts_log(const TSeries<F>& a) {
  const F& a0 = scalar_constant_term(a, "ts_log");
  if (a0 != F(1)) throw PreconditionError("ts_log: constant term must be 1");
  const int order = a.order();
  // n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}
  TSeries<F> L(order, a.arity());
  for (int n = 1; n <= order; ++n) {
    Laurent<F> acc = a[n] * F(n);
    for (int k = 1; k < n; ++k) {
      if (L[k].is_zero() || a[n - k].is_zero()) continue;
      acc -= (L[k] * a[n - k]) * F(k);
    }
    L.at(n) = acc / F(n);
  }
  return L;
}

// Exponential; constant term must be 0. n b_n = sum_{k=1}^n k a_k b_{n-k}.
template <class F>
TSeries<F> ts_exp(const TSeries<F>& a) {
  if (!a[0].is_zero()) throw PreconditionError("ts_exp: constant term must be 0");
  const int order = a.order();
  TSeries<F> b(order, a.arity());
  b.at(0) = Laurent<F>::constant(F(1), a.arity());
  for (int n = 1; n <= order; ++n) {
    Laurent<F> acc(a.arity());
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc += (a[k] * b[n - k]) * F(k);
    }
    b.at(n) = acc / F(n);
  }
  return b;
}

enum class LogExp { log, exp };

template <class F>
TSeries<F> ts_log_exp(const TSeries<F>& a, LogExp which) {
  return which == LogExp::log ? ts_log(a) : ts_exp(a);
}

template <class F>
TSeries<F> ts_pow(const TSeries<F>& a, int k) {
  if (k < 0) return ts_pow(ts_recip(a), -k);
  TSeries<F> r = TSeries<F>::one(a.order(), a.arity());
  TSeries<F> b = a;
  while (k > 0) {
    if (k & 1) r = ts_mul(r, b);
    k >>= 1;
    if (k > 0) b = ts_mul(b, b);
  }
  return r;
}

// Multiply by t^k (k >= 0); order is kept, the top k coefficients fall off.
template <class F>
TSeries<F> ts_shift_up(const TSeries<F>& a, int k) {
  TSeries<F> out(a.order(), a.arity());
  for (int n = k; n <= a.order(); ++n) out.at(n) = a[n - k];
  return out;
}

// Divide by t^k. The first k coefficients must vanish; the order drops by k.
template <class F>
TSeries<F> ts_divide_by_t(const TSeries<F>& a, int k) {
  if (k > a.order()) throw TruncationError("ts_divide_by_t: shift exceeds truncation order");
  for (int n = 0; n < k; ++n) {
    if (!a[n].is_zero()) {
      throw PreconditionError("ts_divide_by_t: coefficient of t^" + std::to_string(n) +
                              " is nonzero");
    }
  }
  TSeries<F> out(a.order() - k, a.arity());
  for (int n = k; n <= a.order(); ++n) out.at(n - k) = a[n];
  return out;
}

// Multiply every coefficient by the same Laurent polynomial.
template <class F>
TSeries<F> ts_scale(const TSeries<F>& a, const Laurent<F>& p) {
  return a.map_coeffs([&](const Laurent<F>& c) { return c * p; });
}

template <class F>
struct SplitParts {
  TSeries<F> positive;  // exponents >= 0 in the split variable
  TSeries<F> negative;  // exponents < 0
};

// Splits by the sign of the exponent of variable var (x by default).
template <class F>
SplitParts<F> x_split(const TSeries<F>& a, int var = 0) {
  auto pos = a.map_coeffs([&](const Laurent<F>& c) {
    return c.filter([var](const Exponents& e) { return e[var] >= 0; });
  });
  auto neg = a.map_coeffs([&](const Laurent<F>& c) {
    return c.filter([var](const Exponents& e) { return e[var] < 0; });
  });
  return {std::move(pos), std::move(neg)};
}

// Exact coefficient of x^i y^j t^n (j ignored for one-variable series).
template <class F>
F coeff(const TSeries<F>& a, int i, std::optional<int> j, int n) {
  if (n < 0 || n > a.order()) {
    throw TruncationError("coefficient of t^" + std::to_string(n) +
                          " requested from a series known to order " +
                          std::to_string(a.order()));
  }
  Exponents e{i, 0, 0};
  if (a.arity() >= 2) e[1] = j.value_or(0);
  return a[n].coeff(e);
}

// All variables set to 1; result is a scalar series (arity 1, exponent 0).
template <class F>
TSeries<F> evaluate_at_ones(const TSeries<F>& a) {
  TSeries<F> out(a.order(), 1);
  for (int n = 0; n <= a.order(); ++n) {
    out.at(n) = Laurent<F>::constant(a[n].sum_coefficients(), 1);
  }
  return out;
}

// Coefficient sequence of a scalar series.
template <class F>
std::vector<F> scalar_coefficients(const TSeries<F>& a) {
  std::vector<F> out;
  out.reserve(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) {
    if (!a[n].is_constant()) throw PreconditionError("series coefficients are not scalars");
    out.push_back(a[n].constant_term());
  }
  return out;
}

// Extract the coefficient of a monomial in the non-t variables, as a scalar series.
template <class F>
TSeries<F> monomial_slice(const TSeries<F>& a, const Exponents& e) {
  TSeries<F> out(a.order(), 1);
  for (int n = 0; n <= a.order(); ++n) out.at(n) = Laurent<F>::constant(a[n].coeff(e), 1);
  return out;
}

// Re-embed every coefficient (see Laurent::remapped).
template <class F>
TSeries<F> ts_remap(const TSeries<F>& a, int new_arity, const std::array<int, kMaxArity>& slots) {
  return a.map_coeffs([&](const Laurent<F>& c) { return c.remapped(new_arity, slots); },
                      new_arity);
}

// Drop every term whose exponent in var exceeds max_exp.
template <class F>
TSeries<F> truncate_in(const TSeries<F>& a, int var, int max_exp) {
  return a.map_coeffs([&](const Laurent<F>& c) {
    return c.filter([&](const Exponents& e) { return e[var] <= max_exp; });
  });
}

// Lift rational coefficients into a quadratic field.
template <int D>
Laurent<QuadElem<D>> to_quad_laurent(const Laurent<BigRat>& p) {
  Laurent<QuadElem<D>> c(p.arity());
  for (const auto& [e, q] : p.terms()) c.add_term(e, QuadElem<D>(q));
  return c;
}

template <int D>
TSeries<QuadElem<D>> to_quad(const TSeries<BigRat>& a) {
  return TSeries<QuadElem<D>>::from_coeffs(
      [&] {
        std::vector<Laurent<QuadElem<D>>> cs;
        for (int n = 0; n <= a.order(); ++n) cs.push_back(to_quad_laurent<D>(a[n]));
        return cs;
      }(),
      a.order(), a.arity());
}

}  // namespace slitwalk
