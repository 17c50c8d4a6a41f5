#pragma once

// Positive-part extraction of U/A for a polynomial A with known roots, by
// iterated Taylor remainders. Works over any exact field the series live in.

#include <string>
#include <vector>

#include "slitwalk/fps.hpp"
#include "slitwalk/slitgf.hpp"

namespace slitwalk {

template <class F>
struct RootSpec {
  F root;
  int multiplicity = 1;
};

namespace detail {

template <class F>
Laurent<F> binomial_power(const F& alpha, int k) {
  // (x - alpha)^k
  Laurent<F> out = Laurent<F>::constant(F(1), 1);
  const Laurent<F> lin = Laurent<F>::from_terms({{{1, 0, 0}, F(1)}, {{0, 0, 0}, -alpha}}, 1);
  for (int i = 0; i < k; ++i) out = out * lin;
  return out;
}

// k-th Taylor coefficient P^(k)(alpha)/k! of a Laurent polynomial.
template <class F>
F taylor_coefficient(const Laurent<F>& p, const F& alpha, int k) {
  F acc(0);
  for (const auto& [e, c] : p.terms()) {
    const int n = e[0];
    // generalized binomial n choose k
    BigRat binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * BigRat(n - i) / BigRat(i + 1);
    if (sgn(binom) == 0) continue;
    acc += c * F(binom) * Laurent<F>::power(alpha, n - k);
  }
  return acc;
}

// Divides a Laurent polynomial known to vanish to order m at alpha.
template <class F>
Laurent<F> divide_by_root(const Laurent<F>& r, const F& alpha, int m) {
  if (r.is_zero()) return r;
  const int lo = std::min(0, *r.min_exponent(0));
  // q = x^{-lo} r is a polynomial; synthetic division by (x - alpha), m times.
  const int hi = *r.max_exponent(0) - lo;
  std::vector<F> q(static_cast<std::size_t>(hi) + 1, F(0));
  for (const auto& [e, c] : r.terms()) q[e[0] - lo] = c;
  for (int step = 0; step < m; ++step) {
    const int deg = static_cast<int>(q.size()) - 1;
    if (deg < 1) {
      if (!field_is_zero(q[0])) {
        throw InternalInconsistency("Taylor remainder is not divisible by (x - alpha)");
      }
      q.assign(1, F(0));
      break;
    }
    std::vector<F> quot(static_cast<std::size_t>(deg), F(0));
    F carry(0);
    for (int i = deg; i >= 1; --i) {
      carry = q[i] + carry * alpha;
      quot[i - 1] = carry;
    }
    const F rem = q[0] + carry * alpha;
    if (!field_is_zero(rem)) {
      throw InternalInconsistency("Taylor remainder is not divisible by (x - alpha)");
    }
    q = std::move(quot);
  }
  Laurent<F> out(1);
  for (std::size_t i = 0; i < q.size(); ++i) out.add_term({static_cast<int>(i) + lo, 0, 0}, q[i]);
  return out;
}

}  // namespace detail

// T_{alpha,m}(U) = (U - sum_{k<m} U^(k)(alpha) (x-alpha)^k / k!) / (x - alpha)^m,
// coefficientwise in t. U must be univariate in x.
template <class F>
TSeries<F> taylor_op(const TSeries<F>& U, const F& alpha, int m) {
  if (U.arity() != 1) throw ArityMismatch("taylor_op: series must be univariate in x");
  if (m < 1) throw PreconditionError("taylor_op: multiplicity must be >= 1");
  const bool at_zero = field_is_zero(alpha);
  std::vector<Laurent<F>> powers;
  for (int k = 0; k < m; ++k) powers.push_back(detail::binomial_power(alpha, k));
  return U.map_coeffs([&](const Laurent<F>& p) {
    if (at_zero) {
      auto lo = p.min_exponent(0);
      if (lo && *lo < 0) {
        throw PreconditionError("taylor_op: alpha = 0 needs nonnegative exponents in x");
      }
    }
    Laurent<F> r = p;
    for (int k = 0; k < m; ++k) {
      F tk = detail::taylor_coefficient(p, alpha, k);
      if (!field_is_zero(tk)) r -= powers[k] * tk;
    }
    return detail::divide_by_root(r, alpha, m);
  });
}

// The polynomial leading * prod (x - alpha_i)^{m_i}.
template <class F>
Laurent<F> polynomial_from_roots(const std::vector<RootSpec<F>>& roots, const F& leading) {
  Laurent<F> a = Laurent<F>::constant(leading, 1);
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw PreconditionError("root multiplicity must be >= 1");
    a = a * detail::binomial_power(r.root, r.multiplicity);
  }
  return a;
}

// W^+ where U = t^t_power * A(x) * W and A = leading * prod (x - alpha_i)^{m_i}.
// Checks that U really is divisible; the result has order U.order() - t_power.
template <class F>
TSeries<F> positive_part_via_roots(const TSeries<F>& U, const std::vector<RootSpec<F>>& roots,
                                   const F& leading, int t_power = 0) {
  if (field_is_zero(leading)) throw DivisionByZero("positive_part_via_roots: zero leading coefficient");
  TSeries<F> full = U * (F(1) / leading);
  TSeries<F> pos = x_split(U).positive * (F(1) / leading);
  for (const auto& r : roots) {
    pos = taylor_op(pos, r.root, r.multiplicity);
    if (!field_is_zero(r.root)) full = taylor_op(full, r.root, r.multiplicity);
  }
  // A * (U / A via Taylor) recovers U only when every root is a genuine zero of U.
  const Laurent<F> A = polynomial_from_roots(roots, leading);
  bool has_zero_root = false;
  for (const auto& r : roots) has_zero_root = has_zero_root || field_is_zero(r.root);
  if (!has_zero_root && ts_scale(full, A) != U) {
    throw InternalInconsistency("positive_part_via_roots: U is not divisible by A(x)");
  }
  return ts_divide_by_t(pos, t_power);
}

// Reindexing between x and X = x^2 for series supported on even x-exponents.
template <class F>
TSeries<F> even_to_square_variable(const TSeries<F>& a) {
  return a.map_coeffs([](const Laurent<F>& c) {
    Laurent<F> out(c.arity());
    for (const auto& [e, q] : c.terms()) {
      if (e[0] % 2 != 0) throw PreconditionError("series has an odd power of x");
      out.add_term({e[0] / 2, e[1], e[2]}, q);
    }
    return out;
  });
}

template <class F>
TSeries<F> square_variable_to_even(const TSeries<F>& a) {
  return a.map_coeffs([](const Laurent<F>& c) {
    Laurent<F> out(c.arity());
    for (const auto& [e, q] : c.terms()) out.add_term({2 * e[0], e[1], e[2]}, q);
    return out;
  });
}

template <class F>
TSeries<F> shift_x(const TSeries<F>& a, int k) {
  return a.map_coeffs([k](const Laurent<F>& c) { return c.shifted({k, 0, 0}); });
}

// Result of one worked extraction: the extracted positive part next to the
// plain filter, both over Q(i).
struct ExtractionCheck {
  std::string label;
  TSeries<GaussRat> extracted{0, 1};
  TSeries<GaussRat> filtered{0, 1};
  bool matches() const { return extracted == filtered; }
};

// Diagonal lattice, S_1^+ via X = x^2 with root -1 of multiplicity 1. Result
// known mod t^(order+1).
ExtractionCheck diagonal_S1_positive(int order);
// Diagonal lattice, S_2^+ via X = x^2 with root -1 of multiplicity 2.
ExtractionCheck diagonal_S2_positive(int order);

// S_j^+ for any model with U_j = x^{mj}(f_j^+ / sqrt(Delta) - f_j^- sqrt(D DeltaBar))
// and A(x) = x^m A_1(x). The roots of A over Q(i) are supplied by the caller
// and checked against A. Requires ctx.order() >= order + j.
ExtractionCheck section_positive_via_roots(const SlitContext& ctx, int j,
                                           const std::vector<RootSpec<GaussRat>>& roots_of_A,
                                           int order);

// Roots of x^m A_1(x) over Q(i) for the preset models (diagonal: +-i; square,
// triangular: none). Throws PreconditionError for other models.
std::vector<RootSpec<GaussRat>> preset_roots(const StepSet& m);

}  // namespace slitwalk
