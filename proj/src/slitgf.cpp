#include "slitwalk/slitgf.hpp"

#include <cstdlib>
#include <string>

namespace slitwalk {

namespace {

using TS = TSeries<BigRat>;

void require_reverse_symmetric(const SlitContext& ctx, const char* op) {
  if (!ctx.model().reverse_symmetric()) {
    throw NotReverseSymmetric(std::string(op) + ": model '" + ctx.model().name() +
                              "' is not symmetric under reversal of steps");
  }
}

// Polynomial in t (known exactly) as a series of the given order.
TS poly_series(std::vector<LaurentPoly> coeffs, int order) {
  return TS::from_coeffs(std::move(coeffs), order, 1);
}

// Constant-in-t series with the given t^0 coefficient.
TS constant_series(const Laurent<BigRat>& c, int order) {
  TS s(order, c.arity());
  s.at(0) = c;
  return s;
}

}  // namespace

TSeries<BigRat> kernel_root(const StepSet& m, int order) {
  const KernelPoly kp = kernel_poly(m);
  TS Y(order, 1);
  for (int n = 1; n <= order; ++n) {
    LaurentPoly c = kp.A0 * Y[n - 1];
    if (n == 1) c += kp.A1;
    LaurentPoly sq(1);
    for (int k = 1; k <= n - 2; ++k) {
      if (!Y[k].is_zero() && !Y[n - 1 - k].is_zero()) sq += Y[k] * Y[n - 1 - k];
    }
    c += kp.A1 * sq;
    Y.at(n) = std::move(c);
  }
  // Y K(x, Y) = Y - t A0 Y - t A1 (1 + Y^2) must vanish.
  TS tA0 = poly_series({LaurentPoly(1), kp.A0}, order);
  TS tA1 = poly_series({LaurentPoly(1), kp.A1}, order);
  TS residual = Y - ts_mul(tA0, Y) - ts_mul(tA1, TS::one(order, 1) + ts_mul(Y, Y));
  if (!residual.is_zero()) throw InternalInconsistency("kernel root does not cancel the kernel");
  return Y;
}

SlitContext::SlitContext(StepSet model, int order)
    : model_(std::move(model)),
      order_(order),
      kp_(slitwalk::kernel_poly(model_)),
      delta_(build_delta(model_, order)),
      factors_(canonical_factorize(delta_)),
      Y_(kernel_root(model_, order)),
      sqrtDelta_(ts_sqrt(factors_.Delta)),
      sqrtDDeltaBar_(ts_sqrt(ts_mul(factors_.D, factors_.DeltaBar))),
      S0_(ts_recip(sqrtDelta_)),
      sqrtD_(ts_sqrt(factors_.D)) {}

TSeries<BigRat> complete_gf(const SlitContext& ctx) {
  TS numer = ts_remap(ctx.sqrt_D_DeltaBar(), 2, {0, 1, 2});
  return ts_mul(numer, ts_recip(ctx.kernel()));
}

TSeries<BigRat> bridges_gf(const SlitContext& ctx) {
  return TS::one(ctx.order(), 1) - ctx.sqrt_D_DeltaBar();
}

SectionPolys section_polys(const SlitContext& ctx, int j) {
  if (j < 0) throw PreconditionError("section_polys: j must be >= 0");
  const int N = ctx.order();
  TS oneMinusTA0 = poly_series({LaurentPoly::constant(1, 1), -ctx.kernel_poly().A0}, N);
  SectionPolys f{TS(N, 1), TS(N, 1)};
  for (int k = 0; 2 * k <= j; ++k) {
    TS term = ts_mul(ts_pow(ctx.delta(), k), ts_pow(oneMinusTA0, j - 2 * k));
    f.plus += term * BigRat(binomial(j, 2 * k));
  }
  for (int k = 0; 2 * k + 1 <= j; ++k) {
    TS term = ts_mul(ts_pow(ctx.delta(), k), ts_pow(oneMinusTA0, j - 2 * k - 1));
    f.minus += term * BigRat(binomial(j, 2 * k + 1));
  }
  return f;
}

TSeries<BigRat> section_numerator(const SlitContext& ctx, int j) {
  SectionPolys f = section_polys(ctx, j);
  return ts_mul(f.plus, ctx.S0()) - ts_mul(f.minus, ctx.sqrt_D_DeltaBar());
}

TSeries<BigRat> section_Sj(const SlitContext& ctx, int j) {
  j = std::abs(j);
  TS Sj = ts_mul(ts_pow(ctx.Y(), j), ctx.S0());
  // (2 t A1)^j S_j against the binomial form.
  LaurentPoly twoA1j = LaurentPoly::constant(1, 1);
  for (int k = 0; k < j; ++k) twoA1j *= ctx.kernel_poly().A1 * BigRat(2);
  TS lhs = ts_shift_up(ts_scale(Sj, twoA1j), j);
  if (lhs != section_numerator(ctx, j)) {
    throw InternalInconsistency("section S_" + std::to_string(j) +
                                " disagrees with its binomial expression");
  }
  return Sj;
}

std::vector<BigRat> endpoint_series(const SlitContext& ctx, int i, int j) {
  TS Sj = section_Sj(ctx, j);
  std::vector<BigRat> out;
  out.reserve(ctx.order() + 1);
  for (int n = 0; n <= ctx.order(); ++n) out.push_back(Sj[n].coeff({i, 0, 0}));
  return out;
}

TSeries<BigRat> start_negative(const SlitContext& ctx, int zorder) {
  require_reverse_symmetric(ctx, "start_negative");
  if (zorder < 0) throw PreconditionError("start_negative: zorder must be >= 0");
  const int N = ctx.order();
  // sqrt(Delta(z)) / (1 - z/x), variables (z, x, y).
  Laurent<BigRat> geom(3);
  for (int m = 0; m <= zorder; ++m) geom.add_term({m, -m, 0}, 1);
  TS sqrtDeltaZ = truncate_in(ts_remap(ctx.sqrt_Delta(), 3, {0, 1, 2}), 0, zorder);
  TS prefactor = truncate_in(ts_mul(sqrtDeltaZ, constant_series(geom, N)), 0, zorder);
  TS S = ts_remap(complete_gf(ctx), 3, {1, 2, 0});
  return ts_mul(prefactor, S);
}

TSeries<BigRat> ending_on_H(const SlitContext& ctx, int i, int j, int zorder) {
  return start_negative(ctx, zorder).map_coeffs(
      [&](const Laurent<BigRat>& c) {
        Laurent<BigRat> out(1);
        for (const auto& [e, q] : c.terms()) {
          if (e[1] == i && e[2] == j) out.add_term({e[0], 0, 0}, q);
        }
        return out;
      },
      1);
}

TSeries<BigRat> start_positive(const SlitContext& ctx, int zorder) {
  require_reverse_symmetric(ctx, "start_positive");
  if (zorder < 0) throw PreconditionError("start_positive: zorder must be >= 0");
  const int N = ctx.order();
  // z x / (1 - z x) * S_0(z) / sqrt(D), variables (z, x, y).
  Laurent<BigRat> geom(3);
  for (int m = 1; m <= zorder; ++m) geom.add_term({m, m, 0}, 1);
  TS S0z = truncate_in(ts_remap(ctx.S0(), 3, {0, 1, 2}), 0, zorder);
  TS prefactor = truncate_in(ts_mul(S0z, constant_series(geom, N)), 0, zorder);
  TS invSqrtD = ts_remap(ts_recip(ctx.sqrt_D()), 3, {0, 1, 2});
  TS S = ts_remap(complete_gf(ctx), 3, {1, 2, 0});
  return ts_mul(ts_mul(prefactor, invSqrtD), S);
}

TSeries<BigRat> start_at(const SlitContext& ctx, int k) {
  if (k <= 0) throw PreconditionError("start_at: k must be > 0");
  TS all = start_positive(ctx, k);
  return all.map_coeffs(
      [k](const Laurent<BigRat>& c) {
        Laurent<BigRat> out(2);
        for (const auto& [e, q] : c.terms()) {
          if (e[0] == k) out.add_term({e[1], e[2], 0}, q);
        }
        return out;
      },
      2);
}

std::vector<TSeries<BigRat>> loops_gf(const SlitContext& ctx, int K) {
  require_reverse_symmetric(ctx, "loops_gf");
  const int N = ctx.order();
  // L(z) = z / ((1 - z) sqrt(D)) * sum_k S_{k,0}^2 z^k, read off coefficientwise.
  const TS invSqrtD = ts_recip(ctx.sqrt_D());
  std::vector<TS> loops;
  TS partial(N, 1);
  for (int k = 1; k <= K; ++k) {
    TS s = monomial_slice(ctx.S0(), {k - 1, 0, 0});
    partial += ts_mul(s, s);
    loops.push_back(ts_mul(partial, invSqrtD));
  }
  return loops;
}

VisitSeries visits_gf(const SlitContext& ctx, int k) {
  require_reverse_symmetric(ctx, "visits_gf");
  if (k <= 0) throw PreconditionError("visits_gf: k must be > 0");
  const int N = ctx.order();
  const TS one = TS::one(N, 1);
  const TS Sk0 = monomial_slice(ctx.S0(), {k, 0, 0});
  const TS fromK = evaluate_at_ones(start_at(ctx, k));
  const TS L = loops_gf(ctx, k).back();
  const TS primitiveLoops = one - ts_recip(L);
  const TS L2 = ts_mul(L, L);
  const TS head = ts_mul(Sk0, fromK);
  // v S_{k,0} S^{[k]} / (L^2 (1 - v P)) and its v-derivative, both at v = 1.
  const TS oneMinusP = one - primitiveLoops;
  VisitSeries out;
  out.visiting = ts_mul(head, ts_recip(ts_mul(L2, oneMinusP)));
  out.visit_total = ts_mul(head, ts_recip(ts_mul(L2, ts_mul(oneMinusP, oneMinusP))));
  return out;
}

}  // namespace slitwalk
