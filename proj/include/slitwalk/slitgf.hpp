#pragma once

// Generating functions for walks avoiding the half-line H = {(k, 0) : k <= 0}:
// complete generating function, bridges, sections by ordinate, endpoint
// series, other starting points on the x-axis, loops and visit counts.

#include <vector>

#include "slitwalk/factorize.hpp"
#include "slitwalk/model.hpp"

namespace slitwalk {

// Series shared by every query on one model at one truncation order.
// Immutable after construction.
class SlitContext {
 public:
  SlitContext(StepSet model, int order);

  const StepSet& model() const { return model_; }
  int order() const { return order_; }
  const KernelPoly& kernel_poly() const { return kp_; }
  const TSeries<BigRat>& delta() const { return delta_; }
  const CanonicalFactors& factors() const { return factors_; }
  // Root of the kernel in y with Y = O(t).
  const TSeries<BigRat>& Y() const { return Y_; }
  const TSeries<BigRat>& sqrt_Delta() const { return sqrtDelta_; }
  // sqrt(D * DeltaBar(1/x))
  const TSeries<BigRat>& sqrt_D_DeltaBar() const { return sqrtDDeltaBar_; }
  // S_0(x) = 1 / sqrt(Delta(x)): walks ending on the x-axis.
  const TSeries<BigRat>& S0() const { return S0_; }
  // sqrt(D), scalar series.
  const TSeries<BigRat>& sqrt_D() const { return sqrtD_; }
  TSeries<BigRat> kernel() const { return build_kernel(model_, order_); }

 private:
  StepSet model_;
  int order_;
  KernelPoly kp_;
  TSeries<BigRat> delta_;
  CanonicalFactors factors_;
  TSeries<BigRat> Y_;
  TSeries<BigRat> sqrtDelta_;
  TSeries<BigRat> sqrtDDeltaBar_;
  TSeries<BigRat> S0_;
  TSeries<BigRat> sqrtD_;
};

// Solves Y = t A0 Y + t A1 (1 + Y^2) order by order and checks
// Y - t A0 Y - t A1 (1 + Y^2) = 0.
TSeries<BigRat> kernel_root(const StepSet& m, int order);

// S(x, y; t) = sqrt(D DeltaBar) / K(x, y), arity 2 (x, y).
TSeries<BigRat> complete_gf(const SlitContext& ctx);

// B(1/x; t) = 1 - sqrt(D DeltaBar).
TSeries<BigRat> bridges_gf(const SlitContext& ctx);

// S_j(x) = Y^j / sqrt(Delta) for j >= 0 (negative j by symmetry). Also
// evaluates the binomial form with f_j^+ and f_j^- and throws
// InternalInconsistency when the two disagree.
TSeries<BigRat> section_Sj(const SlitContext& ctx, int j);

// The polynomials f_j^+ and f_j^- in x, 1/x and t.
struct SectionPolys {
  TSeries<BigRat> plus{0, 1};
  TSeries<BigRat> minus{0, 1};
};
SectionPolys section_polys(const SlitContext& ctx, int j);

// f_j^+ / sqrt(Delta) - f_j^- sqrt(D DeltaBar), which equals (2 t A1)^j S_j.
TSeries<BigRat> section_numerator(const SlitContext& ctx, int j);

// a_{i,j}(n) for n = 0..order.
std::vector<BigRat> endpoint_series(const SlitContext& ctx, int i, int j);

// Walks starting at (-k, 0), k >= 0, that never return to H, marked by z^k.
// Arity 3 with variables (z, x, y); truncated at z^zorder.
TSeries<BigRat> start_negative(const SlitContext& ctx, int zorder);

// D_{i,j}(z; t): walks from some (-k, 0) to (i, j) that never return to H,
// marked by z^k. The x^i y^j slice of start_negative, arity 1 in z.
TSeries<BigRat> ending_on_H(const SlitContext& ctx, int i, int j, int zorder);

// Walks starting at (k, 0), k > 0, avoiding H, marked by z^k. Arity 3 (z, x, y).
TSeries<BigRat> start_positive(const SlitContext& ctx, int zorder);

// S^{[k]}(x, y; t), the z^k slice of start_positive, arity 2.
TSeries<BigRat> start_at(const SlitContext& ctx, int k);

// L_k(t) for k = 1..K (element k-1), scalar series.
std::vector<TSeries<BigRat>> loops_gf(const SlitContext& ctx, int K);

struct VisitSeries {
  TSeries<BigRat> visiting{0, 1};      // V_k(1, 1; t, 1)
  TSeries<BigRat> visit_total{0, 1};   // dV_k/dv at v = 1
};

// Walks from the origin visiting (k, 0), k > 0.
VisitSeries visits_gf(const SlitContext& ctx, int k);

}  // namespace slitwalk
