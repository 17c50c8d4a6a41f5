#include "slitwalk/extract.hpp"

namespace slitwalk {

namespace {

using TQ = TSeries<GaussRat>;

TQ lift(const TSeries<BigRat>& a) { return to_quad<-1>(a); }

ExtractionCheck finish(std::string label, TQ extracted, const TSeries<BigRat>& Sj, int order) {
  ExtractionCheck out;
  out.label = std::move(label);
  out.extracted = extracted.truncated(order);
  out.filtered = lift(x_split(Sj).positive).truncated(order);
  return out;
}

// x^m A_1(x) with the smallest m making it a polynomial.
LaurentPoly normalized_A(const StepSet& m, int& shift) {
  const LaurentPoly A1 = kernel_poly(m).A1;
  if (A1.is_zero()) throw PreconditionError("model has no vertical steps");
  shift = -*A1.min_exponent(0);
  return A1.shifted({shift, 0, 0});
}

}  // namespace

ExtractionCheck diagonal_S1_positive(int order) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  SlitContext ctx(StepSet::diagonal(), order + 1);
  // S_1 / x = U / (2t(1 + X)), U = 1/sqrt(Delta) - sqrt(D DeltaBar).
  TSeries<BigRat> U = ctx.S0() - ctx.sqrt_D_DeltaBar();
  TQ UX = lift(even_to_square_variable(U));
  TQ W = positive_part_via_roots<GaussRat>(UX, {RootSpec<GaussRat>{GaussRat(-1), 1}}, GaussRat(2), 1);
  TQ S1plus = shift_x(square_variable_to_even(W), 1);
  return finish("diagonal S_1^+", S1plus, section_Sj(ctx, 1), order);
}

ExtractionCheck diagonal_S2_positive(int order) {
  if (order < 0) throw PreconditionError("order must be >= 0");
  SlitContext ctx(StepSet::diagonal(), order + 2);
  const int N = ctx.order();
  // U = (x^2 - 2t^2(1+x^2)^2)/sqrt(Delta) - x^2 sqrt(D DeltaBar); S_2 = U / (2t^2 (1+X)^2).
  TSeries<BigRat> P(N, 1);
  P.at(0) = LaurentPoly::monomial(1, {2, 0, 0}, 1);
  if (N >= 2) {
    P.at(2) = LaurentPoly::from_terms({{{0, 0, 0}, -2}, {{2, 0, 0}, -4}, {{4, 0, 0}, -2}}, 1);
  }
  TSeries<BigRat> U = ts_mul(P, ctx.S0()) - shift_x(ctx.sqrt_D_DeltaBar(), 2);
  TQ UX = lift(even_to_square_variable(U));
  TQ W = positive_part_via_roots<GaussRat>(UX, {RootSpec<GaussRat>{GaussRat(-1), 2}}, GaussRat(2), 2);
  return finish("diagonal S_2^+", square_variable_to_even(W), section_Sj(ctx, 2), order);
}

ExtractionCheck section_positive_via_roots(const SlitContext& ctx, int j,
                                           const std::vector<RootSpec<GaussRat>>& roots_of_A,
                                           int order) {
  if (j < 0) throw PreconditionError("j must be >= 0");
  if (ctx.order() < order + j) throw TruncationError("context order too small for requested order");
  int shift = 0;
  const LaurentPoly A = normalized_A(ctx.model(), shift);
  const GaussRat lead(A.terms().rbegin()->second);
  if (polynomial_from_roots(roots_of_A, lead) != to_quad_laurent<-1>(A)) {
    throw PreconditionError("supplied roots do not factor x^m A_1(x)");
  }
  std::vector<RootSpec<GaussRat>> roots;
  if (j > 0) {
    for (const auto& r : roots_of_A) roots.push_back({r.root, r.multiplicity * j});
  }
  GaussRat leading(1);
  for (int k = 0; k < j; ++k) leading *= lead * GaussRat(2);
  TQ U = lift(shift_x(section_numerator(ctx, j), shift * j));
  TQ W = positive_part_via_roots<GaussRat>(U, roots, leading, j);
  return finish(ctx.model().name() + " S_" + std::to_string(j) + "^+", W, section_Sj(ctx, j),
                order);
}

std::vector<RootSpec<GaussRat>> preset_roots(const StepSet& m) {
  int shift = 0;
  const LaurentPoly A = normalized_A(m, shift);
  if (A.is_constant()) return {};
  const LaurentPoly xsq1 = LaurentPoly::from_terms({{{0, 0, 0}, 1}, {{2, 0, 0}, 1}}, 1);
  if (A == xsq1) return {RootSpec<GaussRat>{GaussRat(0, 1), 1}, RootSpec<GaussRat>{GaussRat(0, -1), 1}};
  throw PreconditionError("roots of x^m A_1(x) are not known for model '" + m.name() + "'");
}

}  // namespace slitwalk
