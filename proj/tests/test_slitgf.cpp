#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/slitgf.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;
using TS = TSeries<BigRat>;

namespace {

TS oracle_gf(const StepSet& m, int start_k, int order) {
  const auto tables = count_walks(m, start_k, order);
  TS s(order, 2);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [p, c] : tables[n].counts) s.at(n).add_term({p.first, p.second, 0}, c);
  }
  return s;
}

LaurentPoly xy(std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
  LaurentPoly p(2);
  for (auto [e, c] : terms) p.add_term({e.first, e.second, 0}, BigRat(c));
  return p;
}

}  // namespace

TEST_SUITE("slitgf") {
  TEST_CASE("kernel root") {
    CHECK(kernel_root(StepSet::square(), 0).is_zero());
    const auto Y = scalar_coefficients(
        monomial_slice(kernel_root(StepSet::square(), 3), {0, 0, 0}));
    CHECK(Y[0] == 0);
    CHECK(Y[1] == 1);
  }

  TEST_CASE("complete generating function against enumeration") {
    for (const auto& m : {StepSet::square(), StepSet::diagonal(), StepSet::triangular(),
                          random_model(2), StepSet::square_vertical_weight(BigRat(2, 3))}) {
      CAPTURE(m.name());
      SlitContext ctx(m, 9);
      const TS S = complete_gf(ctx);
      CHECK(S == oracle_gf(m, 0, 9));
      for (int n = 1; n <= 9; ++n) {
        for (const auto& [e, c] : S[n].terms()) {
          CHECK_FALSE((e[1] == 0 && e[0] <= 0));
          CHECK(S[n].coeff({e[0], -e[1], 0}) == c);
        }
      }
      const TS B = ts_remap(bridges_gf(ctx), 2, {0, 1, 2});
      CHECK(ts_mul(ctx.kernel(), S) == TS::one(9, 2) - B);
    }
  }

  TEST_CASE("square lattice small values") {
    SlitContext ctx(StepSet::square(), 4);
    const TS S = complete_gf(ctx);
    CHECK(S[1] == xy({{{1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}));
    CHECK(scalar_coefficients(evaluate_at_ones(S)) == std::vector<BigRat>{1, 3, 9, 34, 121});
    for (int n = 1; n <= 4; ++n) CHECK(coeff(S, 0, 0, n) == 0);
    const TS B = bridges_gf(ctx);
    CHECK(coeff(B, -1, std::nullopt, 1) == 1);
    CHECK(coeff(B, 0, std::nullopt, 2) == 3);
  }

  TEST_CASE("sections by ordinate") {
    SlitContext ctx(StepSet::diagonal(), 10);
    const TS S = complete_gf(ctx);
    for (int j = 0; j <= 4; ++j) {
      const TS Sj = section_Sj(ctx, j);
      for (int n = 0; n <= 10; ++n) {
        for (const auto& [e, c] : S[n].terms()) {
          if (e[1] == j) CHECK(Sj[n].coeff({e[0], 0, 0}) == c);
        }
      }
    }
    CHECK(coeff(section_Sj(ctx, 0), 0, std::nullopt, 0) == 1);
    for (int n = 1; n <= 10; ++n) CHECK(coeff(section_Sj(ctx, 0), 0, std::nullopt, n) == 0);
    CHECK_THROWS_AS(section_polys(ctx, -1), PreconditionError);
  }

  TEST_CASE("endpoint series") {
    SlitContext ctx(StepSet::square(), 9);
    const auto a = endpoint_series(ctx, 1, 0);
    CHECK(a == std::vector<BigRat>{0, 1, 0, 5, 0, 42, 0, 429, 0, 4862});
  }

  TEST_CASE("other starting points") {
    SlitContext ctx(StepSet::square(), 8);
    const TS sp = start_positive(ctx, 3);
    CHECK(sp[0].coeff({1, 1, 0}) == 1);
    LaurentPoly z1t1(3);
    for (const auto& [e, c] : sp[1].terms()) {
      if (e[0] == 1) z1t1.add_term(e, c);
    }
    LaurentPoly want(3);
    want.add_term({1, 2, 0}, 1);
    want.add_term({1, 1, 1}, 1);
    want.add_term({1, 1, -1}, 1);
    CHECK(z1t1 == want);
    for (int k = 1; k <= 3; ++k) CHECK(start_at(ctx, k) == oracle_gf(StepSet::square(), k, 8));

    const TS sn = start_negative(ctx, 4);
    for (int n = 0; n <= 8; ++n) {
      for (const auto& [e, c] : sn[n].terms()) {
        if (e[0] == 0) CHECK(complete_gf(ctx)[n].coeff({e[1], e[2], 0}) == c);
      }
    }
    const TS d = ending_on_H(ctx, 1, 0, 4);
    for (int k = 0; k <= 4; ++k) {
      const auto o = count_endpoint(StepSet::square(), -k, 1, 0, 8);
      for (int n = 0; n <= 8; ++n) CHECK(d[n].coeff({k, 0, 0}) == o[n]);
    }
    CHECK_THROWS_AS(start_positive(SlitContext(StepSet::triangular(), 3), 2), NotReverseSymmetric);
  }

  TEST_CASE("loops and visits") {
    SlitContext ctx(StepSet::square(), 8);
    const auto L = loops_gf(ctx, 2);
    CHECK(coeff(L[0], 0, std::nullopt, 0) == 1);
    CHECK(coeff(L[0], 0, std::nullopt, 2) == 3);
    CHECK(scalar_coefficients(L[1]) == count_loops(StepSet::square(), 2, 8));
    const auto v = visits_gf(ctx, 1);
    CHECK(coeff(v.visiting, 0, std::nullopt, 1) == 1);
    const auto o = count_visits_marked(StepSet::square(), 1, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(coeff(v.visiting, 0, std::nullopt, n) == o[n].visiting);
      CHECK(coeff(v.visit_total, 0, std::nullopt, n) == o[n].visits);
    }
  }
}
