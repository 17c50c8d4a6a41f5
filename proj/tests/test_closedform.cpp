#include "doctest.h"
#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/slitgf.hpp"

using namespace slitwalk;
using TS = TSeries<BigRat>;

TEST_SUITE("closedform") {
  TEST_CASE("names round trip") {
    for (auto id : all_closed_form_ids()) CHECK(parse_closed_form_id(closed_form_name(id)) == id);
    CHECK_THROWS_AS(parse_closed_form_id("square_T"), PreconditionError);
  }

  TEST_CASE("catalan and u") {
    CHECK(catalan_numbers(6) == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
    const auto u = scalar_coefficients(u_series(7));
    CHECK(u == std::vector<BigRat>{0, 1, 0, 3, 0, 22, 0, 211});
  }

  TEST_CASE("whole-plane forms equal the pipeline") {
    constexpr int N = 10;
    SlitContext sq(StepSet::square(), N), dg(StepSet::diagonal(), N);
    CHECK(eval_closed_form(ClosedFormId::square_S, N) == complete_gf(sq));
    CHECK(eval_closed_form(ClosedFormId::diagonal_S, N) == complete_gf(dg));
    const auto ones = scalar_coefficients(eval_closed_form(ClosedFormId::square_S_at_ones, 12));
    CHECK(ones == count_totals(StepSet::square(), 12));
  }

  TEST_CASE("refined form") {
    constexpr int N = 8;
    const TS r = eval_closed_form(ClosedFormId::refined_S, N);
    CHECK(r.arity() == 3);
    const TS at1 = r.map_coeffs(
        [](const LaurentPoly& c) { return c.substituted(2, BigRat(1)).remapped(2, {0, 1, 2}); }, 2);
    CHECK(at1 == eval_closed_form(ClosedFormId::square_S, N));
    const BigRat v(3, 2);
    const TS atv = r.map_coeffs(
        [&](const LaurentPoly& c) { return c.substituted(2, v).remapped(2, {0, 1, 2}); }, 2);
    CHECK(atv == complete_gf(SlitContext(StepSet::square_vertical_weight(v), N)));
  }

  TEST_CASE("point forms") {
    constexpr int N = 12;
    SlitContext sq(StepSet::square(), N), dg(StepSet::diagonal(), N);
    struct P {
      ClosedFormId id;
      const SlitContext* ctx;
      int i, j;
    };
    using C = ClosedFormId;
    for (const P& p : {P{C::square_point_0_1, &sq, 0, 1}, P{C::square_point_1_0, &sq, 1, 0},
                       P{C::square_point_m1_1, &sq, -1, 1}, P{C::square_point_1_1, &sq, 1, 1},
                       P{C::diagonal_point_1_1, &dg, 1, 1}, P{C::diagonal_point_m1_1, &dg, -1, 1},
                       P{C::diagonal_point_0_2, &dg, 0, 2}}) {
      CAPTURE(closed_form_name(p.id));
      const auto pipe = endpoint_series(*p.ctx, p.i, p.j);
      CHECK(scalar_coefficients(eval_closed_form(p.id, N)) == pipe);
      CHECK(scalar_coefficients(eval_point_u_form(p.id, N)) == pipe);
    }
    for (int i = 1; i <= 3; ++i) {
      const auto pipe = endpoint_series(dg, 2 * i, 0);
      CHECK(scalar_coefficients(eval_closed_form(C::diagonal_point_2i_0, N, i)) == pipe);
      for (int n = i; 2 * n <= N; ++n) CHECK(diagonal_2i_0_coefficient(i, n) == pipe[2 * n]);
    }
    // Square a_{1,0}(2n+1) and diagonal a_{1,1}(2n+1) are both C_{2n+1}.
    CHECK(endpoint_series(sq, 1, 0) == endpoint_series(dg, 1, 1));
  }

  TEST_CASE("anti-diagonal conjecture") {
    CHECK(conjectured_anti_diagonal(1, 1) == 1);
    CHECK(conjectured_anti_diagonal(1, 2) == 7);
    for (int i = 1; i <= 3; ++i) CHECK(conjecture_anti_diagonal(i, 8).all_equal());
    CHECK_THROWS_AS(conjecture_anti_diagonal(0, 3), PreconditionError);
  }
}
