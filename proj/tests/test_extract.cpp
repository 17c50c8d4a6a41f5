#include <random>

#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/extract.hpp"
#include "slitwalk/slitgf.hpp"

using namespace slitwalk;
using TG = TSeries<GaussRat>;

namespace {

Laurent<GaussRat> gx(int e, const GaussRat& c = GaussRat(1)) {
  return Laurent<GaussRat>::monomial(c, {e, 0, 0}, 1);
}

TG random_poly_series(std::mt19937& rng, int order, bool negative) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 4);
  TG s(order, 1);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k < 3; ++k) {
      const int ex = negative ? -1 - e(rng) : e(rng);
      s.at(n).add_term({ex, 0, 0}, GaussRat(BigRat(c(rng)), BigRat(c(rng))));
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("extract") {
  TEST_CASE("taylor operator examples") {
    const GaussRat a(BigRat(2), BigRat(1));
    TG x(0, 1), x2(0, 1);
    x.at(0) = gx(1);
    x2.at(0) = gx(2);
    CHECK(taylor_op(x, a, 1)[0] == gx(0));
    CHECK(taylor_op(x2, a, 1)[0] == gx(1) + gx(0, a));
    TG inv(0, 1);
    inv.at(0) = gx(-1);
    CHECK_THROWS_AS(taylor_op(inv, GaussRat(0), 1), PreconditionError);
    CHECK_THROWS_AS(taylor_op(x, a, 0), PreconditionError);
  }

  TEST_CASE("taylor operator preserves its classes") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      const GaussRat a(BigRat(trial % 3 - 1), BigRat(1));
      const int m = 1 + trial % 3;
      const TG p = taylor_op(random_poly_series(rng, 3, false), a, m);
      const TG q = taylor_op(random_poly_series(rng, 3, true), a, m);
      for (int n = 0; n <= 3; ++n) {
        for (const auto& [e, c] : p[n].terms()) CHECK(e[0] >= 0);
        for (const auto& [e, c] : q[n].terms()) CHECK(e[0] < 0);
      }
    }
  }

  TEST_CASE("no roots means plain filter") {
    std::mt19937 rng(10);
    TG u = random_poly_series(rng, 3, false) + random_poly_series(rng, 3, true);
    CHECK(positive_part_via_roots<GaussRat>(u, {}, GaussRat(1)) == x_split(u).positive);
  }

  TEST_CASE("worked diagonal instances") {
    const auto s1 = diagonal_S1_positive(10);
    const auto s2 = diagonal_S2_positive(10);
    CHECK(s1.matches());
    CHECK(s2.matches());
    for (int n = 1; n <= 5; ++n) {
      CHECK(s2.extracted[2 * n].coeff({0, 0, 0}) == GaussRat(BigRat(catalan_number(2 * n))));
    }
  }

  TEST_CASE("generic route for the presets") {
    for (const auto& m : {StepSet::square(), StepSet::diagonal(), StepSet::triangular()}) {
      CAPTURE(m.name());
      SlitContext ctx(m, 10);
      const auto roots = preset_roots(m);
      for (int j = 0; j <= 3; ++j) CHECK(section_positive_via_roots(ctx, j, roots, 10 - j).matches());
    }
    CHECK(preset_roots(StepSet::square_vertical_weight(BigRat(2))).empty());
    CHECK_THROWS_AS(preset_roots(StepSet::parse("1 1\n1 -1\n0 1\n0 -1\n")), PreconditionError);
  }

  TEST_CASE("square variable reindexing") {
    TG a(1, 1);
    a.at(1) = gx(4) + gx(-2);
    const TG b = even_to_square_variable(a);
    CHECK(b[1] == gx(2) + gx(-1));
    CHECK(square_variable_to_even(b) == a);
    TG odd(0, 1);
    odd.at(0) = gx(1);
    CHECK_THROWS_AS(even_to_square_variable(odd), PreconditionError);
  }
}
