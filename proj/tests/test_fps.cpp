#include <random>

#include "doctest.h"
#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/fps.hpp"
#include "slitwalk/io.hpp"
#include "slitwalk/slitgf.hpp"

using namespace slitwalk;
using TS = TSeries<BigRat>;

namespace {

BigRat half(int c) {
  BigRat q(c, 2);
  q.canonicalize();
  return q;
}

LaurentPoly x1(int e = 1) { return LaurentPoly::monomial(1, {e, 0, 0}, 1); }

// Random series in x, 1/x with unit constant term.
TS random_unit_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  TS s = TS::one(order, 1);
  for (int n = 1; n <= order; ++n) {
    for (int k = 0; k < 3; ++k) s.at(n).add_term({e(rng), 0, 0}, half(c(rng)));
  }
  return s;
}

TS random_series(std::mt19937& rng, int order) {
  TS s = random_unit_series(rng, order);
  s.at(0) = LaurentPoly::constant(BigRat(std::uniform_int_distribution<int>(-2, 2)(rng)), 1);
  return s;
}

}  // namespace

TEST_SUITE("fps") {
  TEST_CASE("multiplication examples") {
    TS a(2, 1), b(2, 1);
    a.at(0) = LaurentPoly::constant(1, 1);
    a.at(1) = x1();
    b.at(0) = LaurentPoly::constant(1, 1);
    b.at(1) = -x1();
    const TS p = ts_mul(a, b);
    CHECK(p[1].is_zero());
    CHECK(p[2] == -x1(2));
    CHECK(ts_mul(a, TS::one(2, 1)) == a);

    const TS t = TS::from_scalars({0, 1}, 6);
    const TS C = catalan_series(6);
    TS Cm(6, 1);
    for (int n = 0; n <= 6; ++n) Cm.at(n) = C[n] * BigRat(n % 2 ? -1 : 1);
    const auto cc = scalar_coefficients(ts_mul(C, Cm));
    CHECK(cc[2] == 3);
    CHECK(cc[4] == 22);
    CHECK(cc[1] == 0);
    CHECK(ts_mul(t, ts_mul(C, Cm)) == u_series(6));
  }

  TEST_CASE("reciprocal") {
    const TS r = ts_recip(TS::from_scalars({1, -1}, 5));
    for (const auto& c : scalar_coefficients(r)) CHECK(c == 1);
    // 1/(1 - t(x + 1/x + y + 1/y)): constant term at t^2 counts returning walks.
    TS k = TS::one(4, 2);
    k.at(1) = -LaurentPoly::from_terms(
        {{{1, 0, 0}, 1}, {{-1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, -1, 0}, 1}}, 2);
    CHECK(coeff(ts_recip(k), 0, 0, 2) == 4);
    CHECK_THROWS_AS(ts_recip(TS::from_scalars({0, 1}, 3)), PreconditionError);
  }

  TEST_CASE("square root") {
    const auto c = scalar_coefficients(ts_sqrt(TS::from_scalars({1, -4}, 4)));
    CHECK(c == std::vector<BigRat>{1, -2, -2, -4, -10});
    SlitContext ctx(StepSet::square(), 3);
    CHECK(coeff(ctx.sqrt_Delta(), 1, std::nullopt, 1) == -1);
    CHECK_THROWS_AS(ts_sqrt(TS::from_scalars({2, 1}, 3)), PreconditionError);
  }

  TEST_CASE("log and exp") {
    const auto l = scalar_coefficients(ts_log(ts_recip(TS::from_scalars({1, -1}, 5))));
    for (int n = 1; n <= 5; ++n) CHECK(l[n] == BigRat(1, n));
    CHECK(ts_exp(TS(5, 1)) == TS::one(5, 1));
    CHECK_THROWS_AS(ts_exp(TS::one(3, 1)), PreconditionError);
  }

  TEST_CASE("round trips on random inputs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
      const TS a = random_unit_series(rng, 6);
      const TS one = TS::one(6, 1);
      CHECK(ts_mul(ts_sqrt(a), ts_sqrt(a)) == a);
      CHECK(ts_mul(ts_recip(a), a) == one);
      CHECK(ts_exp(ts_log(a)) == a);
    }
  }

  TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 15; ++trial) {
      const TS a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
      CHECK(ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c)));
      CHECK(ts_mul(a, b + c) == ts_mul(a, b) + ts_mul(a, c));
      CHECK(ts_mul(a, b) == ts_mul(b, a));
      CHECK((a + b) - b == a);
    }
  }

  TEST_CASE("x split") {
    TS a(0, 1);
    a.at(0) = LaurentPoly::from_terms({{{-1, 0, 0}, 1}, {{0, 0, 0}, 2}, {{1, 0, 0}, 3}}, 1);
    const auto parts = x_split(a);
    CHECK(parts.positive[0] == LaurentPoly::from_terms({{{0, 0, 0}, 2}, {{1, 0, 0}, 3}}, 1));
    CHECK(parts.negative[0] == x1(-1));
    CHECK(parts.positive + parts.negative == a);
    const TS poly = ts_remap(catalan_series(4), 1, {0, 1, 2});
    CHECK(x_split(poly).positive == poly);
    CHECK(x_split(poly).negative.is_zero());

    std::mt19937 rng(7);
    const TS r = random_series(rng, 5);
    const auto pr = x_split(r);
    CHECK(pr.positive + pr.negative == r);
    for (int n = 0; n <= 5; ++n) {
      for (const auto& [e, q] : pr.positive[n].terms()) CHECK(pr.negative[n].coeff(e) == 0);
    }
  }

  TEST_CASE("coefficient access") {
    SlitContext ctx(StepSet::square(), 2);
    const TS S = complete_gf(ctx);
    CHECK(coeff(S, 1, 0, 1) == 1);
    CHECK(coeff(S, -1, -1, 2) == 1);
    CHECK_THROWS_AS(coeff(S, 0, 0, 3), TruncationError);
    CHECK_THROWS_AS(ts_mul(S, TS::one(2, 1)), ArityMismatch);
  }

  TEST_CASE("json schema") {
    SlitContext ctx(StepSet::square(), 3);
    const TS S = complete_gf(ctx);
    const Json j = series_to_json(S);
    CHECK(j["vars"] == Json::array({"x", "y", "t"}));
    CHECK(j["order"] == 3);
    const auto& terms = j["terms"];
    for (std::size_t k = 1; k < terms.size(); ++k) {
      const auto key = [&](std::size_t m) {
        return std::tuple(terms[m]["n"].get<int>(), terms[m]["i"].get<int>(),
                          terms[m]["j"].get<int>());
      };
      CHECK(key(k - 1) < key(k));
    }
    CHECK(series_from_json(j) == S);
    CHECK(j.dump() == series_to_json(S).dump());
  }
}
