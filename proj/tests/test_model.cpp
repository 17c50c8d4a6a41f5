#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/model.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;
using TS = TSeries<BigRat>;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p(1);
  for (auto [e, c] : terms) p.add_term({e, 0, 0}, BigRat(c));
  return p;
}

// Product of two polynomials in t with Laurent coefficients, as a series.
TS poly_t(std::vector<LaurentPoly> c, int order) { return TS::from_coeffs(std::move(c), order, 1); }

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("validation") {
    const auto sq = StepSet::square();
    CHECK(sq.reverse_symmetric());
    CHECK(sq.steps().size() == 4);
    CHECK_THROWS_AS(StepSet::validate({{0, 2, 1}, {0, -2, 1}}), HeightViolation);
    CHECK_THROWS_AS(StepSet::validate({{1, 1, 1}, {2, 0, 1}}), SymmetryViolation);
    CHECK_THROWS_AS(StepSet::validate({}), EmptyStepSet);
    CHECK_THROWS_AS(StepSet::validate({{1, 0, -1}}), PreconditionError);
    CHECK_THROWS_AS(StepSet::validate({{1, 0, 1}, {1, 0, 1}}), PreconditionError);
    CHECK_FALSE(StepSet::triangular().reverse_symmetric());
    CHECK_THROWS_AS(StepSet::from_selector("hexagonal"), PreconditionError);
  }

  TEST_CASE("step file format") {
    const auto m = StepSet::parse("# diagonal\n1 1\n1 -1 \n-1 1 1/1\n-1 -1  # comment\n");
    CHECK(m.steps().size() == 4);
    CHECK(m.reverse_symmetric());
    const auto w = StepSet::parse("1 0 3/2\n0 1 1/2\n0 -1 1/2\n");
    CHECK(w.total_weight() == BigRat(5, 2));
    CHECK_FALSE(w.unit_weights());
    CHECK_THROWS_AS(StepSet::parse("1\n"), PreconditionError);

    const char* path = "slitwalk_model_test_steps.txt";
    {
      std::ofstream f(path);
      f << "1 0\n-1 0\n0 1\n0 -1\n";
    }
    CHECK(StepSet::from_selector(std::string("file:") + path).steps().size() == 4);
    std::remove(path);
  }

  TEST_CASE("discriminant of the presets") {
    constexpr int N = 6;
    // (1 - t(x + 1/x + 2)) (1 - t(x + 1/x - 2))
    const TS a = poly_t({lp({{0, 1}}), lp({{1, -1}, {-1, -1}, {0, -2}})}, N);
    const TS b = poly_t({lp({{0, 1}}), lp({{1, -1}, {-1, -1}, {0, 2}})}, N);
    CHECK(build_delta(StepSet::square(), N) == ts_mul(a, b));
    // 1 - 4 t^2 (x + 1/x)^2
    const TS d = poly_t({lp({{0, 1}}), lp({}), lp({{2, -4}, {0, -8}, {-2, -4}})}, N);
    CHECK(build_delta(StepSet::diagonal(), N) == d);
    for (unsigned s = 0; s < 5; ++s) {
      const TS delta = build_delta(random_model(s), N);
      CHECK(delta[0] == LaurentPoly::constant(1, 1));
    }
  }

  TEST_CASE("kernel is even in y") {
    for (const auto& m : {StepSet::square(), StepSet::triangular(), random_model(3)}) {
      const TS K = build_kernel(m, 3);
      for (const auto& [e, c] : K[1].terms()) CHECK(K[1].coeff({e[0], -e[1], 0}) == c);
    }
  }

  TEST_CASE("reverse symmetry shows in delta") {
    const TS delta = build_delta(StepSet::diagonal(), 6);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& [e, c] : delta[n].terms()) CHECK(delta[n].coeff({-e[0], 0, 0}) == c);
    }
  }

  TEST_CASE("vertical weight model") {
    const auto m = StepSet::square_vertical_weight(BigRat(1, 3));
    CHECK(m.total_weight() == BigRat(8, 3));
    CHECK_THROWS_AS(StepSet::square_vertical_weight(BigRat(0)), PreconditionError);
  }
}
