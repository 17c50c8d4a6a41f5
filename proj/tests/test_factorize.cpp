#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/factorize.hpp"
#include "slitwalk/model.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;
using TS = TSeries<BigRat>;

namespace {
std::vector<BigRat> x_coeffs(const TS& s, int e) {
  std::vector<BigRat> out;
  for (int n = 0; n <= s.order(); ++n) out.push_back(s[n].coeff({e, 0, 0}));
  return out;
}
}  // namespace

TEST_SUITE("factorize") {
  TEST_CASE("square lattice values") {
    const auto f = canonical_factorize(build_delta(StepSet::square(), 5));
    CHECK(x_coeffs(f.Delta, 1) == std::vector<BigRat>{0, -2, 0, -10, 0, -84});
    CHECK(x_coeffs(f.D, 0) == std::vector<BigRat>{1, 0, -6, 0, -17, 0});
  }

  TEST_CASE("diagonal lattice values") {
    const auto f = canonical_factorize(build_delta(StepSet::diagonal(), 7));
    CHECK(x_coeffs(f.Delta, 2) == std::vector<BigRat>{0, 0, -4, 0, -32, 0, -320, 0});
  }

  TEST_CASE("recomposition and uniqueness") {
    std::vector<StepSet> models = {StepSet::square(), StepSet::diagonal(), StepSet::triangular()};
    for (unsigned s = 0; s < 6; ++s) models.push_back(random_model(s));
    for (const auto& m : models) {
      CAPTURE(m.name());
      const TS delta = build_delta(m, 10);
      const auto f = canonical_factorize(delta);
      CHECK_NOTHROW(check_canonical(f));
      CHECK(recompose(f) == delta);
      const auto g = canonical_factorize_direct(delta);
      CHECK(g.D == f.D);
      CHECK(g.Delta == f.Delta);
      CHECK(g.DeltaBar == f.DeltaBar);
      if (m.reverse_symmetric()) CHECK(reflect_x(f.DeltaBar) == f.Delta);
      for (int n = 0; n <= 10; ++n) {
        for (const auto& [e, c] : f.Delta[n].terms()) CHECK(e[0] >= 0);
        for (const auto& [e, c] : f.DeltaBar[n].terms()) CHECK(e[0] <= 0);
        CHECK(f.D[n].is_constant());
      }
    }
  }

  TEST_CASE("rejects a bad triple") {
    auto f = canonical_factorize(build_delta(StepSet::square(), 4));
    f.Delta.at(2).add_term({-1, 0, 0}, BigRat(1));
    CHECK_THROWS_AS(check_canonical(f), InternalInconsistency);
  }

  TEST_CASE("reflection") {
    TS a(1, 1);
    a.at(1) = LaurentPoly::monomial(3, {2, 0, 0}, 1);
    CHECK(reflect_x(a)[1] == LaurentPoly::monomial(3, {-2, 0, 0}, 1));
    CHECK(reflect_x(reflect_x(a)) == a);
  }
}
