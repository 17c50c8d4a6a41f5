#include <cmath>

#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/limitlaw.hpp"

using namespace slitwalk;

TEST_SUITE("limitlaw") {
  TEST_CASE("density values") {
    CHECK(density_eval(0, 0) == 0.0);
    CHECK(density_eval(1, 0) == doctest::Approx(2 * std::exp(-1.0) / std::tgamma(0.25)));
    CHECK(density_eval(-1, 0) == doctest::Approx(0.0));
    CHECK(density_eval(0.3, 0.7) == doctest::Approx(density_eval(0.3, -0.7)));
    CHECK(std::abs(gamma_reflection_residual()) < 1e-12);
    CHECK_THROWS_AS(polar_density_eval(-1, 0), PreconditionError);
  }

  TEST_CASE("polar form") {
    for (double rho : {0.2, 1.0, 2.5}) {
      for (double th : {-3.0, -1.0, 0.0, 0.5, 2.9}) {
        CHECK(density_eval(rho * std::cos(th), rho * std::sin(th)) * rho ==
              doctest::Approx(polar_density_eval(rho, th)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("quadrature") {
    const auto q = integrate_density();
    CHECK(std::abs(q.mass - 1) < 1e-6);
    const auto lm = limit_moments();
    for (int k = 0; k < 5; ++k) CHECK(q.moments[k] == doctest::Approx(lm[k]).epsilon(1e-6));
    CHECK(lm[1] == 0.0);
    CHECK(lm[3] == doctest::Approx(2.0 / 3));
    CHECK(lm[2] == doctest::Approx(7.0 / 12));
    CHECK(lm[0] == doctest::Approx(0.337989).epsilon(1e-5));
  }

  TEST_CASE("finite-n moments") {
    const auto em = empirical_moments({20, 40});
    for (const auto& r : em) {
      CHECK(r.ey_exact == 0);
      CHECK(r.values[1] == 0.0);
    }
    CHECK(em[1].gaps[3] < em[0].gaps[3]);
  }

  TEST_CASE("growth constant") {
    CHECK(an_constant() ==
          doctest::Approx(std::sqrt(1 + std::sqrt(2.0)) / (2 * std::tgamma(0.75))));
    const auto r = asymptotic_an({50, 100});
    CHECK(r[1].rel_gap < r[0].rel_gap);
    CHECK(r[1].rel_gap < 0.05);
  }
}
