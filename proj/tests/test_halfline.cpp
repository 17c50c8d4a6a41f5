#include <cmath>

#include "doctest.h"
#include "slitwalk/halfline_prob.hpp"

using namespace slitwalk;

TEST_SUITE("halfline_prob") {
  const Sqrt2Rat r2 = Sqrt2Rat::root();

  TEST_CASE("axis values") {
    const auto s = s0_at_quarter(3);
    CHECK(s[0] == Sqrt2Rat(1));
    CHECK(s[1] == Sqrt2Rat(2) - r2);
    CHECK(s[2] == Sqrt2Rat(BigRat(15, 2), BigRat(-5)));
    const auto big = s0_at_quarter(200);
    for (std::size_t k = 1; k < big.size(); ++k) CHECK(big[k] < big[k - 1]);
  }

  TEST_CASE("axis values against partial sums") {
    const auto s = s0_at_quarter(4);
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(k);
      const auto est = hitting_point_estimate(k, 0, 200);
      CHECK(std::abs(est.value - to_double(s[k])) <= est.error_bar + 1e-12);
    }
  }

  TEST_CASE("closed points") {
    CHECK(*hitting_point_prob(0, 1).exact == Sqrt2Rat(BigRat(1, 2)));
    CHECK(*hitting_point_prob(0, -1).exact == Sqrt2Rat(BigRat(1, 2)));
    CHECK(*hitting_point_prob(1, 0).exact == Sqrt2Rat(2) - r2);
    const auto m11 = hitting_point_prob(-1, 1);
    CHECK(*m11.exact == (r2 - Sqrt2Rat(1)) * Sqrt2Rat(BigRat(1, 2)));
    CHECK(*m11.exact_alt == *m11.exact);
    CHECK(*hitting_point_prob(0, 0).exact == Sqrt2Rat(1));
    CHECK(*hitting_point_prob(-3, 0).exact == Sqrt2Rat(0));
    const auto far = hitting_point_prob(2, 3, 60);
    CHECK_FALSE(far.exact.has_value());
    CHECK(far.value > 0);
    CHECK(far.value < 1);
  }

  TEST_CASE("hitting distribution") {
    CHECK(hitting_coefficient_exact(0) == Sqrt2Rat(2) - r2);
    const auto h = hitting_distribution(2000, 8);
    CHECK(h.leading_exact[0] == Sqrt2Rat(2) - r2);
    for (int k = 0; k < 8; ++k) CHECK(h.leading_exact[k] == hitting_coefficient_exact(k));
    CHECK(h.all_positive);
    CHECK(h.partial_sums_increasing);
    CHECK(h.partial_sum < 1);
    CHECK(h.max_float_rel_dev < 1e-12);
    CHECK(hitting_tail_constant() == doctest::Approx(std::sqrt((std::sqrt(2.0) - 1) / (2 * M_PI))));
  }

  TEST_CASE("visit probabilities and Green values") {
    const auto t = transience(6);
    CHECK(t.p[0] == Sqrt2Rat(2) - r2);
    CHECK(t.p[1] == Sqrt2Rat(BigRat(5, 34)) * (Sqrt2Rat(19) - Sqrt2Rat(11) * r2));
    CHECK(t.v[0] == Sqrt2Rat(4) * (Sqrt2Rat(3) * r2 - Sqrt2Rat(4)));
    CHECK(t.v[1] == Sqrt2Rat(10) * (Sqrt2Rat(22) * r2 - Sqrt2Rat(31)));
    CHECK(t.all_below_one);
    CHECK(t.s_decreasing);
    CHECK(to_double(t.p[0]) == doctest::Approx(0.586).epsilon(1e-3));
    CHECK(to_double(t.v[0]) == doctest::Approx(0.97).epsilon(1e-2));
  }
}
