#include <cstdlib>

#include "doctest.h"
#include "slitwalk/closedform.hpp"
#include "slitwalk/errors.hpp"
#include "slitwalk/oracle.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;

TEST_SUITE("oracle") {
  TEST_CASE("small counts") {
    const auto sq = count_walks(StepSet::square(), 0, 3);
    CHECK(sq[1].counts.size() == 3);
    CHECK(sq[1].at(-1, 0) == 0);
    CHECK(sq[2].total() == 9);
    CHECK(sq[3].at(0, 1) == 4);
    const auto dg = count_walks(StepSet::diagonal(), 0, 2);
    CHECK(dg[2].at(2, 0) == 2);
    const auto br = count_bridges(StepSet::square(), 2);
    CHECK(br[1].at(-1, 0) == 1);
    CHECK(br[2].at(0, 0) == 3);
  }

  TEST_CASE("table invariants") {
    for (const auto& m : {StepSet::square(), StepSet::diagonal(), StepSet::triangular(),
                          random_model(4)}) {
      CAPTURE(m.name());
      const auto tables = count_walks(m, 0, 8);
      BigRat bound = 1;
      for (int n = 0; n <= 8; ++n) {
        for (const auto& [p, c] : tables[n].counts) {
          CHECK(tables[n].at(p.first, -p.second) == c);
          if (n > 0) CHECK_FALSE((p.second == 0 && p.first <= 0));
        }
        if (n == 0) {
          CHECK(tables[n].total() == 1);
        } else if (m.name() == "square") {
          CHECK(tables[n].total() < bound);
        } else {
          CHECK(tables[n].total() <= bound);
        }
        bound *= m.total_weight();
      }
      const auto totals = count_totals(m, 8);
      for (int n = 0; n <= 8; ++n) CHECK(totals[n] == tables[n].total());
    }
  }

  TEST_CASE("vertical step refinement") {
    const auto t = count_vertical_marked(11);
    const auto& v3 = t[3].at({1, 0});
    CHECK(v3[0] == 1);
    CHECK(v3[2] == 4);
    for (int n = 0; n <= 5; ++n) {
      BigInt row = 0;
      for (const auto& c : t[2 * n + 1].at({1, 0})) row += c;
      CHECK(row == catalan_number(2 * n + 1));
    }
  }

  TEST_CASE("endpoint moments agree with the full distribution") {
    const auto d = endpoint_distribution(StepSet::square(), 12);
    const auto m = endpoint_moments(StepSet::square(), {12});
    CHECK(m[0].total == d.total);
    CHECK(m[0].mean_x == d.mean_x);
    CHECK(m[0].mean_y == 0);
    CHECK(m[0].mean_x2 == d.mean_x2);
    CHECK(m[0].mean_y2 == d.mean_y2);
    CHECK(m[0].mean_r == doctest::Approx(d.mean_r).epsilon(1e-12));
    BigRat total = 0;
    for (const auto& [p, q] : d.probability) total += q;
    CHECK(total == 1);
  }

  TEST_CASE("resource guard") {
    CHECK(oracle_guard_n() > 0);
    set_oracle_guard_n(5);
    CHECK_THROWS_AS(count_walks(StepSet::square(), 0, 6), ResourceGuardExceeded);
    CHECK_NOTHROW(count_walks(StepSet::square(), 0, 5));
    set_oracle_guard_n(0);
    CHECK_THROWS_AS(count_walks(StepSet::square(), 0, -1), PreconditionError);
  }
}
