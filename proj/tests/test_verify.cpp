#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/io.hpp"
#include "slitwalk/verify.hpp"

using namespace slitwalk;

TEST_SUITE("verify") {
  TEST_CASE("model suites pass") {
    for (const auto& m : {StepSet::square(), StepSet::diagonal(), StepSet::triangular(),
                          random_model(21), StepSet::square_vertical_weight(BigRat(5, 2))}) {
      const auto rep = verify_model(m, 8);
      for (const auto& c : rep.checks) {
        CAPTURE(m.name() + ": " + c.name + ": " + c.detail);
        CHECK(c.passed);
      }
      CHECK(rep.checks.size() >= 10);
    }
  }

  TEST_CASE("random models are valid and reproducible") {
    for (unsigned s = 0; s < 30; ++s) {
      const auto a = random_model(s), b = random_model(s);
      CHECK(a.steps() == b.steps());
    }
  }

  TEST_CASE("failures are reported, guard errors propagate") {
    const auto bad = timed_check("x", 0, [](std::string&) -> bool {
      throw InternalInconsistency("boom");
    });
    CHECK_FALSE(bad.passed);
    CHECK(bad.detail.find("boom") != std::string::npos);
    CHECK_THROWS_AS(timed_check("g", 0, [](std::string&) -> bool {
                      throw ResourceGuardExceeded("cap");
                    }),
                    ResourceGuardExceeded);
    const auto slow = timed_check("s", 1e-9, [](std::string&) {
      volatile double x = 0;
      for (int k = 0; k < 100000; ++k) x = x + 1;
      return true;
    });
    CHECK_FALSE(slow.passed);
  }

  TEST_CASE("acceptance names") {
    CHECK(acceptance_count() == 11);
    CHECK(acceptance_name(1) == "oracle_equivalence");
    CHECK_THROWS_AS(acceptance_name(12), PreconditionError);
  }
}

TEST_SUITE("io") {
  TEST_CASE("rationals and quadratic elements") {
    CHECK(rat_to_json(BigRat(-7, 3)) == "-7/3");
    CHECK(rat_from_json(Json("4/6")) == BigRat(2, 3));
    CHECK(rat_from_json(Json(5)) == 5);
    const Json q = quad_to_json(Sqrt2Rat(BigRat(1, 2), BigRat(-3)));
    CHECK(q.dump() == R"({"a":"1/2","b":"-3","d":2})");
    CHECK(std::get<Sqrt2Rat>(quad_from_json(q)) == Sqrt2Rat(BigRat(1, 2), BigRat(-3)));
    CHECK_THROWS_AS(quad_from_json(Json::object()), PreconditionError);
  }

  TEST_CASE("csv") {
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("plain") == "plain");
    CountTable t;
    t.n = 1;
    t.counts[{1, 0}] = 1;
    t.counts[{0, 1}] = 1;
    CHECK(tables_to_csv({t}) == "n,i,j,count\n1,0,1,1\n1,1,0,1\n");
    TSeries<BigRat> s(1, 1);
    s.at(1).add_term({-1, 0, 0}, BigRat(1, 2));
    CHECK(series_to_csv(s) == "n,i,c\n1,-1,1/2\n");
  }
}
