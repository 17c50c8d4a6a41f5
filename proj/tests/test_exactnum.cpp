#include <cmath>
#include <random>

#include "doctest.h"
#include "slitwalk/errors.hpp"
#include "slitwalk/exactnum.hpp"

using namespace slitwalk;

namespace {

BigRat small_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  BigRat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

template <int D>
QuadElem<D> small_quad(std::mt19937& rng) {
  return QuadElem<D>(small_rat(rng), small_rat(rng));
}

bool canonical(const BigRat& q) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1 && sgn(q.get_den()) > 0;
}

template <int D>
void field_axioms(unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = small_quad<D>(rng), b = small_quad<D>(rng), c = small_quad<D>(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QuadElem<D>(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == QuadElem<D>(1));
    const auto p = a * b + c;
    CHECK(canonical(p.a()));
    CHECK(canonical(p.b()));
  }
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("quadratic field examples") {
    const Sqrt2Rat r2 = Sqrt2Rat::root();
    CHECK((Sqrt2Rat(2) - r2) * (Sqrt2Rat(2) + r2) == Sqrt2Rat(2));
    CHECK(GaussRat::root() * GaussRat::root() == GaussRat(-1));
    const Sqrt2Rat inv = (Sqrt2Rat(2) - r2).inverse();
    CHECK(inv == Sqrt2Rat(BigRat(1), BigRat(1, 2)));
    CHECK(inv * (Sqrt2Rat(2) - r2) == Sqrt2Rat(1));
  }

  TEST_CASE("field axioms on random elements") {
    field_axioms<2>(11);
    field_axioms<-1>(12);
  }

  TEST_CASE("float conversion") {
    const Sqrt2Rat r2 = Sqrt2Rat::root();
    CHECK(to_double(Sqrt2Rat(2) - r2) == doctest::Approx(0.5857864376269049).epsilon(1e-15));
    const Sqrt2Rat p2 = Sqrt2Rat(BigRat(5, 34)) * (Sqrt2Rat(19) - Sqrt2Rat(11) * r2);
    CHECK(to_double(p2) == doctest::Approx(0.5064192373376404).epsilon(1e-15));
    CHECK(to_double(Sqrt2Rat(0)) == 0.0);
    // Severe cancellation: (1 + sqrt 2)^-40 written as a - b sqrt 2.
    Sqrt2Rat x(1);
    for (int k = 0; k < 40; ++k) x *= Sqrt2Rat(-1) + r2;
    const double expect = std::pow(std::sqrt(2.0) - 1, 40);
    CHECK(to_double(x) == doctest::Approx(expect).epsilon(1e-14));
  }

  TEST_CASE("exact sign and ordering") {
    const Sqrt2Rat r2 = Sqrt2Rat::root();
    CHECK(sign(Sqrt2Rat(BigRat(140, 99)) - r2) < 0);
    CHECK(sign(Sqrt2Rat(BigRat(99, 70)) - r2) > 0);
    CHECK(sign(Sqrt2Rat(0)) == 0);
    CHECK(Sqrt2Rat(1) < r2);
  }

  TEST_CASE("runtime-tagged elements") {
    const AnyQuad a = make_quad(BigRat(1), BigRat(1), 2);
    const AnyQuad b = make_quad(BigRat(1), BigRat(1), -1);
    CHECK(discriminant_of(a) == 2);
    CHECK_THROWS_AS(quad_field_ops(a, b, QuadOp::add), DiscriminantMismatch);
    CHECK_THROWS_AS(make_quad(BigRat(1), BigRat(1), 3), PreconditionError);
    const AnyQuad sq = quad_field_ops(b, b, QuadOp::mul);  // (1 + i)^2 = 2i
    CHECK(std::get<GaussRat>(sq) == GaussRat(0, 2));
    CHECK_THROWS_AS(quad_field_ops(a, make_quad(0, 0, 2), QuadOp::div), DivisionByZero);
  }

  TEST_CASE("rational text round trip") {
    CHECK(to_compact_string(BigRat(5)) == "5");
    CHECK(to_compact_string(BigRat(-3, 4)) == "-3/4");
    CHECK(parse_rat("6/8") == BigRat(3, 4));
    CHECK(binomial(10, 3) == 120);
    CHECK(catalan_number(7) == 429);
  }
}
