#include "slitwalk/factorize.hpp"

#include <string>

namespace slitwalk {

namespace {

void require_unit_constant(const TSeries<BigRat>& delta) {
  if (delta.arity() != 1) throw ArityMismatch("canonical_factorize: delta must be univariate in x");
  if (delta[0] != LaurentPoly::constant(1, 1)) {
    throw PreconditionError("canonical_factorize: delta(x; 0) must be 1");
  }
}

}  // namespace

CanonicalFactors canonical_factorize(const TSeries<BigRat>& delta) {
  require_unit_constant(delta);
  const TSeries<BigRat> L = ts_log(delta);
  auto part = [&](auto keep) {
    return L.map_coeffs([&](const LaurentPoly& c) { return c.filter(keep); });
  };
  CanonicalFactors f;
  f.D = ts_exp(part([](const Exponents& e) { return e[0] == 0; }));
  f.Delta = ts_exp(part([](const Exponents& e) { return e[0] > 0; }));
  f.DeltaBar = ts_exp(part([](const Exponents& e) { return e[0] < 0; }));
  check_canonical(f);
  return f;
}

CanonicalFactors canonical_factorize_direct(const TSeries<BigRat>& delta) {
  require_unit_constant(delta);
  const int N = delta.order();
  CanonicalFactors f{TSeries<BigRat>::one(N, 1), TSeries<BigRat>::one(N, 1),
                     TSeries<BigRat>::one(N, 1)};
  // P = Delta * DeltaBar, maintained up to the current order.
  TSeries<BigRat> P = TSeries<BigRat>::one(N, 1);
  for (int n = 1; n <= N; ++n) {
    // Contributions to [t^n] D P from lower-order unknowns.
    LaurentPoly known(1);
    for (int k = 1; k < n; ++k) {
      if (!f.Delta[k].is_zero() && !f.DeltaBar[n - k].is_zero()) {
        known += f.Delta[k] * f.DeltaBar[n - k];
      }
    }
    for (int k = 1; k < n; ++k) {
      if (!f.D[k].is_zero() && !P[n - k].is_zero()) known += f.D[k] * P[n - k];
    }
    // The unknown terms D_n + Delta_n + DeltaBar_n have disjoint supports.
    LaurentPoly r = delta[n] - known;
    f.D.at(n) = r.filter([](const Exponents& e) { return e[0] == 0; });
    f.Delta.at(n) = r.filter([](const Exponents& e) { return e[0] > 0; });
    f.DeltaBar.at(n) = r.filter([](const Exponents& e) { return e[0] < 0; });
    LaurentPoly pn = f.Delta[n] + f.DeltaBar[n];
    for (int k = 1; k < n; ++k) {
      if (!f.Delta[k].is_zero() && !f.DeltaBar[n - k].is_zero()) {
        pn += f.Delta[k] * f.DeltaBar[n - k];
      }
    }
    P.at(n) = std::move(pn);
  }
  check_canonical(f);
  return f;
}

TSeries<BigRat> recompose(const CanonicalFactors& f) {
  return ts_mul(ts_mul(f.D, f.Delta), f.DeltaBar);
}

void check_canonical(const CanonicalFactors& f) {
  const LaurentPoly one = LaurentPoly::constant(1, 1);
  if (f.D[0] != one || f.Delta[0] != one || f.DeltaBar[0] != one) {
    throw InternalInconsistency("canonical factors are not 1 at t = 0");
  }
  for (int n = 1; n <= f.D.order(); ++n) {
    const std::string at = " at t^" + std::to_string(n);
    if (!f.D[n].is_constant()) throw InternalInconsistency("D depends on x" + at);
    auto lo = f.Delta[n].min_exponent(0);
    if (lo && *lo <= 0) {
      throw InternalInconsistency("Delta has a term of x-degree " + std::to_string(*lo) + at);
    }
    auto hi = f.DeltaBar[n].max_exponent(0);
    if (hi && *hi >= 0) {
      throw InternalInconsistency("DeltaBar has a term of x-degree " + std::to_string(*hi) + at);
    }
  }
}

TSeries<BigRat> reflect_x(const TSeries<BigRat>& a) {
  return a.map_coeffs([](const LaurentPoly& c) {
    LaurentPoly out(c.arity());
    for (const auto& [e, q] : c.terms()) out.add_term({-e[0], e[1], e[2]}, q);
    return out;
  });
}

}  // namespace slitwalk
