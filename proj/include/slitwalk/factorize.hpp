#pragma once

#include "slitwalk/fps.hpp"

namespace slitwalk {

// delta = D * Delta(x) * DeltaBar(1/x), the unique factorization with D free
// of x, Delta polynomial in x, DeltaBar polynomial in 1/x, and all three
// normalized to 1 at t = 0 and (for Delta, DeltaBar) at x = 0 / 1/x = 0.
struct CanonicalFactors {
  TSeries<BigRat> D{0, 1};
  TSeries<BigRat> Delta{0, 1};
  TSeries<BigRat> DeltaBar{0, 1};
};

// Factorization via log delta = L0 + x L+ + 1/x L-, exponentiating each part.
CanonicalFactors canonical_factorize(const TSeries<BigRat>& delta);

// Independent route: solves [t^n] D Delta DeltaBar = [t^n] delta order by
// order, assigning the residual's x^0 part to D, positive part to Delta and
// negative part to DeltaBar. No logarithms involved.
CanonicalFactors canonical_factorize_direct(const TSeries<BigRat>& delta);

// D * Delta * DeltaBar.
TSeries<BigRat> recompose(const CanonicalFactors& f);

// Throws InternalInconsistency when a normalization or support condition fails.
void check_canonical(const CanonicalFactors& f);

// Replace x by 1/x in a one-variable series.
TSeries<BigRat> reflect_x(const TSeries<BigRat>& a);

}  // namespace slitwalk
