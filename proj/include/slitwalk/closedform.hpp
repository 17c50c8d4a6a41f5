#pragma once

// Explicit algebraic forms for the square and diagonal lattices, expanded
// as truncated series, and the anti-diagonal conjecture checker.

#include <string>
#include <vector>

#include "slitwalk/fps.hpp"

namespace slitwalk {

enum class ClosedFormId {
  catalan,
  u,
  square_S,            // arity 2 (x, y)
  square_S_at_ones,    // S(1, 1; t)
  diagonal_S,          // arity 2
  diagonal_S_at_ones,
  refined_S,           // arity 3 (x, y, v)
  square_point_0_1,
  square_point_1_0,
  square_point_m1_1,
  square_point_1_1,
  diagonal_point_1_1,
  diagonal_point_m1_1,
  diagonal_point_0_2,
  diagonal_point_2i_0,  // needs param i >= 1
  conjecture,           // a_{-i,i}(2n) from the conjectured product formula; param i >= 1
};

const std::vector<ClosedFormId>& all_closed_form_ids();
std::string closed_form_name(ClosedFormId id);
// Accepts names as printed by closed_form_name; throws PreconditionError.
ClosedFormId parse_closed_form_id(const std::string& name);

// Expansion mod t^(order+1). param is the i of diagonal_point_2i_0 and conjecture.
TSeries<BigRat> eval_closed_form(ClosedFormId id, int order, int param = 1);

// Same endpoint series through their rational expressions in u (points only).
TSeries<BigRat> eval_point_u_form(ClosedFormId id, int order);

// Coefficient form of the diagonal S_{2i,0}: (i/n) C(2i,i) C(2n,n-i) 4^(n-i) at t^(2n).
BigRat diagonal_2i_0_coefficient(int i, int n);

TSeries<BigRat> catalan_series(int order);
std::vector<BigInt> catalan_numbers(int count);
TSeries<BigRat> u_series(int order);

// Conjectured a_{-i,i}(2n) for n >= i.
BigRat conjectured_anti_diagonal(int i, int n);

struct ConjectureRow {
  int n = 0;
  BigRat formula;
  BigRat counted;
  bool equal() const { return formula == counted; }
};
struct ConjectureReport {
  int i = 0;
  std::vector<ConjectureRow> rows;  // n = i..nmax
  bool all_equal() const;
};
// Compares the conjectured formula with enumeration on the square lattice.
ConjectureReport conjecture_anti_diagonal(int i, int nmax);

}  // namespace slitwalk
