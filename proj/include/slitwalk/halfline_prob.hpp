#pragma once

// Probabilities at t = 1/4 on the square lattice, exact in Q[sqrt 2]:
// first hitting points of H, the hitting distribution from (1, 0), and the
// visit probabilities and Green values at (k, 0).

#include <optional>
#include <string>
#include <vector>

#include "slitwalk/exactnum.hpp"

namespace slitwalk {

// c = (sqrt 2 - 1)^2 = 3 - 2 sqrt 2
Sqrt2Rat quarter_c();

// S_{k,0}(1/4) for k = 0..K: coefficients of ((1 - x)(1 - c x))^(-1/2), from
// (n+1) s_{n+1} = (1+c)(n+1/2) s_n - c n s_{n-1}.
std::vector<Sqrt2Rat> s0_at_quarter(int K);

struct QuarterContext {
  std::vector<Sqrt2Rat> s;
  Sqrt2Rat sqrt_D_inv;  // 1/sqrt(D(1/4)) = 4(sqrt 2 - 1)
};
QuarterContext quarter_context(int K);

// p_{i,j} = S_{i,j}(1/4). Exact (two independent evaluations, radical and u
// form) for (0,+-1), (1,0), (-1,+-1), (1,+-1) and every point of the x-axis;
// otherwise a numerical estimate.
struct HittingPoint {
  int i = 0, j = 0;
  std::optional<Sqrt2Rat> exact;
  std::optional<Sqrt2Rat> exact_alt;  // second evaluation, when one exists
  double value = 0;
  // Estimates: partial sum to nmax plus a tail fitted to C n^(-3/2). The
  // error bar is the size of that tail; it is heuristic, not a bound.
  double partial_sum = 0;
  double error_bar = 0;
  int terms = 0;
  std::string method;
};
HittingPoint hitting_point_prob(int i, int j, int nmax_estimate = 120);

// Float estimate of S_{i,j}(1/4) from enumeration, whatever the point.
HittingPoint hitting_point_estimate(int i, int j, int nmax);

// p^{[k]}_{1,0} for one k, exactly: coefficients of (1 - sqrt(Delta(z)))/z at t = 1/4.
Sqrt2Rat hitting_coefficient_exact(int k);

// sqrt((sqrt 2 - 1)/(2 pi)), the limit of k^{3/2} p^{[k]}.
double hitting_tail_constant();

struct HittingCheckpoint {
  int k = 0;
  double p = 0;
  double scaled = 0;  // k^{3/2} p^{[k]}
  double partial_sum = 0;
};

struct HittingDistribution {
  int K = 0;
  std::vector<Sqrt2Rat> leading_exact;  // p^{[0..keep-1]}
  std::vector<double> p;                // p^{[0..K]}
  double partial_sum = 0;               // sum_{k<=K} p^{[k]}
  int exact_limit = 0;                  // exact values computed for k <= exact_limit
  bool all_positive = true;             // exact sign test for k <= exact_limit
  bool partial_sums_increasing = true;
  // Largest relative gap between the floats derived from the exact values
  // and an independent floating-point recurrence.
  double max_float_rel_dev = 0;
  double target = 0;
  std::vector<HittingCheckpoint> checkpoints;
};
// Exact recurrence in Z[sqrt 2] for k <= min(K, exact_limit); floating-point
// recurrence beyond. Checkpoints at powers of ten and at K.
HittingDistribution hitting_distribution(int K, int keep_exact = 16, int exact_limit = 20000);

struct Transience {
  std::vector<Sqrt2Rat> p;  // p_k, element k-1
  std::vector<Sqrt2Rat> v;  // v_k, element k-1
  bool all_below_one = true;
  bool s_decreasing = true;
};
Transience transience(int kmax);

}  // namespace slitwalk
