#pragma once

// Brute-force enumeration of walks avoiding H by dynamic programming over
// dense layers of big-integer cells. Ground truth for every series identity.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "slitwalk/model.hpp"

namespace slitwalk {

using Point = std::pair<int, int>;

// Walk counts of one length, by endpoint. Weighted models give rationals.
struct CountTable {
  int n = 0;
  std::map<Point, BigRat> counts;

  BigRat at(int i, int j) const;
  BigRat total() const;
};

// Largest length the enumerator accepts. Defaults to 400; the environment
// variable SLITWALK_GUARD_N raises (or lowers) it; set_oracle_guard_n
// overrides both (0 restores the default behaviour).
int oracle_guard_n();
void set_oracle_guard_n(int cap);
void check_guard(int nmax);

// Walks starting at (k, 0) whose vertices after the first avoid H; one table
// per length 0..nmax.
std::vector<CountTable> count_walks(const StepSet& m, int start_k, int nmax);

// Bridges by length: table n holds, for each endpoint (i, 0) with i <= 0, the
// number of n-step walks from the origin ending there and otherwise avoiding H.
std::vector<CountTable> count_bridges(const StepSet& m, int nmax);

// Loops at (k, 0), k > 0, by length.
std::vector<BigRat> count_loops(const StepSet& m, int k, int nmax);

struct VisitCounts {
  BigRat visiting;  // walks from the origin that visit (k, 0)
  BigRat visits;    // total number of visits to (k, 0), over all walks
};
std::vector<VisitCounts> count_visits_marked(const StepSet& m, int k, int nmax);

// Square lattice walks from the origin by length, endpoint and number of
// vertical steps: tables[n][(i, j)][v].
using VerticalTable = std::map<Point, std::vector<BigInt>>;
std::vector<VerticalTable> count_vertical_marked(int nmax);

struct EndpointDistribution {
  int n = 0;
  BigRat total;
  std::map<Point, BigRat> probability;
  std::map<int, BigRat> marginal_x;
  std::map<int, BigRat> marginal_y;
  BigRat mean_x, mean_y, mean_x2, mean_y2;
  double mean_r = 0;  // E(sqrt(X^2 + Y^2)), floating point
};
EndpointDistribution endpoint_distribution(const StepSet& m, int n);

// Exact first and second moments of the endpoint of walks from the origin at
// several lengths, from a single streaming enumeration.
struct EndpointMoments {
  int n = 0;
  BigRat total;  // a(n)
  BigRat mean_x, mean_y, mean_x2, mean_y2;
  double mean_r = 0;
};
std::vector<EndpointMoments> endpoint_moments(const StepSet& m, const std::vector<int>& lengths);

// a^{[k]}_{i,j}(n) for n = 0..nmax, without keeping whole tables.
std::vector<BigRat> count_endpoint(const StepSet& m, int start_k, int i, int j, int nmax);

// Totals a(n) for n = 0..nmax (streaming, no tables kept).
std::vector<BigRat> count_totals(const StepSet& m, int nmax);

}  // namespace slitwalk
