#pragma once

// Limit law of the endpoint of a uniform n-step walk on the slit square
// lattice, scaled by sqrt(n): density, moments, and finite-n comparisons.

#include <array>
#include <string>
#include <vector>

#include "slitwalk/exactnum.hpp"

namespace slitwalk {

// f(x, y) = sqrt 2 / Gamma(1/4) exp(-(x^2 + y^2)) sqrt(x + sqrt(x^2 + y^2))
double density_eval(double x, double y);
// g(rho, theta) = 2 / Gamma(1/4) rho^(3/2) exp(-rho^2) cos(theta / 2); rho >= 0, |theta| <= pi.
double polar_density_eval(double rho, double theta);

// Gamma(1/4) Gamma(3/4) - pi sqrt 2, as a self-check of the Gamma layer.
double gamma_reflection_residual();

// Limits of E(X)/sqrt n, E(Y)/sqrt n, E(X^2)/n, E(Y^2)/n, E(R)/sqrt n.
using FiveStats = std::array<double, 5>;
const std::array<const char*, 5>& stat_names();
FiveStats limit_moments();

struct QuadratureReport {
  double mass = 0;          // integral of f over the plane
  FiveStats moments{};      // the five statistics under f
  double max_polar_gap = 0; // max |f(rho cos, rho sin) rho - g| on a sample grid
};
// Nested adaptive quadrature in polar coordinates.
QuadratureReport integrate_density();

struct MomentReport {
  int n = 0;
  BigRat ey_exact;  // E(Y_n), exact
  FiveStats values{};
  FiveStats targets{};
  FiveStats gaps{};
};
std::vector<MomentReport> empirical_moments(const std::vector<int>& nlist);

// a(n) n^(1/4) / 4^n against sqrt(1 + sqrt 2) / (2 Gamma(3/4)).
double an_constant();
struct AnRatio {
  int n = 0;
  double ratio = 0;
  double rel_gap = 0;
};
AnRatio an_ratio(int n, const BigRat& total);
std::vector<AnRatio> asymptotic_an(const std::vector<int>& nlist);

}  // namespace slitwalk
