#include "slitwalk/limitlaw.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "slitwalk/model.hpp"
#include "slitwalk/oracle.hpp"

namespace slitwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double gamma_quarter() {
  static const double g = boost::math::tgamma(0.25);
  return g;
}
double gamma_three_quarters() {
  static const double g = boost::math::tgamma(0.75);
  return g;
}

// Integral over the plane of h(x, y) f(x, y), in polar coordinates.
template <class H>
double integrate_polar(H h) {
  boost::math::quadrature::exp_sinh<double> radial;
  auto inner = [&](double rho) {
    auto angular = [&](double theta) {
      const double x = rho * std::cos(theta), y = rho * std::sin(theta);
      return h(x, y, rho) * density_eval(x, y) * rho;
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(angular, -kPi, kPi, 15,
                                                                          1e-12);
  };
  return radial.integrate(inner, 1e-12);
}

}  // namespace

double density_eval(double x, double y) {
  const double r = std::hypot(x, y);
  // x + r >= 0 up to rounding
  return std::numbers::sqrt2 / gamma_quarter() * std::exp(-(x * x + y * y)) *
         std::sqrt(std::max(0.0, x + r));
}

double polar_density_eval(double rho, double theta) {
  if (!(rho >= 0)) throw PreconditionError("polar_density_eval: rho must be >= 0");
  if (!(std::abs(theta) <= kPi)) throw PreconditionError("polar_density_eval: theta must lie in [-pi, pi]");
  return 2.0 / gamma_quarter() * std::pow(rho, 1.5) * std::exp(-rho * rho) * std::cos(theta / 2);
}

double gamma_reflection_residual() {
  return gamma_quarter() * gamma_three_quarters() - kPi * std::numbers::sqrt2;
}

const std::array<const char*, 5>& stat_names() {
  static const std::array<const char*, 5> names{"E(X)/sqrt(n)", "E(Y)/sqrt(n)", "E(X^2)/n",
                                                "E(Y^2)/n", "E(R)/sqrt(n)"};
  return names;
}

FiveStats limit_moments() {
  const double ratio = gamma_three_quarters() / gamma_quarter();
  return {ratio, 0.0, 7.0 / 12.0, 2.0 / 3.0, 3.0 * ratio};
}

QuadratureReport integrate_density() {
  QuadratureReport rep;
  rep.mass = integrate_polar([](double, double, double) { return 1.0; });
  rep.moments = {
      integrate_polar([](double x, double, double) { return x; }),
      integrate_polar([](double, double y, double) { return y; }),
      integrate_polar([](double x, double, double) { return x * x; }),
      integrate_polar([](double, double y, double) { return y * y; }),
      integrate_polar([](double, double, double r) { return r; }),
  };
  for (int a = 0; a <= 40; ++a) {
    const double rho = 0.1 * a;
    for (int b = 0; b <= 40; ++b) {
      const double theta = -kPi + 2 * kPi * b / 40.0;
      const double lhs = density_eval(rho * std::cos(theta), rho * std::sin(theta)) * rho;
      rep.max_polar_gap = std::max(rep.max_polar_gap, std::abs(lhs - polar_density_eval(rho, theta)));
    }
  }
  return rep;
}

std::vector<MomentReport> empirical_moments(const std::vector<int>& nlist) {
  const FiveStats targets = limit_moments();
  std::vector<MomentReport> out;
  for (const auto& em : endpoint_moments(StepSet::square(), nlist)) {
    MomentReport r;
    r.n = em.n;
    r.ey_exact = em.mean_y;
    const double sn = std::sqrt(static_cast<double>(em.n));
    const double n = em.n;
    r.values = {to_double(em.mean_x) / sn, to_double(em.mean_y) / sn, to_double(em.mean_x2) / n,
                to_double(em.mean_y2) / n, em.mean_r / sn};
    r.targets = targets;
    for (std::size_t k = 0; k < 5; ++k) r.gaps[k] = std::abs(r.values[k] - targets[k]);
    out.push_back(std::move(r));
  }
  return out;
}

double an_constant() {
  return std::sqrt(1.0 + std::numbers::sqrt2) / (2.0 * gamma_three_quarters());
}

AnRatio an_ratio(int n, const BigRat& total) {
  BigInt pow4 = 1;
  mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), 2 * static_cast<mp_bitcnt_t>(n));
  const double ratio = to_double(total / BigRat(pow4)) * std::pow(static_cast<double>(n), 0.25);
  return {n, ratio, std::abs(ratio / an_constant() - 1.0)};
}

std::vector<AnRatio> asymptotic_an(const std::vector<int>& nlist) {
  int nmax = 0;
  for (int n : nlist) nmax = std::max(nmax, n);
  const auto totals = count_totals(StepSet::square(), nmax);
  std::vector<AnRatio> out;
  for (int n : nlist) out.push_back(an_ratio(n, totals.at(n)));
  return out;
}

}  // namespace slitwalk
