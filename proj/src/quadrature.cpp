#include "kohn/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

constexpr double kTailCutoff = 1e-17;
constexpr double kRelTol = 1e-12;

// log(|tau| / sinh|tau|) without overflow or cancellation.
double log_ratio(double tau) {
  const double a = std::fabs(tau);
  if (a < 1e-4) return -a * a / 6.0 + a * a * a * a / 180.0;
  // sinh a = e^a (1 - e^{-2a}) / 2
  return std::log(a) - a - std::log1p(-std::exp(-2.0 * a)) + std::log(2.0);
}

double half_width(int n) {
  double t = 1.0;
  while (weyl_integrand(t, n) > kTailCutoff || weyl_integrand(-t, n) > kTailCutoff) t += 1.0;
  return t;
}

}  // namespace

double weyl_integrand(double tau, int n) {
  return std::exp(static_cast<double>(n) * log_ratio(tau) - static_cast<double>(n - 2) * tau);
}

QuadratureResult weyl_integral(int n, QuadratureScheme scheme) {
  if (n < 2) throw DomainError("n must be at least 2");
  const double t = half_width(n);
  auto f = [n](double x) { return weyl_integrand(x, n); };
  QuadratureResult r;
  r.half_width = t;
  if (scheme == QuadratureScheme::GaussKronrod) {
    double err = 0;
    // Split at 0 so both halves are smooth and one-signed in their decay.
    const double left = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, -t, 0.0, 30, kRelTol, &err);
    double err2 = 0;
    const double right = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, t, 30, kRelTol, &err2);
    r.value = left + right;
    r.error_estimate = err * std::fabs(left) + err2 * std::fabs(right);
  } else {
    boost::math::quadrature::tanh_sinh<double> integrator;
    double err = 0;
    const double left = integrator.integrate(f, -t, 0.0, kRelTol, &err);
    double err2 = 0;
    const double right = integrator.integrate(f, 0.0, t, kRelTol, &err2);
    r.value = left + right;
    r.error_estimate = err + err2;
  }
  return r;
}

double weyl_constant(int n, QuadratureScheme scheme) {
  const double integral = weyl_integral(n, scheme).value;
  const double nn = static_cast<double>(n);
  return (nn - 1.0) / (nn * std::pow(2.0 * std::numbers::pi, nn) * boost::math::tgamma(nn + 1.0)) * integral;
}

double sphere_volume(int n) {
  return 2.0 * std::pow(std::numbers::pi, n) / boost::math::tgamma(static_cast<double>(n));
}

}  // namespace kohn
