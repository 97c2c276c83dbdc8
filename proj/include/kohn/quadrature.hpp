#pragma once

namespace kohn {

enum class QuadratureScheme { GaussKronrod, TanhSinh };

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  double half_width = 0;  // integration runs over (-T, T)
};

/// (tau / sinh tau)^n e^{-(n-2) tau}, evaluated stably for all real tau.
double weyl_integrand(double tau, int n);

/// Integral of weyl_integrand over the real line, truncated to (-T, T) with T
/// chosen so the integrand is below 1e-17 outside; relative tolerance 1e-12.
QuadratureResult weyl_integral(int n, QuadratureScheme scheme = QuadratureScheme::GaussKronrod);

/// (n-1) / (n (2 pi)^n Gamma(n+1)) times the integral; the sphere counting
/// function satisfies N(lambda) ~ constant * Vol(S^{2n-1}) * lambda^n.
double weyl_constant(int n, QuadratureScheme scheme = QuadratureScheme::GaussKronrod);

/// Vol(S^{2n-1}) = 2 pi^n / (n-1)!.
double sphere_volume(int n);

}  // namespace kohn
