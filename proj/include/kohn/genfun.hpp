#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kohn/group_catalog.hpp"

namespace kohn {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent e(G): lcm of element orders, i.e. of all eigenangle denominators.
std::int64_t exponent(const QuotientGroup& g);

/// Square table of series coefficients, coeff(p, q) for 0 <= p, q <= ceiling.
struct SeriesTable {
  std::int64_t ceiling = 0;
  std::vector<std::int64_t> values;  // row-major

  std::int64_t at(std::int64_t p, std::int64_t q) const { return values[p * (ceiling + 1) + q]; }
};

/// Coefficients of F_G(z,w) = (1/|G|) sum_g (1 - zw) / (det(z - g) det(w - conj g)),
/// from the geometric-series expansion in the eigenvalues. The root-of-unity
/// sums are evaluated exactly in two prime fields that contain the e(G)-th
/// roots of unity, and lifted to integers.
SeriesTable fg_coefficients(const QuotientGroup& g, std::int64_t ceiling);

/// P_G(z,w) = F_G(z,w) (z^e - 1)^n (w^e - 1)^n / (1 - zw), with e = e(G).
struct PGPolynomial {
  std::int64_t e = 1;
  int n = 2;
  std::int64_t degree = 0;     // n (e - 1)
  std::int64_t ceiling = 0;    // series truncation used to derive the coefficients
  std::vector<BigInt> coeffs;  // (degree+1)^2, row-major

  const BigInt& at(std::int64_t a, std::int64_t b) const { return coeffs[a * (degree + 1) + b]; }
};

/// Throws TruncationError if a nonzero coefficient appears beyond degree
/// n(e-1) within the truncation window. Default ceiling max(2 n e, 24).
PGPolynomial pg_polynomial(const QuotientGroup& g, std::optional<std::int64_t> ceiling = std::nullopt);

/// Series of P_G (1 - zw) / ((z^e - 1)^n (w^e - 1)^n) up to the ceiling.
std::vector<BigInt> reconstruct_series(const PGPolynomial& pg, std::int64_t ceiling);

/// sum_{j=0}^{n-1} C(m - j + n - 1, n - 1) c_{0, j e}, with the binomial read
/// as a polynomial in m.
BigInt dim_h0_polynomial(const PGPolynomial& pg, std::int64_t m);
std::int64_t dim_h0_polynomial(const QuotientGroup& g, std::int64_t m);

}  // namespace kohn
