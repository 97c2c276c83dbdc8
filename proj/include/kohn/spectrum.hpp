#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kohn/group_catalog.hpp"
#include "kohn/invariant_dims.hpp"
#include "kohn/quadrature.hpp"

namespace kohn {

using BigInt = boost::multiprecision::cpp_int;

/// The Box_b eigenvalue 2q(p+n-1) on H_{p,q}.
std::int64_t eigenvalue_of(std::int64_t p, std::int64_t q, int n);

/// All (p,q) with q >= 1 and 2q(p+n-1) = lambda, ordered by increasing q.
std::vector<std::pair<std::int64_t, std::int64_t>> eigenvalue_contributors(std::int64_t lambda, int n);

struct SpectrumEntry {
  std::int64_t eigenvalue = 0;
  std::int64_t multiplicity = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> contributors;  // bidegrees with dim H^G_{p,q} > 0
};

/// Positive Box_b spectrum up to a cutoff. Entries are sorted by eigenvalue;
/// zero-multiplicity eigenvalues of the sphere are kept.
struct SpectrumTable {
  std::string group;
  int n = 2;
  std::int64_t lambda_max = 0;
  std::vector<SpectrumEntry> entries;
  std::vector<std::int64_t> cumulative;  // cumulative[i] = sum of multiplicities of entries[0..i]

  /// N(lambda): eigenvalues <= lambda with multiplicity, for lambda <= lambda_max.
  std::int64_t counting(std::int64_t lambda) const;
  /// Multiplicity of lambda, 0 if it is not a sphere eigenvalue.
  std::int64_t multiplicity_of(std::int64_t lambda) const;
};

struct Multiplicity {
  std::int64_t multiplicity = 0;
  std::vector<BidegreeDim> contributors;
};

Multiplicity multiplicity(const QuotientGroup& g, std::int64_t lambda);

SpectrumTable counting_function(const QuotientGroup& g, std::int64_t lambda_max);

/// N_{S^{2n-1}}(lambda) by direct summation of sphere dimensions.
std::int64_t sphere_counting(int n, std::int64_t lambda);

/// The error bound Xi_lambda. Only floor(lambda) enters. Throws DomainError
/// for lambda < n - 1.
BigInt xi_bound(double lambda, int n);
BigInt xi_bound_floor(std::int64_t lambda_floor, int n);

struct WeylPoint {
  std::int64_t lambda = 0;
  std::int64_t n_group = 0;
  std::int64_t n_sphere = 0;
  double ratio = 0;   // N_S / N_G; NaN when N_G = 0
  BigInt xi;          // Xi at lambda / 2
  BigInt deviation;   // | |G| N_G - N_S |
  BigInt bound;       // |G| (|G| - 1) Xi
  bool bound_ok = true;
};

struct WeylReport {
  std::string group;
  std::int64_t order = 1;
  int n = 2;
  std::vector<WeylPoint> points;
  double weyl_constant = 0;
  double sphere_volume = 0;
  double predicted_limit = 0;     // constant * Vol / |G|
  double raw_limit = 0;           // N_G / lambda^n at the largest grid point
  double extrapolated_limit = 0;  // Richardson step on the two largest points
  bool all_bounds_ok = true;
};

/// Grid must be ascending positive integers.
WeylReport weyl_report(const QuotientGroup& g, const std::vector<std::int64_t>& grid);

/// lambda_max / 2^{k-1}, ..., lambda_max / 2, lambda_max.
std::vector<std::int64_t> halving_grid(std::int64_t lambda_max, int k);

struct SpectrumComparison {
  std::int64_t lambda_max = 0;
  bool isospectral = true;
  std::optional<std::int64_t> eigenvalue;
  std::int64_t mult_a = 0;
  std::int64_t mult_b = 0;
};

SpectrumComparison compare_spectra(const QuotientGroup& a, const QuotientGroup& b, std::int64_t lambda_max);

}  // namespace kohn
