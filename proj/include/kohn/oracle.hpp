#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "kohn/group_catalog.hpp"

namespace kohn {

/// z^a zbar^b with |a| = p and |b| = q.
struct Monomial {
  std::vector<int> a;
  std::vector<int> b;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// All monomials of bidegree (p,q) in n variables, in a fixed order.
std::vector<Monomial> monomial_basis(int n, std::int64_t p, std::int64_t q);

/// Bidegree-(p,q) polynomials in the Fischer-normalized monomial basis
/// z^a zbar^b / sqrt(a! b!), where unitary changes of variables act by
/// unitary matrices, plus the Laplacian 4 sum d^2/dz_i dzbar_i into bidegree
/// (p-1, q-1) and an orthonormal basis of its kernel.
struct BidegreeSpace {
  int n = 2;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<Monomial> basis;
  Eigen::MatrixXd laplacian;        // rows: bidegree (p-1, q-1) basis
  Eigen::MatrixXcd harmonic_basis;  // orthonormal columns spanning the kernel

  std::int64_t kernel_dim() const { return harmonic_basis.cols(); }
};

/// Throws SizeLimit if the monomial basis exceeds max_basis.
BidegreeSpace build_space(int n, std::int64_t p, std::int64_t q, std::int64_t max_basis = 2000);

/// Matrix of f -> f o g^{-1} on the normalized monomial basis of bidegree (p,q).
Eigen::MatrixXcd action_matrix(int n, std::int64_t p, std::int64_t q, const Eigen::MatrixXcd& g);

/// All products of the generators, compared with tolerance 1e-8. Throws
/// ClosureMismatch if more than max_order elements appear.
std::vector<Eigen::MatrixXcd> enumerate_matrix_group(const std::vector<Eigen::MatrixXcd>& generators,
                                                     std::int64_t max_order);

struct BruteForceResult {
  std::int64_t dim = 0;
  std::int64_t group_order = 0;
  double idempotence_error = 0;  // ||P^2 - P|| of the averaged operator
  double unitarity_error = 0;    // max over elements of ||A^* A - I||
  double commutator_error = 0;   // max over generators of ||L A - A' L||
};

/// Rank of the group-averaged action restricted to the harmonic kernel.
/// Throws ClosureMismatch if matrix closure does not reproduce the catalog order.
BruteForceResult invariant_dim_bruteforce_report(const QuotientGroup& g, std::int64_t p, std::int64_t q);
std::int64_t invariant_dim_bruteforce(const QuotientGroup& g, std::int64_t p, std::int64_t q);

/// tr(g on bidegree (p,q)) - tr(g on bidegree (p-1,q-1)).
std::complex<double> trace_bruteforce(const Eigen::MatrixXcd& g, std::int64_t p, std::int64_t q);

}  // namespace kohn
