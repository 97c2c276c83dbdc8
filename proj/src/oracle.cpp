#include "kohn/oracle.hpp"

#include <cmath>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

using cd = std::complex<double>;
// Exponent vector over the 2n variables z_1..z_n, zbar_1..zbar_n.
using Poly = std::map<std::vector<int>, cd>;

void compositions(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(n, total - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, std::int64_t total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur;
  compositions(n, static_cast<int>(total), cur, out);
  return out;
}

double factorial_product(const std::vector<int>& v) {
  double r = 1;
  for (int x : v)
    for (int i = 2; i <= x; ++i) r *= i;
  return r;
}

double norm_factor(const Monomial& m) { return std::sqrt(factorial_product(m.a) * factorial_product(m.b)); }

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Poly multiply_linear(const Poly& f, const std::vector<cd>& coeffs, int offset) {
  Poly out;
  for (const auto& [exps, c] : f) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == cd(0)) continue;
      auto e = exps;
      e[offset + j] += 1;
      out[e] += c * coeffs[j];
    }
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, std::int64_t p, std::int64_t q) {
  std::vector<Monomial> out;
  const auto as = compositions(n, p);
  const auto bs = compositions(n, q);
  for (const auto& a : as)
    for (const auto& b : bs) out.push_back({a, b});
  return out;
}

BidegreeSpace build_space(int n, std::int64_t p, std::int64_t q, std::int64_t max_basis) {
  if (n < 1 || p < 0 || q < 0) throw DomainError("invalid bidegree space parameters");
  BidegreeSpace s;
  s.n = n;
  s.p = p;
  s.q = q;
  s.basis = monomial_basis(n, p, q);
  if (static_cast<std::int64_t>(s.basis.size()) > max_basis)
    throw SizeLimit("monomial basis of size " + std::to_string(s.basis.size()) + " exceeds the limit " +
                    std::to_string(max_basis));
  const auto lower = monomial_basis(n, p - 1, q - 1);
  const auto lower_idx = index_of(lower);
  s.laplacian = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(s.basis.size()));
  for (std::size_t c = 0; c < s.basis.size(); ++c) {
    const auto& m = s.basis[c];
    for (int i = 0; i < n; ++i) {
      if (m.a[i] == 0 || m.b[i] == 0) continue;
      Monomial t = m;
      t.a[i] -= 1;
      t.b[i] -= 1;
      // 4 d^2/dz_i dzbar_i maps z^a zbar^b to 4 a_i b_i z^{a-e_i} zbar^{b-e_i}; in normalized
      // coordinates the factor becomes 4 sqrt(a_i b_i).
      s.laplacian(static_cast<Eigen::Index>(lower_idx.at(t)), static_cast<Eigen::Index>(c)) =
          4.0 * std::sqrt(static_cast<double>(m.a[i]) * m.b[i]);
    }
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(s.basis.size());
  if (s.laplacian.rows() == 0) {
    s.harmonic_basis = Eigen::MatrixXcd::Identity(cols, cols);
    return s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.laplacian, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, sv(0))) ++rank;
  s.harmonic_basis = svd.matrixV().rightCols(cols - rank).cast<cd>();
  return s;
}

Eigen::MatrixXcd action_matrix(int n, std::int64_t p, std::int64_t q, const Eigen::MatrixXcd& g) {
  if (g.rows() != n || g.cols() != n) throw DomainError("matrix size does not match n");
  const auto basis = monomial_basis(n, p, q);
  const auto idx = index_of(basis);
  const Eigen::MatrixXcd h = g.inverse();
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto& m = basis[c];
    Poly f{{std::vector<int>(2 * n, 0), cd(1)}};
    for (int i = 0; i < n; ++i) {
      // (h z)_i = sum_j h_ij z_j and its conjugate in the zbar variables.
      std::vector<cd> row(n), conj_row(n);
      for (int j = 0; j < n; ++j) {
        row[j] = h(i, j);
        conj_row[j] = std::conj(h(i, j));
      }
      for (int k = 0; k < m.a[i]; ++k) f = multiply_linear(f, row, 0);
      for (int k = 0; k < m.b[i]; ++k) f = multiply_linear(f, conj_row, n);
    }
    const double from = norm_factor(m);
    for (const auto& [exps, coef] : f) {
      if (std::abs(coef) < 1e-15) continue;
      Monomial t{std::vector<int>(exps.begin(), exps.begin() + n), std::vector<int>(exps.begin() + n, exps.end())};
      out(static_cast<Eigen::Index>(idx.at(t)), c) += coef * norm_factor(t) / from;
    }
  }
  return out;
}

std::vector<Eigen::MatrixXcd> enumerate_matrix_group(const std::vector<Eigen::MatrixXcd>& generators,
                                                     std::int64_t max_order) {
  if (generators.empty()) throw DomainError("no generator matrices");
  const Eigen::Index n = generators.front().rows();
  std::vector<Eigen::MatrixXcd> elems{Eigen::MatrixXcd::Identity(n, n)};
  auto known = [&](const Eigen::MatrixXcd& m) {
    for (const auto& e : elems)
      if ((e - m).cwiseAbs().maxCoeff() < 1e-8) return true;
    return false;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Eigen::MatrixXcd next = elems[head] * g;
      if (known(next)) continue;
      elems.push_back(std::move(next));
      if (static_cast<std::int64_t>(elems.size()) > max_order)
        throw ClosureMismatch("matrix closure exceeds the catalog order " + std::to_string(max_order));
    }
  }
  return elems;
}

BruteForceResult invariant_dim_bruteforce_report(const QuotientGroup& g, std::int64_t p, std::int64_t q) {
  const int n = g.n();
  const auto elems = enumerate_matrix_group(g.generators(), g.order());
  if (static_cast<std::int64_t>(elems.size()) != g.order())
    throw ClosureMismatch("matrix closure has order " + std::to_string(elems.size()) + ", catalog order is " +
                          std::to_string(g.order()));
  const BidegreeSpace space = build_space(n, p, q);
  const Eigen::Index dim = static_cast<Eigen::Index>(space.basis.size());
  BruteForceResult r;
  r.group_order = static_cast<std::int64_t>(elems.size());
  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& e : elems) {
    const Eigen::MatrixXcd a = action_matrix(n, p, q, e);
    r.unitarity_error = std::max(r.unitarity_error, (a.adjoint() * a - Eigen::MatrixXcd::Identity(dim, dim)).norm());
    avg += a;
  }
  avg /= static_cast<double>(elems.size());
  r.idempotence_error = (avg * avg - avg).norm();
  if (p > 0 && q > 0) {
    const Eigen::MatrixXcd lap = space.laplacian.cast<cd>();
    for (const auto& gen : g.generators()) {
      const Eigen::MatrixXcd upper = action_matrix(n, p, q, gen);
      const Eigen::MatrixXcd lower = action_matrix(n, p - 1, q - 1, gen);
      r.commutator_error = std::max(r.commutator_error, (lap * upper - lower * lap).norm());
    }
  }
  const Eigen::MatrixXcd& k = space.harmonic_basis;
  if (k.cols() == 0) return r;
  const Eigen::MatrixXcd restricted = k.adjoint() * avg * k;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(restricted);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 0.5) ++r.dim;
  return r;
}

std::int64_t invariant_dim_bruteforce(const QuotientGroup& g, std::int64_t p, std::int64_t q) {
  return invariant_dim_bruteforce_report(g, p, q).dim;
}

std::complex<double> trace_bruteforce(const Eigen::MatrixXcd& g, std::int64_t p, std::int64_t q) {
  const int n = static_cast<int>(g.rows());
  std::complex<double> t = action_matrix(n, p, q, g).trace();
  if (p > 0 && q > 0) t -= action_matrix(n, p - 1, q - 1, g).trace();
  return t;
}

}  // namespace kohn
