#include "kohn/sobolev.hpp"

#include <algorithm>
#include <cmath>

#include "kohn/errors.hpp"
#include "kohn/genfun.hpp"
#include "kohn/invariant_dims.hpp"

namespace kohn {

namespace {

constexpr double kSlack = 1e-12;

double denominator(SobolevConvention d) { return static_cast<double>(static_cast<int>(d)); }

}  // namespace

double c_pq(std::int64_t p, std::int64_t q, int n, SobolevConvention d) {
  if (q < 1) throw DomainError("C_{p,q} needs q >= 1");
  if (p < 0) throw DomainError("C_{p,q} needs p >= 0");
  if (n < 2) throw DomainError("n must be at least 2");
  const double s = static_cast<double>(p + q);
  const double mu = s * (s + 2.0 * n - 2.0);
  return std::sqrt(1.0 + mu) / (denominator(d) * static_cast<double>(q) * static_cast<double>(p + n - 1));
}

double line_envelope(std::int64_t s, int n, SobolevConvention d) {
  if (s < 1) throw DomainError("line index must be at least 1");
  // q (p+n-1) = q (s-q+n-1) is concave in q, so its minimum over 1 <= q <= s is at an end; q = 1 wins.
  return c_pq(s - 1, 1, n, d);
}

SobolevConstant c_group(const QuotientGroup& g, std::int64_t ceiling, SobolevConvention d) {
  if (ceiling < 2) throw DomainError("Sobolev ceiling must be at least 2");
  const int n = g.n();
  SobolevConstant out;
  out.convention = d;
  out.ceiling = ceiling;
  bool found = false;
  for (std::int64_t p = 0; p < ceiling; ++p) {
    for (std::int64_t q = 1; p + q <= ceiling; ++q) {
      const double v = c_pq(p, q, n, d);
      if (found && v <= out.value) continue;
      if (dim_invariant(g, p, q).dim == 0) continue;
      out.value = v;
      out.p = p;
      out.q = q;
      found = true;
    }
  }
  if (!found) throw DomainError("no nonvanishing invariant bidegree up to the ceiling");
  // With t = s + n - 2 the envelope squared is ((t+1)^2 - (n-1)^2 + 1) / (D t)^2, which increases
  // up to t = (n-1)^2 - 2 and decreases afterwards.
  const std::int64_t turn = std::max<std::int64_t>((n - 1) * (n - 1) - n, 0);
  double tail = 0;
  for (std::int64_t s = ceiling + 1; s <= std::max(ceiling + 1, turn + 1); ++s) tail = std::max(tail, line_envelope(s, n, d));
  out.tail_sup = tail;
  out.certified = tail < out.value - kSlack;
  return out;
}

std::vector<std::pair<std::int64_t, double>> greens_lower_witness(const QuotientGroup& g, std::int64_t m_max,
                                                                  SobolevConvention d) {
  if (m_max < 1) throw DomainError("m_max must be at least 1");
  const std::int64_t e = exponent(g);
  const PGPolynomial pg = pg_polynomial(g);
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    if (dim_h0_polynomial(pg, m) >= 1) out.emplace_back(m, c_pq(0, m * e, g.n(), d));
  }
  return out;
}

}  // namespace kohn
