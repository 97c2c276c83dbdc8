#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kohn/group_catalog.hpp"

namespace kohn {

/// Denominator convention in C_{p,q}: 2 matches sqrt(1+mu)/lambda with the
/// Box_b eigenvalue lambda = 2q(p+n-1); 4 is the alternative normalization.
enum class SobolevConvention { Half = 2, Quarter = 4 };

/// sqrt(1 + (p+q)(p+q+2n-2)) / (D q (p+n-1)). Requires q >= 1.
double c_pq(std::int64_t p, std::int64_t q, int n, SobolevConvention d = SobolevConvention::Half);

/// max over p+q = s, q >= 1 of C_{p,q}; attained at q = 1.
double line_envelope(std::int64_t s, int n, SobolevConvention d = SobolevConvention::Half);

struct SobolevConstant {
  double value = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  SobolevConvention convention = SobolevConvention::Half;
  std::int64_t ceiling = 0;
  double tail_sup = 0;  // sup of line_envelope over s > ceiling
  bool certified = false;
};

/// Max of C_{p,q} over q >= 1, p+q <= ceiling with dim H^G_{p,q} > 0. Ties go
/// to the lexicographically smallest (p,q). Certified when every line beyond
/// the ceiling stays below the maximum.
SobolevConstant c_group(const QuotientGroup& g, std::int64_t ceiling,
                        SobolevConvention d = SobolevConvention::Half);

/// (m, C_{0, m e(G)}) for m <= m_max with dim H^G_{0, m e(G)} >= 1.
std::vector<std::pair<std::int64_t, double>> greens_lower_witness(const QuotientGroup& g, std::int64_t m_max,
                                                                  SobolevConvention d = SobolevConvention::Half);

}  // namespace kohn
