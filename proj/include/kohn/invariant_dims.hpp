#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kohn/characters.hpp"
#include "kohn/group_catalog.hpp"

namespace kohn {

struct BidegreeDim {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t dim = 0;
  std::string group;
};

/// (1/|G|) sum_g chi_{H_{p,q}}(g), accumulated in long double and collapsed to
/// an integer. Throws NonIntegralDimension if the average is not within 1e-6
/// of a nonnegative integer.
BidegreeDim dim_invariant(const QuotientGroup& g, std::int64_t p, std::int64_t q);

/// Piecewise closed forms for the SU(2) families and their U(2) extensions.
/// Throws UnsupportedFamily when no closed form is known (lens groups other
/// than L(m;1,-1) type, n != 2).
BidegreeDim dim_closed_form(const QuotientGroup& g, std::int64_t p, std::int64_t q);
std::int64_t closed_form_dimension(const FamilyTag& tag, int n, std::int64_t p, std::int64_t q);

/// True if dim_closed_form is defined for this group.
bool has_closed_form(const FamilyTag& tag, int n);

struct ReconcileMismatch {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t averaged = 0;
  std::int64_t closed_form = 0;
};

struct ReconcileReport {
  std::string group;
  std::int64_t ceiling = 0;
  std::int64_t cells_checked = 0;
  std::vector<ReconcileMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares both paths on every (p,q) with p+q <= ceiling.
ReconcileReport reconcile(const QuotientGroup& g, std::int64_t pq_ceiling);

}  // namespace kohn
