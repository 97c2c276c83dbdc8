#pragma once

// Quantified property checks. Each returns a list of violations, empty when
// the property holds on the whole grid.

#include <cstdint>
#include <string>
#include <vector>

#include "catalog_grid.hpp"
#include "kohn/cli.hpp"
#include "kohn/errors.hpp"
#include "kohn/invariant_dims.hpp"
#include "kohn/spectrum.hpp"

namespace props {

using Violations = std::vector<std::string>;

inline std::string cell(const std::string& g, std::int64_t p, std::int64_t q) {
  return g + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
}

inline bool contains_minus_identity(const kohn::QuotientGroup& g) {
  return g.count_with_angles(std::vector<kohn::AngleFraction>(g.n(), kohn::AngleFraction(1, 2))) > 0;
}

// p+q odd gives dimension 0 when -I is in the group. Also reports how many
// groups on the grid contain -I so a vacuous pass is visible.
inline Violations parity_vanishing(std::int64_t pq_max, int* groups_with_minus_i = nullptr) {
  Violations bad;
  int count = 0;
  for (const auto& spec : grid::n2_families()) {
    const auto g = kohn::cli::parse_group_spec(spec);
    if (!contains_minus_identity(g)) continue;
    ++count;
    for (std::int64_t p = 0; p <= pq_max; ++p)
      for (std::int64_t q = (p + 1) % 2; p + q <= pq_max; q += 2)
        if (kohn::dim_invariant(g, p, q).dim != 0) bad.push_back(cell(spec, p, q));
  }
  if (groups_with_minus_i) *groups_with_minus_i = count;
  return bad;
}

inline Violations pq_symmetry(std::int64_t pq_max) {
  Violations bad;
  auto specs = grid::n2_families();
  for (const auto& s : grid::n3_lens(5)) specs.push_back(s);
  for (const auto& spec : specs) {
    const auto g = kohn::cli::parse_group_spec(spec);
    for (std::int64_t p = 0; p <= pq_max; ++p)
      for (std::int64_t q = p + 1; p + q <= pq_max; ++q)
        if (kohn::dim_invariant(g, p, q).dim != kohn::dim_invariant(g, q, p).dim) bad.push_back(cell(spec, p, q));
  }
  return bad;
}

// H inside G forces dim H^G <= dim H^H on every cell.
inline Violations subgroup_monotonicity(std::int64_t pq_max) {
  Violations bad;
  for (const auto& [small, large] : grid::subgroup_pairs()) {
    const auto h = kohn::cli::parse_group_spec(small);
    const auto g = kohn::cli::parse_group_spec(large);
    if (g.order() % h.order() != 0) bad.push_back(small + " order does not divide " + large);
    for (std::int64_t p = 0; p <= pq_max; ++p)
      for (std::int64_t q = 0; q <= pq_max; ++q)
        if (kohn::dim_invariant(g, p, q).dim > kohn::dim_invariant(h, p, q).dim)
          bad.push_back(small + " < " + large + " at " + cell("", p, q));
  }
  return bad;
}

// Valid parameters act freely; parameters that create fixed points are refused.
inline Violations free_action() {
  Violations bad;
  auto specs = grid::n2_families();
  for (const auto& s : grid::n3_lens(5)) specs.push_back(s);
  for (const auto& spec : specs) {
    const auto g = kohn::cli::parse_group_spec(spec);
    const auto check = kohn::check_free_action(g);
    if (!check.acts_freely) bad.push_back(spec + " has a fixed point");
    for (const auto& c : g.classes())
      if (!c.element.is_identity() && c.element.has_fixed_points()) bad.push_back(spec + " class with eigenvalue 1");
  }
  for (const char* spec : {"lens:6:1,2", "lens:4:1,2,3", "bindih:6xC:3", "2TxC:3", "2IxC:5", "cycsemi:3:6",
                           "cycsemi:5:10", "2OxC:9"}) {
    try {
      kohn::cli::parse_group_spec(spec);
      bad.push_back(std::string(spec) + " accepted");
    } catch (const kohn::NonFreeAction&) {
    }
  }
  const auto fixed = kohn::detail::diagonal_cyclic_unchecked(3, {0, 1});
  if (kohn::check_free_action(fixed).acts_freely) bad.push_back("diag(1, w) reported free");
  return bad;
}

// N_G is nondecreasing, bounded by N_S, and shrinks when the group grows.
inline Violations counting_monotonicity(std::int64_t lambda_max) {
  Violations bad;
  for (const auto& spec : grid::n2_families()) {
    const auto g = kohn::cli::parse_group_spec(spec);
    const auto t = kohn::counting_function(g, lambda_max);
    for (std::size_t i = 1; i < t.cumulative.size(); ++i)
      if (t.cumulative[i] < t.cumulative[i - 1]) bad.push_back(spec + " N decreases");
    for (std::int64_t lambda = 1; lambda <= lambda_max; lambda += 7)
      if (t.counting(lambda) > kohn::sphere_counting(2, lambda)) bad.push_back(spec + " N_G > N_S");
  }
  for (const auto& [small, large] : grid::subgroup_pairs()) {
    const auto th = kohn::counting_function(kohn::cli::parse_group_spec(small), lambda_max);
    const auto tg = kohn::counting_function(kohn::cli::parse_group_spec(large), lambda_max);
    for (std::int64_t lambda = 1; lambda <= lambda_max; ++lambda)
      if (tg.counting(lambda) > th.counting(lambda)) bad.push_back(small + " < " + large + " N at " + std::to_string(lambda));
  }
  return bad;
}

}  // namespace props
