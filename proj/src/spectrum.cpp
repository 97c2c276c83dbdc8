#include "kohn/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "kohn/characters.hpp"
#include "kohn/errors.hpp"

namespace kohn {

namespace {

BigInt big_binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void require_positive_cutoff(std::int64_t lambda) {
  if (lambda <= 0) throw DomainError("eigenvalue cutoff must be positive");
}

}  // namespace

std::int64_t eigenvalue_of(std::int64_t p, std::int64_t q, int n) { return 2 * q * (p + n - 1); }

std::vector<std::pair<std::int64_t, std::int64_t>> eigenvalue_contributors(std::int64_t lambda, int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (lambda <= 0 || lambda % 2 != 0) return out;
  const std::int64_t half = lambda / 2;
  for (std::int64_t q = 1; q * (n - 1) <= half; ++q) {
    if (half % q != 0) continue;
    const std::int64_t p = half / q - (n - 1);
    if (p >= 0) out.emplace_back(p, q);
  }
  return out;
}

std::int64_t SpectrumTable::counting(std::int64_t lambda) const {
  if (lambda > lambda_max) throw DomainError("counting function queried beyond the table cutoff");
  auto it = std::upper_bound(entries.begin(), entries.end(), lambda,
                             [](std::int64_t v, const SpectrumEntry& e) { return v < e.eigenvalue; });
  if (it == entries.begin()) return 0;
  return cumulative[static_cast<std::size_t>(it - entries.begin()) - 1];
}

std::int64_t SpectrumTable::multiplicity_of(std::int64_t lambda) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), lambda,
                             [](const SpectrumEntry& e, std::int64_t v) { return e.eigenvalue < v; });
  return it != entries.end() && it->eigenvalue == lambda ? it->multiplicity : 0;
}

Multiplicity multiplicity(const QuotientGroup& g, std::int64_t lambda) {
  if (lambda <= 0) throw DomainError("eigenvalue must be positive");
  Multiplicity m;
  for (const auto& [p, q] : eigenvalue_contributors(lambda, g.n())) {
    auto d = dim_invariant(g, p, q);
    m.multiplicity += d.dim;
    m.contributors.push_back(std::move(d));
  }
  return m;
}

SpectrumTable counting_function(const QuotientGroup& g, std::int64_t lambda_max) {
  require_positive_cutoff(lambda_max);
  const int n = g.n();
  std::map<std::int64_t, SpectrumEntry> by_value;
  for (std::int64_t q = 1; eigenvalue_of(0, q, n) <= lambda_max; ++q) {
    for (std::int64_t p = 0; eigenvalue_of(p, q, n) <= lambda_max; ++p) {
      const std::int64_t ev = eigenvalue_of(p, q, n);
      auto& e = by_value[ev];
      e.eigenvalue = ev;
      const std::int64_t d = dim_invariant(g, p, q).dim;
      e.multiplicity += d;
      if (d > 0) e.contributors.emplace_back(p, q);
    }
  }
  SpectrumTable t;
  t.group = g.name();
  t.n = n;
  t.lambda_max = lambda_max;
  std::int64_t running = 0;
  for (auto& [ev, e] : by_value) {
    std::sort(e.contributors.begin(), e.contributors.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    running += e.multiplicity;
    t.entries.push_back(std::move(e));
    t.cumulative.push_back(running);
  }
  return t;
}

std::int64_t sphere_counting(int n, std::int64_t lambda) {
  std::int64_t total = 0;
  for (std::int64_t q = 1; eigenvalue_of(0, q, n) <= lambda; ++q)
    for (std::int64_t p = 0; eigenvalue_of(p, q, n) <= lambda; ++p) total += sphere_dimension({p, q, n});
  return total;
}

BigInt xi_bound_floor(std::int64_t lf, int n) {
  if (n < 2) throw DomainError("n must be at least 2");
  if (lf < n - 1) throw DomainError("Xi is defined for lambda >= n - 1");
  BigInt first = 0;
  for (std::int64_t k = 0; k <= lf - n + 1; ++k)
    first += big_binom(k + n - 2, n - 2) * big_binom(lf / (k + n - 1) + n - 2, n - 1);
  BigInt second = 0;
  for (std::int64_t k = 1; k <= lf / (n - 1); ++k) second += big_binom(k + n - 2, n - 2) * big_binom(lf / k, n - 1);
  return first + second;
}

BigInt xi_bound(double lambda, int n) {
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  if (lambda < static_cast<double>(n - 1)) throw DomainError("Xi is defined for lambda >= n - 1");
  return xi_bound_floor(static_cast<std::int64_t>(std::floor(lambda)), n);
}

std::vector<std::int64_t> halving_grid(std::int64_t lambda_max, int k) {
  if (k < 1) throw DomainError("grid size must be at least 1");
  require_positive_cutoff(lambda_max);
  std::vector<std::int64_t> grid;
  for (int i = k - 1; i >= 0; --i) {
    const std::int64_t v = lambda_max >> i;
    if (v > 0 && (grid.empty() || grid.back() != v)) grid.push_back(v);
  }
  return grid;
}

WeylReport weyl_report(const QuotientGroup& g, const std::vector<std::int64_t>& grid) {
  if (grid.empty()) throw DomainError("Weyl grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0) throw DomainError("Weyl grid points must be positive");
    if (i && grid[i] <= grid[i - 1]) throw DomainError("Weyl grid must be strictly ascending");
  }
  const int n = g.n();
  const std::int64_t order = g.order();
  const SpectrumTable table = counting_function(g, grid.back());

  WeylReport r;
  r.group = g.name();
  r.order = order;
  r.n = n;
  for (std::int64_t lambda : grid) {
    WeylPoint pt;
    pt.lambda = lambda;
    pt.n_group = table.counting(lambda);
    pt.n_sphere = sphere_counting(n, lambda);
    pt.ratio = pt.n_group > 0 ? static_cast<double>(pt.n_sphere) / static_cast<double>(pt.n_group)
                              : std::numeric_limits<double>::quiet_NaN();
    // The bound is stated for N(2 mu) with mu = lambda / 2.
    const std::int64_t mu = lambda / 2;
    pt.xi = mu >= n - 1 ? xi_bound_floor(mu, n) : BigInt(0);
    BigInt dev = BigInt(order) * pt.n_group - pt.n_sphere;
    pt.deviation = dev < 0 ? BigInt(-dev) : dev;
    pt.bound = BigInt(order) * (order - 1) * pt.xi;
    pt.bound_ok = pt.deviation <= pt.bound;
    r.all_bounds_ok = r.all_bounds_ok && pt.bound_ok;
    r.points.push_back(std::move(pt));
  }
  r.weyl_constant = weyl_constant(n);
  r.sphere_volume = sphere_volume(n);
  r.predicted_limit = r.weyl_constant * r.sphere_volume / static_cast<double>(order);
  auto normalized = [n](const WeylPoint& p) {
    return static_cast<double>(p.n_group) / std::pow(static_cast<double>(p.lambda), n);
  };
  r.raw_limit = normalized(r.points.back());
  if (r.points.size() >= 2) {
    // Leading correction is O(lambda^{-1} log lambda); a 1/lambda Richardson step removes most of it.
    const auto& a = r.points[r.points.size() - 2];
    const auto& b = r.points.back();
    const double la = static_cast<double>(a.lambda), lb = static_cast<double>(b.lambda);
    r.extrapolated_limit = (lb * normalized(b) - la * normalized(a)) / (lb - la);
  } else {
    r.extrapolated_limit = r.raw_limit;
  }
  return r;
}

SpectrumComparison compare_spectra(const QuotientGroup& a, const QuotientGroup& b, std::int64_t lambda_max) {
  if (a.n() != b.n()) throw DomainError("groups act on spheres of different dimension");
  const SpectrumTable ta = counting_function(a, lambda_max);
  const SpectrumTable tb = counting_function(b, lambda_max);
  SpectrumComparison c;
  c.lambda_max = lambda_max;
  // Same n means the same realized eigenvalue list.
  for (std::size_t i = 0; i < ta.entries.size(); ++i) {
    if (ta.entries[i].multiplicity != tb.entries[i].multiplicity) {
      c.isospectral = false;
      c.eigenvalue = ta.entries[i].eigenvalue;
      c.mult_a = ta.entries[i].multiplicity;
      c.mult_b = tb.entries[i].multiplicity;
      break;
    }
  }
  return c;
}

}  // namespace kohn
