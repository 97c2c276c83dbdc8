#pragma once

// Test-side reference computations. They share no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "kohn/group_catalog.hpp"

namespace oracle_ref {

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All exponent vectors of length n summing to total, by plain recursion.
inline void multiindices(int n, std::int64_t total, std::vector<std::int64_t>& cur,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    multiindices(n, total - v, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> multiindices(int n, std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  if (total >= 0) multiindices(n, total, cur, out);
  return out;
}

// Character as a plain complex double sum over admissible pairs.
inline std::complex<double> character(int n, std::int64_t p, std::int64_t q, const std::vector<double>& turns) {
  std::complex<double> sum = 0;
  for (const auto& a : multiindices(n, p)) {
    for (const auto& b : multiindices(n, q)) {
      if (a[0] != 0 && b[0] != 0) continue;
      double t = 0;
      for (int i = 0; i < n; ++i) t += static_cast<double>(b[i] - a[i]) * turns[i];
      sum += std::polar(1.0, 2 * std::numbers::pi * t);
    }
  }
  return sum;
}

inline std::vector<double> turns_of(const kohn::GroupElement& g) {
  std::vector<double> t;
  for (const auto& a : g.angles) t.push_back(a.turns());
  return t;
}

// Invariant dimension by naive double-precision averaging of oracle characters.
inline std::int64_t invariant_dim(const kohn::QuotientGroup& g, std::int64_t p, std::int64_t q) {
  std::complex<double> sum = 0;
  for (const auto& c : g.classes()) sum += static_cast<double>(c.multiplicity) * character(g.n(), p, q, turns_of(c.element));
  return std::llround(sum.real() / static_cast<double>(g.order()));
}

}  // namespace oracle_ref
