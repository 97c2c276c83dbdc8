#include "kohn/characters.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

// Visits every composition of `total` into `parts` nonnegative integers.
void for_each_composition(std::int64_t total, int parts,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> c(parts, 0);
  if (parts == 0) {
    if (total == 0) visit(c);
    return;
  }
  c[parts - 1] = total;
  while (true) {
    visit(c);
    // Move one unit leftward: find rightmost nonzero entry other than the first.
    int i = parts - 1;
    while (i > 0 && c[i] == 0) --i;
    if (i == 0) return;
    const std::int64_t v = c[i];
    c[i] = 0;
    c[i - 1] += 1;
    c[parts - 1] = v - 1;
  }
}

const std::vector<std::complex<long double>>& unit_roots(std::int64_t d) {
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::vector<std::complex<long double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<long double>> roots(d);
  for (std::int64_t r = 0; r < d; ++r) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(d);
    roots[r] = {std::cos(t), std::sin(t)};
  }
  return cache.emplace(d, std::move(roots)).first->second;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

void for_each_admissible_pair(const Bidegree& bd,
                              const std::function<void(const std::vector<std::int64_t>&,
                                                       const std::vector<std::int64_t>&)>& visit) {
  if (bd.n < 2) throw DomainError("ambient dimension n must be at least 2");
  if (bd.p < 0 || bd.q < 0) return;
  std::vector<std::vector<std::int64_t>> betas;
  for_each_composition(bd.q, bd.n, [&](const auto& b) { betas.push_back(b); });
  for_each_composition(bd.p, bd.n, [&](const std::vector<std::int64_t>& a) {
    for (const auto& b : betas)
      if (a[0] == 0 || b[0] == 0) visit(a, b);
  });
}

std::vector<AdmissiblePair> admissible_pairs(const Bidegree& bd) {
  std::vector<AdmissiblePair> out;
  for_each_admissible_pair(bd, [&](const auto& a, const auto& b) { out.push_back({a, b}); });
  return out;
}

std::int64_t sphere_dimension(const Bidegree& bd) {
  if (bd.p < 0 || bd.q < 0) return 0;
  const int n = bd.n;
  return binom(bd.p + n - 1, n - 1) * binom(bd.q + n - 1, n - 1) - binom(bd.p + n - 2, n - 1) * binom(bd.q + n - 2, n - 1);
}

CharacterValue::CharacterValue(std::int64_t denominator, std::vector<std::int64_t> counts)
    : denominator_(denominator), counts_(std::move(counts)) {
  if (static_cast<std::int64_t>(counts_.size()) != denominator_)
    throw InternalError("character counts must have one slot per residue");
  const auto& roots = unit_roots(denominator_);
  std::complex<long double> v = 0;
  for (std::int64_t r = 0; r < denominator_; ++r)
    if (counts_[r] != 0) v += static_cast<long double>(counts_[r]) * roots[r];
  value_ = v;
}

std::map<AngleFraction, std::int64_t> CharacterValue::terms() const {
  std::map<AngleFraction, std::int64_t> out;
  for (std::int64_t r = 0; r < denominator_; ++r)
    if (counts_[r] != 0) out[AngleFraction(r, denominator_)] += counts_[r];
  return out;
}

std::int64_t CharacterValue::term_count() const { return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0}); }

std::int64_t common_denominator(const GroupElement& g) {
  std::int64_t d = 1;
  for (const auto& a : g.angles) d = std::lcm(d, a.denominator());
  return d;
}

CharacterValue char_general(const Bidegree& bd, const GroupElement& g) {
  if (static_cast<int>(g.dimension()) != bd.n) throw DomainError("element dimension does not match n");
  const std::int64_t d = common_denominator(g);
  std::vector<std::int64_t> k;
  for (const auto& a : g.angles) k.push_back(a.numerator_over(d));

  // Residue histograms of conj(mu)^alpha split by alpha_1 = 0, and of mu^beta split by beta_1 = 0.
  auto histogram = [&](std::int64_t total, int sign) {
    std::vector<std::int64_t> first_zero(d, 0), first_pos(d, 0);
    for_each_composition(total, bd.n, [&](const std::vector<std::int64_t>& c) {
      std::int64_t r = 0;
      for (int i = 0; i < bd.n; ++i) r = mod(r + sign * c[i] * k[i], d);
      (c[0] == 0 ? first_zero : first_pos)[r] += 1;
    });
    return std::pair{first_zero, first_pos};
  };
  const auto [a0, a1] = histogram(bd.p, -1);
  const auto [b0, b1] = histogram(bd.q, +1);

  std::vector<std::int64_t> counts(d, 0);
  for (std::int64_t x = 0; x < d; ++x) {
    if (a0[x] == 0 && a1[x] == 0) continue;
    for (std::int64_t y = 0; y < d; ++y) {
      // alpha_1 = 0 pairs with any beta; alpha_1 > 0 needs beta_1 = 0.
      const std::int64_t c = a0[x] * (b0[y] + b1[y]) + a1[x] * b0[y];
      if (c) counts[(x + y) % d] += c;
    }
  }
  return CharacterValue(d, std::move(counts));
}

CharacterValue char_su2_closed(const Bidegree& bd, const GroupElement& g) {
  if (bd.n != 2 || g.dimension() != 2) throw DomainError("closed-form character requires n = 2");
  const std::int64_t d = common_denominator(g);
  const std::int64_t k1 = g.angles[0].numerator_over(d);
  const std::int64_t k2 = g.angles[1].numerator_over(d);
  const std::int64_t s = bd.p + bd.q;
  std::vector<std::int64_t> counts(d, 0);
  const std::int64_t start = mod(bd.q * k2 - bd.p * k1, d);
  const std::int64_t step = mod(k1 - k2, d);
  if (step == 0) {
    counts[start] = s + 1;
    return CharacterValue(d, std::move(counts));
  }
  // The residues start + j*step cycle with period d / gcd(step, d).
  const std::int64_t period = d / std::gcd(step, d);
  const std::int64_t full = (s + 1) / period;
  const std::int64_t extra = (s + 1) % period;
  std::int64_t r = start;
  for (std::int64_t j = 0; j < period; ++j) {
    counts[r] += full + (j < extra ? 1 : 0);
    r = (r + step) % d;
  }
  return CharacterValue(d, std::move(counts));
}

}  // namespace kohn
