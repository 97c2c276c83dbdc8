#include "kohn/genfun.hpp"

#include <numeric>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for 64-bit inputs with these bases.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimeField {
  u64 p = 0;
  u64 root = 0;  // primitive e-th root of unity
};

// Primes p = k e + 1 below 2^62, searched downward, each with a primitive e-th root.
std::vector<PrimeField> fields_for(std::int64_t e, int count) {
  const u64 ue = static_cast<u64>(e);
  const auto factors = prime_factors(ue);
  std::vector<PrimeField> out;
  u64 k = ((u64{1} << 62) - 1) / ue;
  while (static_cast<int>(out.size()) < count && k > 0) {
    const u64 p = k * ue + 1;
    --k;
    if (!is_prime(p)) continue;
    for (u64 a = 2; a < p; ++a) {
      const u64 w = powmod(a, (p - 1) / ue, p);
      bool primitive = true;
      for (u64 f : factors)
        if (powmod(w, ue / f, p) == 1) primitive = false;
      if (primitive) {
        out.push_back({p, w});
        break;
      }
    }
  }
  if (static_cast<int>(out.size()) < count) throw InternalError("no suitable prime field found");
  return out;
}

// Complete homogeneous symmetric polynomials h_0..h_c of the given values mod p.
std::vector<u64> complete_homogeneous(const std::vector<u64>& xs, std::int64_t c, u64 p) {
  std::vector<u64> h(c + 1, 0);
  h[0] = 1;
  for (u64 x : xs)
    for (std::int64_t d = 1; d <= c; ++d) h[d] = (h[d] + mulmod(x, h[d - 1], p)) % p;
  return h;
}

// Harmonic F coefficients (times |G|) mod p on the (c+1)^2 grid.
std::vector<u64> scaled_series_mod(const QuotientGroup& g, std::int64_t e, std::int64_t c, const PrimeField& f) {
  const std::size_t w = static_cast<std::size_t>(c + 1);
  std::vector<u64> raw(w * w, 0);
  for (const auto& cls : g.classes()) {
    // 1/det(z - g) expands in z^{-1}; with z -> 1/z conventions the (p,q) coefficient
    // of the polynomial-space character is h_p(conj mu) h_q(mu).
    std::vector<u64> conj_vals, vals;
    for (const auto& a : cls.element.angles) {
      const u64 k = static_cast<u64>(a.numerator_over(e));
      vals.push_back(powmod(f.root, k, f.p));
      conj_vals.push_back(powmod(f.root, (static_cast<u64>(e) - k) % static_cast<u64>(e), f.p));
    }
    const auto hz = complete_homogeneous(conj_vals, c, f.p);
    const auto hw = complete_homogeneous(vals, c, f.p);
    const u64 mult = static_cast<u64>(cls.multiplicity) % f.p;
    for (std::size_t a = 0; a < w; ++a) {
      const u64 za = mulmod(mult, hz[a], f.p);
      for (std::size_t b = 0; b < w; ++b) raw[a * w + b] = (raw[a * w + b] + mulmod(za, hw[b], f.p)) % f.p;
    }
  }
  // Multiplying by (1 - zw) leaves the harmonic part.
  std::vector<u64> out(w * w, 0);
  for (std::size_t a = 0; a < w; ++a) {
    for (std::size_t b = 0; b < w; ++b) {
      u64 v = raw[a * w + b];
      if (a > 0 && b > 0) v = (v + f.p - raw[(a - 1) * w + (b - 1)]) % f.p;
      out[a * w + b] = v;
    }
  }
  return out;
}

std::int64_t centered(u64 v, u64 p) {
  return v > p / 2 ? -static_cast<std::int64_t>(p - v) : static_cast<std::int64_t>(v);
}

BigInt binomial_poly(std::int64_t x, std::int64_t k) {
  // x (x-1) ... (x-k+1) / k!, valid for any integer x.
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

std::int64_t exponent(const QuotientGroup& g) {
  std::int64_t e = 1;
  for (const auto& c : g.classes()) e = std::lcm(e, c.element.order());
  return e;
}

SeriesTable fg_coefficients(const QuotientGroup& g, std::int64_t ceiling) {
  if (ceiling < 0) throw DomainError("series ceiling must be nonnegative");
  const std::int64_t e = exponent(g);
  const auto fields = fields_for(e, 2);
  const auto r0 = scaled_series_mod(g, e, ceiling, fields[0]);
  const auto r1 = scaled_series_mod(g, e, ceiling, fields[1]);
  SeriesTable t;
  t.ceiling = ceiling;
  t.values.resize(r0.size());
  for (std::size_t i = 0; i < r0.size(); ++i) {
    const std::int64_t v0 = centered(r0[i], fields[0].p);
    const std::int64_t v1 = centered(r1[i], fields[1].p);
    if (v0 != v1) throw InternalError("prime fields disagree on a generating-function coefficient");
    if (v0 % g.order() != 0) throw NonIntegralDimension("character sum not divisible by |G| in F_G series");
    t.values[i] = v0 / g.order();
  }
  return t;
}

PGPolynomial pg_polynomial(const QuotientGroup& g, std::optional<std::int64_t> ceiling) {
  const int n = g.n();
  const std::int64_t e = exponent(g);
  const std::int64_t d = n * (e - 1);
  const std::int64_t c = ceiling.value_or(std::max<std::int64_t>(2 * n * e, 24));
  if (c < d) throw DomainError("ceiling must be at least the degree bound n(e-1) = " + std::to_string(d));
  const SeriesTable f = fg_coefficients(g, c);
  const std::size_t w = static_cast<std::size_t>(c + 1);

  // (x^e - 1)^n = sum_k C(n,k) (-1)^{n-k} x^{ke}
  std::vector<std::pair<std::int64_t, std::int64_t>> factor;
  for (int k = 0; k <= n; ++k) {
    std::int64_t b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    factor.emplace_back(k * e, (n - k) % 2 ? -b : b);
  }
  std::vector<BigInt> x(w * w, 0);
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      for (const auto& [shift, coef] : factor)
        if (static_cast<std::int64_t>(a) >= shift) x[a * w + b] += BigInt(coef) * f.at(a - shift, b);
  std::vector<BigInt> y(w * w, 0);
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      for (const auto& [shift, coef] : factor)
        if (static_cast<std::int64_t>(b) >= shift) y[a * w + b] += BigInt(coef) * x[a * w + b - shift];
  // Division by (1 - zw): running sums along diagonals.
  std::vector<BigInt> z(w * w, 0);
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b) z[a * w + b] = y[a * w + b] + (a && b ? z[(a - 1) * w + (b - 1)] : BigInt(0));

  PGPolynomial pg;
  pg.e = e;
  pg.n = n;
  pg.degree = d;
  pg.ceiling = c;
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      if ((static_cast<std::int64_t>(a) > d || static_cast<std::int64_t>(b) > d) && z[a * w + b] != 0)
        throw TruncationError("P_G coefficient at (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is nonzero beyond degree " + std::to_string(d));
  pg.coeffs.resize(static_cast<std::size_t>((d + 1) * (d + 1)));
  for (std::int64_t a = 0; a <= d; ++a)
    for (std::int64_t b = 0; b <= d; ++b) pg.coeffs[a * (d + 1) + b] = z[a * w + b];
  return pg;
}

std::vector<BigInt> reconstruct_series(const PGPolynomial& pg, std::int64_t ceiling) {
  const std::size_t w = static_cast<std::size_t>(ceiling + 1);
  const std::int64_t d = pg.degree;
  // 1/(x^e - 1)^n = (-1)^n sum_k C(k+n-1, n-1) x^{ke}
  std::vector<BigInt> inv(w, 0);
  for (std::int64_t k = 0; k * pg.e <= ceiling; ++k) {
    BigInt b = binomial_poly(k + pg.n - 1, pg.n - 1);
    inv[k * pg.e] = pg.n % 2 ? BigInt(-b) : b;
  }
  // P (1 - zw)
  std::vector<BigInt> t(w * w, 0);
  for (std::int64_t a = 0; a <= std::min<std::int64_t>(d + 1, ceiling); ++a)
    for (std::int64_t b = 0; b <= std::min<std::int64_t>(d + 1, ceiling); ++b) {
      BigInt v = (a <= d && b <= d) ? pg.at(a, b) : BigInt(0);
      if (a && b && a - 1 <= d && b - 1 <= d) v -= pg.at(a - 1, b - 1);
      t[a * w + b] = v;
    }
  std::vector<BigInt> u(w * w, 0);
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      for (std::size_t s = 0; s <= a; ++s)
        if (inv[s] != 0) u[a * w + b] += inv[s] * t[(a - s) * w + b];
  std::vector<BigInt> out(w * w, 0);
  for (std::size_t a = 0; a < w; ++a)
    for (std::size_t b = 0; b < w; ++b)
      for (std::size_t s = 0; s <= b; ++s)
        if (inv[s] != 0) out[a * w + b] += inv[s] * u[a * w + b - s];
  return out;
}

BigInt dim_h0_polynomial(const PGPolynomial& pg, std::int64_t m) {
  if (m < 0) throw DomainError("m must be nonnegative");
  BigInt total = 0;
  for (std::int64_t j = 0; j < pg.n; ++j) {
    if (j * pg.e > pg.degree) break;
    total += binomial_poly(m - j + pg.n - 1, pg.n - 1) * pg.at(0, j * pg.e);
  }
  return total;
}

std::int64_t dim_h0_polynomial(const QuotientGroup& g, std::int64_t m) {
  return dim_h0_polynomial(pg_polynomial(g), m).convert_to<std::int64_t>();
}

}  // namespace kohn
