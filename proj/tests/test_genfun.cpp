#include <gtest/gtest.h>

#include "kohn/errors.hpp"
#include "kohn/genfun.hpp"
#include "kohn/invariant_dims.hpp"

using namespace kohn;

namespace {

std::vector<QuotientGroup> sample() {
  return {make_cyclic(1), make_cyclic(6), make_binary_dihedral(2), make_binary_tetrahedral(),
          make_binary_icosahedral(), make_product_with_center(make_binary_dihedral(2), 3),
          make_cyclic_semidirect(3, 2), make_q_semidirect(1), make_lens(5, {1, 2})};
}

}  // namespace

TEST(Genfun, Exponent) {
  EXPECT_EQ(exponent(make_cyclic(6)), 6);
  EXPECT_EQ(exponent(make_binary_dihedral(2)), 4);
  EXPECT_EQ(exponent(make_binary_tetrahedral()), 12);
  EXPECT_EQ(exponent(make_binary_icosahedral()), 60);
  EXPECT_EQ(exponent(make_cyclic(1)), 1);
}

TEST(Genfun, SeriesCoefficients) {
  const auto trivial = fg_coefficients(make_cyclic(1), 10);
  for (int p = 0; p <= 10; ++p)
    for (int q = 0; q <= 10; ++q) EXPECT_EQ(trivial.at(p, q), p + q + 1);
  EXPECT_EQ(fg_coefficients(make_cyclic(4), 4).at(3, 1), 3);
  for (const auto& g : sample()) {
    const auto t = fg_coefficients(g, 12);
    EXPECT_EQ(t.at(0, 0), 1);
    for (int p = 0; p <= 12; ++p)
      for (int q = 0; q <= 12; ++q) ASSERT_EQ(t.at(p, q), dim_invariant(g, p, q).dim) << g.name() << " " << p << "," << q;
  }
  const auto l3 = make_lens(4, {1, 1, 3});
  const auto t3 = fg_coefficients(l3, 5);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) EXPECT_EQ(t3.at(p, q), dim_invariant(l3, p, q).dim);
}

TEST(Genfun, TrivialPolynomial) {
  const auto pg = pg_polynomial(make_cyclic(1));
  EXPECT_EQ(pg.degree, 0);
  ASSERT_EQ(pg.coeffs.size(), 1u);
  EXPECT_EQ(pg.at(0, 0), 1);
}

TEST(Genfun, RoundTrip) {
  for (const auto& g : sample()) {
    const auto pg = pg_polynomial(g);
    EXPECT_EQ(pg.degree, g.n() * (pg.e - 1));
    const std::int64_t c = 24;
    const auto series = reconstruct_series(pg, c);
    const auto f = fg_coefficients(g, c);
    for (int p = 0; p <= c; ++p)
      for (int q = 0; q <= c; ++q) ASSERT_EQ(series[p * (c + 1) + q], f.at(p, q)) << g.name();
  }
}

TEST(Genfun, TruncationCeilingValidation) {
  EXPECT_THROW(pg_polynomial(make_cyclic(6), 5), DomainError);
  EXPECT_NO_THROW(pg_polynomial(make_cyclic(6), 10));
}

TEST(Genfun, DimH0Polynomial) {
  for (const auto& g : sample()) {
    const auto pg = pg_polynomial(g);
    EXPECT_EQ(dim_h0_polynomial(pg, 0), 1);
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(dim_h0_polynomial(pg, m), dim_invariant(g, 0, m * pg.e).dim) << g.name();
    // n-th forward difference of a degree <= n-1 polynomial vanishes.
    for (int m = 0; m <= g.n() + 3; ++m) {
      BigInt diff = 0;
      BigInt binom = 1;
      for (int k = 0; k <= g.n(); ++k) {
        const BigInt term = binom * dim_h0_polynomial(pg, m + k);
        diff += (g.n() - k) % 2 ? BigInt(-term) : term;
        binom = binom * (g.n() - k) / (k + 1);
      }
      EXPECT_EQ(diff, 0);
    }
    for (int m = 1; m <= 50; ++m) EXPECT_GE(dim_h0_polynomial(pg, m), 1) << g.name() << " m=" << m;
  }
}
