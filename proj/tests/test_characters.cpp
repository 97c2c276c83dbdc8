#include <gtest/gtest.h>

#include "kohn/characters.hpp"
#include "kohn/errors.hpp"
#include "oracles.hpp"

using namespace kohn;

namespace {

GroupElement elem(std::vector<AngleFraction> a) { return GroupElement{std::move(a)}; }

std::vector<QuotientGroup> su2_like_groups() {
  return {make_cyclic(7), make_binary_dihedral(5), make_binary_octahedral(), make_binary_icosahedral(),
          make_product_with_center(make_binary_tetrahedral(), 5), make_q_semidirect(1), make_cyclic_semidirect(5, 2),
          make_lens(7, {1, 3})};
}

}  // namespace

TEST(Characters, AdmissiblePairCounts) {
  EXPECT_EQ(admissible_pairs({1, 1, 2}).size(), 3u);
  EXPECT_EQ(admissible_pairs({0, 0, 4}).size(), 1u);
  EXPECT_EQ(admissible_pairs({2, 1, 3}).size(), 15u);
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p <= 5; ++p) {
      for (int q = 0; q <= 5; ++q) {
        const auto pairs = admissible_pairs({p, q, n});
        // Binomial formula evaluated on the test side.
        const auto expected = oracle_ref::choose(p + n - 1, n - 1) * oracle_ref::choose(q + n - 1, n - 1) -
                              oracle_ref::choose(p + n - 2, n - 1) * oracle_ref::choose(q + n - 2, n - 1);
        EXPECT_EQ(static_cast<std::int64_t>(pairs.size()), expected);
        EXPECT_EQ(sphere_dimension({p, q, n}), expected);
        for (const auto& ab : pairs) {
          EXPECT_TRUE(ab.alpha[0] == 0 || ab.beta[0] == 0);
          EXPECT_EQ(std::accumulate(ab.alpha.begin(), ab.alpha.end(), std::int64_t{0}), p);
          EXPECT_EQ(std::accumulate(ab.beta.begin(), ab.beta.end(), std::int64_t{0}), q);
        }
      }
    }
  }
}

TEST(Characters, IdentityAndCenter) {
  const auto id = elem({AngleFraction(), AngleFraction()});
  const auto minus = elem({AngleFraction(1, 2), AngleFraction(1, 2)});
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      const Bidegree bd{p, q, 2};
      EXPECT_EQ(char_general(bd, id).term_count(), p + q + 1);
      EXPECT_EQ(char_general(bd, id).terms().size(), 1u);
      EXPECT_NEAR(static_cast<double>(char_su2_closed(bd, id).value().real()), p + q + 1, 1e-12);
      if ((p + q) % 2 == 1)
        EXPECT_NEAR(static_cast<double>(char_general(bd, minus).value().real()), -(p + q + 1), 1e-12);
    }
  }
}

TEST(Characters, OrderFourElement) {
  const auto g = elem({AngleFraction(1, 4), AngleFraction(3, 4)});
  const auto chi = char_general({1, 1, 2}, g);
  // mu^{-2} + 1 + mu^2 with mu = i.
  const std::map<AngleFraction, std::int64_t> expected{{AngleFraction(0, 1), 1}, {AngleFraction(1, 2), 2}};
  EXPECT_EQ(chi.terms(), expected);
  EXPECT_NEAR(static_cast<double>(chi.value().real()), -1.0, 1e-15);
  EXPECT_EQ(char_su2_closed({1, 1, 2}, g), chi);

  // (3,1): five admissible pairs, expanded by the test oracle.
  const auto v = oracle_ref::character(2, 3, 1, {0.25, 0.75});
  EXPECT_NEAR(v.real(), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(char_su2_closed({3, 1, 2}, g).value().real()), v.real(), 1e-12);
  EXPECT_EQ(char_su2_closed({3, 1, 2}, g), char_general({3, 1, 2}, g));
}

TEST(Characters, ClosedFormMatchesGeneralOnCatalog) {
  for (const auto& g : su2_like_groups()) {
    for (const auto& c : g.classes()) {
      for (int p = 0; p <= 12; ++p) {
        for (int q = 0; p + q <= 12; ++q) {
          const Bidegree bd{p, q, 2};
          ASSERT_EQ(char_su2_closed(bd, c.element), char_general(bd, c.element)) << g.name() << " " << p << "," << q;
        }
      }
    }
  }
}

TEST(Characters, GeneralMatchesOracleInHigherDimension) {
  const auto g = make_lens(5, {1, 2, 3});
  for (const auto& c : g.classes()) {
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; q <= 4; ++q) {
        const auto chi = char_general({p, q, 3}, c.element);
        const auto ref = oracle_ref::character(3, p, q, oracle_ref::turns_of(c.element));
        EXPECT_NEAR(static_cast<double>(chi.value().real()), ref.real(), 1e-9);
        EXPECT_NEAR(static_cast<double>(chi.value().imag()), ref.imag(), 1e-9);
      }
    }
  }
}

TEST(Characters, ConjugationSymmetry) {
  for (const auto& g : su2_like_groups()) {
    for (const auto& c : g.classes()) {
      GroupElement neg = c.element;
      for (auto& a : neg.angles) a = -a;
      for (int p = 0; p <= 6; ++p) {
        for (int q = 0; q <= 6; ++q) {
          const auto v = char_su2_closed({p, q, 2}, c.element).value();
          const auto w = char_su2_closed({p, q, 2}, neg).value();
          EXPECT_NEAR(static_cast<double>(std::abs(v - std::conj(w))), 0.0, 1e-12);
          if (g.tag().in_su2())
            EXPECT_EQ(char_su2_closed({p, q, 2}, c.element), char_su2_closed({q, p, 2}, c.element));
        }
      }
    }
  }
}

TEST(Characters, ValueAgreesWithTerms) {
  const auto g = make_binary_icosahedral();
  for (const auto& c : g.classes()) {
    const auto chi = char_general({5, 3, 2}, c.element);
    std::complex<double> sum = 0;
    for (const auto& [a, k] : chi.terms()) sum += static_cast<double>(k) * a.to_complex();
    EXPECT_NEAR(std::abs(sum - std::complex<double>(chi.value())), 0.0, 1e-9);
  }
}

TEST(Characters, Preconditions) {
  const auto g = elem({AngleFraction(1, 3), AngleFraction(2, 3)});
  EXPECT_THROW(char_general({1, 1, 3}, g), DomainError);
  EXPECT_THROW(char_su2_closed({1, 1, 3}, elem({{}, {}, {}})), DomainError);
}
