#include <gtest/gtest.h>

#include "kohn/errors.hpp"
#include "kohn/invariant_dims.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST(InvariantDims, PublishedValues) {
  for (int m = 3; m <= 9; ++m) EXPECT_EQ(dim_invariant(make_cyclic(m), 1, 1).dim, 1);
  for (int m = 2; m <= 9; ++m) EXPECT_EQ(dim_invariant(make_binary_dihedral(m), 1, 1).dim, 0);
  const auto z4 = make_cyclic(4);
  const auto q = make_binary_dihedral(2);
  const auto t = make_binary_tetrahedral();
  const auto i = make_binary_icosahedral();
  EXPECT_EQ(dim_invariant(z4, 3, 1).dim, 3);
  EXPECT_EQ(dim_invariant(q, 3, 1).dim, 2);
  EXPECT_EQ(dim_invariant(t, 3, 1).dim, 0);
  EXPECT_EQ(dim_invariant(z4, 0, 12).dim, 7);
  EXPECT_EQ(dim_invariant(q, 0, 12).dim, 4);
  EXPECT_EQ(dim_invariant(t, 0, 12).dim, 2);
  EXPECT_EQ(dim_invariant(i, 0, 12).dim, 1);

  EXPECT_EQ(dim_invariant(make_q_semidirect(1), 0, 6).dim, 0);
  EXPECT_EQ(dim_invariant(make_q_semidirect(1), 2, 2).dim, 0);
  const auto cs = make_cyclic_semidirect(3, 2);
  EXPECT_EQ(dim_invariant(cs, 3, 3).dim, 1);
  EXPECT_EQ(dim_invariant(cs, 0, 12).dim, 2);
}

TEST(InvariantDims, ClosedFormValues) {
  for (int s = 0; s <= 20; s += 2) EXPECT_EQ(dim_closed_form(make_cyclic(4), s / 2, s / 2).dim, 2 * (s / 4) + 1);
  for (int m : {3, 5, 7})
    for (int s = 1; s <= 21; s += 2) EXPECT_EQ(dim_closed_form(make_cyclic(m), 0, s).dim, 2 * ((s + m) / (2 * m)));
  for (int m = 3; m <= 8; ++m) EXPECT_EQ(dim_closed_form(make_binary_dihedral(m), 2, 2).dim, 1);
  EXPECT_EQ(dim_closed_form(make_cyclic(6), 0, 6).dim, 3);
  EXPECT_EQ(dim_closed_form(make_binary_dihedral(3), 0, 6).dim, 1);
  EXPECT_EQ(dim_closed_form(make_binary_octahedral(), 0, 6).dim, 0);
  const auto t5 = make_product_with_center(make_binary_tetrahedral(), 5);
  EXPECT_EQ(dim_closed_form(t5, 3, 3).dim, 1);
  EXPECT_EQ(dim_closed_form(t5, 11, 1).dim, 2);
  EXPECT_THROW(dim_closed_form(make_lens(5, {1, 2, 3}), 1, 1), UnsupportedFamily);
  EXPECT_THROW(dim_closed_form(make_lens(5, {1, 2}), 1, 1), UnsupportedFamily);
}

TEST(InvariantDims, TrivialGroupIsSphere) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::int64_t> ones(n, 1);
    const auto g = make_lens(1, ones);
    for (int p = 0; p <= 5; ++p)
      for (int q = 0; q <= 5; ++q) EXPECT_EQ(dim_invariant(g, p, q).dim, sphere_dimension({p, q, n}));
  }
}

TEST(InvariantDims, AgreesWithOracleAveraging) {
  std::vector<QuotientGroup> gs = {make_cyclic(6), make_binary_dihedral(4), make_binary_octahedral(),
                                   make_cyclic_semidirect(3, 4), make_lens(5, {1, 2}), make_lens(4, {1, 1, 3})};
  for (const auto& g : gs) {
    const int cap = g.n() == 2 ? 10 : 5;
    for (int p = 0; p <= cap; ++p)
      for (int q = 0; p + q <= cap; ++q) EXPECT_EQ(dim_invariant(g, p, q).dim, oracle_ref::invariant_dim(g, p, q));
  }
}

TEST(InvariantDims, Reconcile) {
  EXPECT_TRUE(reconcile(make_binary_icosahedral(), 14).ok());
  EXPECT_TRUE(reconcile(make_cyclic_semidirect(3, 2), 12).ok());
  const auto r = reconcile(make_cyclic(1), 6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.cells_checked, 28);
}

TEST(InvariantDims, NonIntegralAverageIsAnError) {
  // Classes of a non-group: {identity, one order-3 element} averages to a non-integer.
  const QuotientGroup fake(FamilyTag{Family::Unchecked}, 2,
                           {{GroupElement{{AngleFraction(), AngleFraction()}}, 1},
                            {GroupElement{{AngleFraction(1, 3), AngleFraction(2, 3)}}, 1}},
                           {});
  EXPECT_THROW(dim_invariant(fake, 0, 1), NonIntegralDimension);
}
