#include <gtest/gtest.h>

#include <random>

#include "kohn/characters.hpp"
#include "kohn/errors.hpp"
#include "kohn/invariant_dims.hpp"
#include "kohn/oracle.hpp"

using namespace kohn;

TEST(Oracle, SpaceDimensions) {
  const auto s = build_space(2, 1, 1);
  EXPECT_EQ(s.basis.size(), 4u);
  EXPECT_EQ(s.kernel_dim(), 3);
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(build_space(2, 0, q).kernel_dim(), q + 1);
  EXPECT_EQ(build_space(3, 2, 1).kernel_dim(), 15);
  for (int n = 2; n <= 4; ++n)
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) EXPECT_EQ(build_space(n, p, q).kernel_dim(), sphere_dimension({p, q, n}));
  EXPECT_THROW(build_space(4, 12, 12), SizeLimit);
}

TEST(Oracle, InvariantDimensions) {
  EXPECT_EQ(invariant_dim_bruteforce(make_cyclic(4), 3, 1), 3);
  EXPECT_EQ(invariant_dim_bruteforce(make_binary_octahedral(), 0, 6), 0);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) EXPECT_EQ(invariant_dim_bruteforce(make_cyclic(1), p, q), p + q + 1);
  const auto r = invariant_dim_bruteforce_report(make_binary_tetrahedral(), 4, 2);
  EXPECT_EQ(r.group_order, 24);
  EXPECT_LT(r.idempotence_error, 1e-8);
  EXPECT_LT(r.unitarity_error, 1e-8);
  EXPECT_LT(r.commutator_error, 1e-8);
  EXPECT_EQ(r.dim, dim_invariant(make_binary_tetrahedral(), 4, 2).dim);
}

TEST(Oracle, ClosureMismatch) {
  const auto z4 = make_cyclic(4);
  const auto z8 = make_cyclic(8);
  const QuotientGroup wrong(FamilyTag{Family::Unchecked}, 2, z4.classes(), z8.generators());
  EXPECT_THROW(invariant_dim_bruteforce(wrong, 1, 1), ClosureMismatch);
}

TEST(Oracle, TraceOfOrderFourElement) {
  Eigen::MatrixXcd g(2, 2);
  g << std::complex<double>(0, 1), 0, 0, std::complex<double>(0, -1);
  const auto t = trace_bruteforce(g, 1, 1);
  EXPECT_NEAR(t.real(), -1.0, 1e-12);
  EXPECT_NEAR(t.imag(), 0.0, 1e-12);
  EXPECT_NEAR(trace_bruteforce(Eigen::MatrixXcd::Identity(3, 3), 2, 2).real(), sphere_dimension({2, 2, 3}), 1e-9);
}

TEST(Oracle, TraceMatchesCharacterOnRandomSamples) {
  std::mt19937 rng(20240601);
  const std::vector<QuotientGroup> groups = {make_binary_icosahedral(), make_cyclic_semidirect(5, 2),
                                             make_q_semidirect(1), make_lens(5, {1, 2, 3})};
  for (int sample = 0; sample < 100; ++sample) {
    const auto& g = groups[rng() % groups.size()];
    const auto elems = enumerate_matrix_group(g.generators(), g.order());
    const auto& m = elems[rng() % elems.size()];
    const int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4);
    // Eigenangles from the matrix itself, rounded to the group exponent.
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    GroupElement e;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double turns = std::arg(es.eigenvalues()(i)) / (2 * std::numbers::pi);
      const std::int64_t den = 720;
      e.angles.push_back(AngleFraction(std::llround(turns * den), den));
    }
    const auto chi = char_general({p, q, g.n()}, e).value();
    const auto tr = trace_bruteforce(m, p, q);
    EXPECT_NEAR(std::abs(std::complex<double>(chi) - tr), 0.0, 1e-8) << g.name() << " " << p << "," << q;
  }
}
