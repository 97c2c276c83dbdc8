#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kohn/angle.hpp"
#include "kohn/quaternion.hpp"

namespace kohn {

/// A unitary matrix up to conjugacy: its eigenvalues as exact angles.
struct GroupElement {
  std::vector<AngleFraction> angles;

  std::size_t dimension() const { return angles.size(); }
  bool is_identity() const;
  bool has_fixed_points() const;
  /// Order of the element: lcm of the angle denominators.
  std::int64_t order() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct ElementClass {
  GroupElement element;
  std::int64_t multiplicity = 0;
};

enum class Family {
  Cyclic,
  Lens,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
  ProductWithCenter,
  QSemidirect,
  CyclicSemidirect,
  Unchecked,
};

/// Structured family name. Parameter meaning by family:
///   Cyclic: m;  Lens: m and rotations;  BinaryDihedral: m (order 4m);
///   ProductWithCenter: base and l;  QSemidirect: l;  CyclicSemidirect: m, l.
struct FamilyTag {
  Family family = Family::Cyclic;
  std::int64_t m = 1;
  std::int64_t l = 1;
  std::vector<std::int64_t> rotations;
  std::shared_ptr<const FamilyTag> base;

  /// Canonical spec string, e.g. "cyclic:4", "bindih:12", "2TxC:5", "cycsemi:3:2".
  std::string render() const;
  /// True for groups inside SU(2).
  bool in_su2() const;

  friend bool operator==(const FamilyTag& a, const FamilyTag& b);
};

/// A finite subgroup of U(n) stored as conjugacy-compressed eigenangle
/// classes, plus explicit generator matrices for brute-force checks.
/// Immutable after construction.
class QuotientGroup {
public:
  QuotientGroup(FamilyTag tag, int n, std::vector<ElementClass> classes,
                std::vector<Eigen::MatrixXcd> generators);

  const FamilyTag& tag() const { return tag_; }
  std::string name() const { return tag_.render(); }
  int n() const { return n_; }
  std::int64_t order() const { return order_; }
  const std::vector<ElementClass>& classes() const { return classes_; }
  const std::vector<Eigen::MatrixXcd>& generators() const { return generators_; }

  /// Number of elements whose eigenangles, as a multiset, equal the given list.
  std::int64_t count_with_angles(std::vector<AngleFraction> angles) const;

private:
  FamilyTag tag_;
  int n_;
  std::int64_t order_ = 0;
  std::vector<ElementClass> classes_;
  std::vector<Eigen::MatrixXcd> generators_;
};

QuotientGroup make_cyclic(std::int64_t m);
QuotientGroup make_lens(std::int64_t m, const std::vector<std::int64_t>& rotations);
QuotientGroup make_binary_dihedral(std::int64_t m);
QuotientGroup make_binary_tetrahedral();
QuotientGroup make_binary_octahedral();
QuotientGroup make_binary_icosahedral();
QuotientGroup make_product_with_center(const QuotientGroup& base, std::int64_t l);
QuotientGroup make_q_semidirect(std::int64_t l);
QuotientGroup make_cyclic_semidirect(std::int64_t m, std::int64_t l);

struct FreeActionCheck {
  bool acts_freely = true;
  std::optional<GroupElement> witness;
};

/// An element fixes a point of the sphere iff it has eigenvalue 1.
FreeActionCheck check_free_action(const QuotientGroup& g);

enum class PolyhedralKind { Quaternion, Tetrahedral, Octahedral, Icosahedral };

/// Explicit unit quaternion lists: Q = {±1, ±i, ±j, ±k}; 2T adds the 16
/// elements (±1 ±i ±j ±k)/2; 2O adds the 24 elements (±1 ±1 0 0)/sqrt2 in
/// all coordinate positions; 2I adds the 96 even coordinate permutations of
/// (0, ±1, ±1/phi, ±phi)/2.
std::vector<QuaternionExact> binary_polyhedral_elements(PolyhedralKind kind);

/// The SU(2) matrix [[a+bi, -c+di], [c+di, a-bi]].
Eigen::Matrix2cd quaternion_matrix(const QuaternionExact& q);

/// e^{2 pi i turn} j^flag in the binary dihedral group, j = [[0,-1],[1,0]].
struct DicyclicElement {
  AngleFraction turn;
  bool flag = false;

  DicyclicElement operator*(const DicyclicElement& o) const;
  DicyclicElement operator-() const { return {turn + AngleFraction(1, 2), flag}; }
  std::array<AngleFraction, 2> eigenangles() const;
  Eigen::Matrix2cd matrix() const;
  friend bool operator==(const DicyclicElement&, const DicyclicElement&) = default;
};

namespace detail {

/// Image under (q, phase) -> e^{2 pi i phase} q of the subgroup of
/// SU(2) x U(1) generated by the given pairs. No free-action validation.
QuotientGroup psi_image_unchecked(const std::vector<std::pair<QuaternionExact, AngleFraction>>& generators);
QuotientGroup psi_image_unchecked(const std::vector<std::pair<DicyclicElement, AngleFraction>>& generators);

/// Cyclic group generated by diag(e^{2 pi i r_k / m}) with no coprimality check.
QuotientGroup diagonal_cyclic_unchecked(std::int64_t m, const std::vector<std::int64_t>& rotations);

}  // namespace detail

}  // namespace kohn
