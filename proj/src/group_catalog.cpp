#include "kohn/group_catalog.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

using cd = std::complex<double>;

std::vector<ElementClass> compress(const std::vector<GroupElement>& elements) {
  std::map<GroupElement, std::int64_t> counts;
  for (const auto& e : elements) ++counts[e];
  std::vector<ElementClass> out;
  out.reserve(counts.size());
  for (auto& [e, c] : counts) out.push_back({e, c});
  return out;
}

Eigen::MatrixXcd diagonal_matrix(const std::vector<AngleFraction>& angles) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(angles.size(), angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) m(i, i) = angles[i].to_complex();
  return m;
}

Eigen::MatrixXcd scalar_matrix(const AngleFraction& phase, int n) {
  return Eigen::MatrixXcd::Identity(n, n) * phase.to_complex();
}

GroupElement pair_element(const std::array<AngleFraction, 2>& a, const AngleFraction& phase = {}) {
  return GroupElement{{a[0] + phase, a[1] + phase}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConstraintError(message);
}

void require_free(bool ok, const std::string& message) {
  if (!ok) throw NonFreeAction(message);
}

FamilyTag simple_tag(Family f, std::int64_t m = 1, std::int64_t l = 1) {
  FamilyTag t;
  t.family = f;
  t.m = m;
  t.l = l;
  return t;
}

struct DicyclicHash {
  std::size_t operator()(const DicyclicElement& d) const noexcept {
    return std::hash<AngleFraction>{}(d.turn) * 2 + (d.flag ? 1 : 0);
  }
};

template <class Su2>
struct PairHash {
  std::size_t operator()(const std::pair<Su2, AngleFraction>& p) const noexcept {
    std::size_t h;
    if constexpr (std::is_same_v<Su2, DicyclicElement>) {
      h = DicyclicHash{}(p.first);
    } else {
      h = std::hash<Su2>{}(p.first);
    }
    return h ^ (std::hash<AngleFraction>{}(p.second) * 0x9e3779b97f4a7c15ULL);
  }
};

// (q, phase) and (-q, phase + 1/2) have the same image; keep phase in [0, 1/2).
template <class Su2>
std::pair<Su2, AngleFraction> canonical(std::pair<Su2, AngleFraction> x) {
  const AngleFraction half(1, 2);
  if (x.second >= half) return {-x.first, x.second - half};
  return x;
}

template <class Su2>
std::vector<std::pair<Su2, AngleFraction>> psi_closure(const std::vector<std::pair<Su2, AngleFraction>>& gens,
                                                       const Su2& identity) {
  using Elem = std::pair<Su2, AngleFraction>;
  std::unordered_map<Elem, std::size_t, PairHash<Su2>> seen;
  std::vector<Elem> elements;
  const Elem e{identity, AngleFraction{}};
  seen.emplace(e, 0);
  elements.push_back(e);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Elem next = canonical<Su2>({elements[head].first * g.first, elements[head].second + g.second});
      if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

template <class Su2>
QuotientGroup psi_image(FamilyTag tag, const std::vector<std::pair<Su2, AngleFraction>>& gens, const Su2& identity) {
  const auto elements = psi_closure(gens, identity);
  std::vector<GroupElement> image;
  image.reserve(elements.size());
  for (const auto& [q, phase] : elements) image.push_back(pair_element(q.eigenangles(), phase));
  std::vector<Eigen::MatrixXcd> matrices;
  for (const auto& [q, phase] : gens) {
    Eigen::MatrixXcd m;
    if constexpr (std::is_same_v<Su2, DicyclicElement>) {
      m = q.matrix();
    } else {
      m = quaternion_matrix(q);
    }
    matrices.push_back(m * phase.to_complex());
  }
  return QuotientGroup(std::move(tag), 2, compress(image), std::move(matrices));
}

std::vector<Eigen::MatrixXcd> polyhedral_generators(PolyhedralKind kind) {
  const Rational h(1, 2);
  std::vector<QuaternionExact> gens = {QuaternionExact::i(), QuaternionExact::j()};
  if (kind != PolyhedralKind::Quaternion) gens.emplace_back(Biquadratic(h), Biquadratic(h), Biquadratic(h), Biquadratic(h));
  if (kind == PolyhedralKind::Octahedral) {
    const Biquadratic r(0, h);  // 1/sqrt2
    gens.emplace_back(r, r, Biquadratic(), Biquadratic());
  }
  if (kind == PolyhedralKind::Icosahedral) {
    // (i + j/phi + k*phi)/2, an order-4 element outside 2T.
    const Biquadratic inv_phi = Biquadratic::golden() - Biquadratic(Rational(1));
    gens.emplace_back(Biquadratic(), Biquadratic(h), inv_phi * h, Biquadratic::golden() * h);
  }
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& q : gens) out.emplace_back(quaternion_matrix(q));
  return out;
}

QuotientGroup polyhedral_group(PolyhedralKind kind, Family family) {
  std::vector<GroupElement> elems;
  for (const auto& q : binary_polyhedral_elements(kind)) elems.push_back(pair_element(q.eigenangles()));
  return QuotientGroup(simple_tag(family), 2, compress(elems), polyhedral_generators(kind));
}

QuotientGroup product_unchecked(const QuotientGroup& base, std::int64_t l) {
  std::vector<GroupElement> elems;
  for (const auto& cls : base.classes()) {
    for (std::int64_t j = 0; j < l; ++j) {
      GroupElement e = cls.element;
      for (auto& a : e.angles) a += AngleFraction(j, l);
      for (std::int64_t k = 0; k < cls.multiplicity; ++k) elems.push_back(e);
    }
  }
  FamilyTag tag = simple_tag(Family::ProductWithCenter, 1, l);
  tag.base = std::make_shared<const FamilyTag>(base.tag());
  auto gens = base.generators();
  if (l > 1) gens.push_back(scalar_matrix(AngleFraction(1, l), base.n()));
  return QuotientGroup(std::move(tag), base.n(), compress(elems), std::move(gens));
}

}  // namespace

bool GroupElement::is_identity() const {
  return std::all_of(angles.begin(), angles.end(), [](const AngleFraction& a) { return a.is_zero(); });
}

bool GroupElement::has_fixed_points() const {
  return std::any_of(angles.begin(), angles.end(), [](const AngleFraction& a) { return a.is_zero(); });
}

std::int64_t GroupElement::order() const {
  std::int64_t o = 1;
  for (const auto& a : angles) o = std::lcm(o, a.denominator());
  return o;
}

std::string FamilyTag::render() const {
  switch (family) {
    case Family::Cyclic:
      return "cyclic:" + std::to_string(m);
    case Family::Lens: {
      std::string s = "lens:" + std::to_string(m) + ":";
      for (std::size_t i = 0; i < rotations.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rotations[i]);
      }
      return s;
    }
    case Family::BinaryDihedral:
      return "bindih:" + std::to_string(2 * m);
    case Family::BinaryTetrahedral:
      return "2T";
    case Family::BinaryOctahedral:
      return "2O";
    case Family::BinaryIcosahedral:
      return "2I";
    case Family::ProductWithCenter:
      return base->render() + "xC:" + std::to_string(l);
    case Family::QSemidirect:
      return "qsemi:" + std::to_string(l);
    case Family::CyclicSemidirect:
      return "cycsemi:" + std::to_string(m) + ":" + std::to_string(l);
    case Family::Unchecked:
      return "unchecked";
  }
  return "unknown";
}

bool FamilyTag::in_su2() const {
  switch (family) {
    case Family::Cyclic:
    case Family::BinaryDihedral:
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral:
    case Family::BinaryIcosahedral:
      return true;
    case Family::Lens:
      return rotations.size() == 2 && (rotations[0] + rotations[1]) % m == 0;
    case Family::ProductWithCenter:
      return l == 1 && base->in_su2();
    default:
      return false;
  }
}

bool operator==(const FamilyTag& a, const FamilyTag& b) {
  if (a.family != b.family || a.m != b.m || a.l != b.l || a.rotations != b.rotations) return false;
  if (!a.base || !b.base) return !a.base && !b.base;
  return *a.base == *b.base;
}

QuotientGroup::QuotientGroup(FamilyTag tag, int n, std::vector<ElementClass> classes,
                             std::vector<Eigen::MatrixXcd> generators)
    : tag_(std::move(tag)), n_(n), generators_(std::move(generators)) {
  std::map<GroupElement, std::int64_t> merged;
  for (auto& c : classes) {
    if (static_cast<int>(c.element.dimension()) != n)
      throw InternalError("class dimension does not match ambient dimension");
    if (c.multiplicity <= 0) throw InternalError("class multiplicity must be positive");
    merged[c.element] += c.multiplicity;
  }
  int identities = 0;
  for (auto& [e, mult] : merged) {
    order_ += mult;
    if (e.is_identity()) {
      if (mult != 1) throw InternalError("identity class must have multiplicity 1 in " + tag_.render());
      ++identities;
    }
    classes_.push_back({e, mult});
  }
  if (identities != 1) throw InternalError("group " + tag_.render() + " has no identity class");
}

std::int64_t QuotientGroup::count_with_angles(std::vector<AngleFraction> angles) const {
  std::sort(angles.begin(), angles.end());
  std::int64_t total = 0;
  for (const auto& c : classes_) {
    auto a = c.element.angles;
    std::sort(a.begin(), a.end());
    if (a == angles) total += c.multiplicity;
  }
  return total;
}

DicyclicElement DicyclicElement::operator*(const DicyclicElement& o) const {
  // j e^{i t} = e^{-i t} j and j^2 = -1.
  AngleFraction t = flag ? turn - o.turn : turn + o.turn;
  bool f = flag != o.flag;
  if (flag && o.flag) t += AngleFraction(1, 2);
  return {t, f};
}

std::array<AngleFraction, 2> DicyclicElement::eigenangles() const {
  if (flag) return {AngleFraction(1, 4), AngleFraction(3, 4)};
  return {turn, -turn};
}

Eigen::Matrix2cd DicyclicElement::matrix() const {
  const cd z = turn.to_complex();
  Eigen::Matrix2cd rot;
  rot << z, 0, 0, std::conj(z);
  if (!flag) return rot;
  Eigen::Matrix2cd j;
  j << 0, -1, 1, 0;
  return rot * j;
}

Eigen::Matrix2cd quaternion_matrix(const QuaternionExact& q) {
  const double a = q.a().to_double(), b = q.b().to_double(), c = q.c().to_double(), d = q.d().to_double();
  Eigen::Matrix2cd m;
  m << cd(a, b), cd(-c, d), cd(c, d), cd(a, -b);
  return m;
}

std::vector<QuaternionExact> binary_polyhedral_elements(PolyhedralKind kind) {
  std::vector<QuaternionExact> out;
  const Biquadratic one(Rational(1));
  const Biquadratic zero;
  for (int s : {1, -1}) {
    const Biquadratic v = one * Rational(s);
    out.emplace_back(v, zero, zero, zero);
    out.emplace_back(zero, v, zero, zero);
    out.emplace_back(zero, zero, v, zero);
    out.emplace_back(zero, zero, zero, v);
  }
  if (kind == PolyhedralKind::Quaternion) return out;

  const Rational h(1, 2);
  for (int mask = 0; mask < 16; ++mask) {
    auto c = [&](int bit) { return Biquadratic((mask >> bit) & 1 ? -h : h); };
    out.emplace_back(c(0), c(1), c(2), c(3));
  }

  if (kind == PolyhedralKind::Octahedral) {
    const Biquadratic r(0, h);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        for (int s : {1, -1}) {
          for (int t : {1, -1}) {
            std::array<Biquadratic, 4> v{};
            v[i] = r * Rational(s);
            v[j] = r * Rational(t);
            out.emplace_back(v[0], v[1], v[2], v[3]);
          }
        }
      }
    }
  }

  if (kind == PolyhedralKind::Icosahedral) {
    const Biquadratic phi = Biquadratic::golden();
    const Biquadratic inv_phi = phi - one;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (perm[a] > perm[b]) ++inversions;
      if (inversions % 2) continue;
      for (int mask = 0; mask < 8; ++mask) {
        auto sgn = [&](int bit) { return Rational((mask >> bit) & 1 ? -1 : 1); };
        const std::array<Biquadratic, 4> v = {zero, one * (sgn(0) * h), inv_phi * (sgn(1) * h), phi * (sgn(2) * h)};
        out.emplace_back(v[perm[0]], v[perm[1]], v[perm[2]], v[perm[3]]);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

QuotientGroup make_cyclic(std::int64_t m) {
  require(m >= 1, "cyclic: m must be at least 1");
  std::vector<GroupElement> elems;
  for (std::int64_t j = 0; j < m; ++j) elems.push_back({{AngleFraction(j, m), AngleFraction(-j, m)}});
  return QuotientGroup(simple_tag(Family::Cyclic, m), 2, compress(elems),
                       {diagonal_matrix({AngleFraction(1, m), AngleFraction(-1, m)})});
}

QuotientGroup make_lens(std::int64_t m, const std::vector<std::int64_t>& rotations) {
  require(m >= 1, "lens: m must be at least 1");
  require(rotations.size() >= 2, "lens: need at least two rotation numbers (n >= 2)");
  for (auto r : rotations)
    require_free(std::gcd(r, m) == 1, "lens: every rotation number must be coprime to m = " + std::to_string(m));
  QuotientGroup g = detail::diagonal_cyclic_unchecked(m, rotations);
  FamilyTag tag = simple_tag(Family::Lens, m);
  for (auto r : rotations) tag.rotations.push_back(((r % m) + m) % m);
  return QuotientGroup(std::move(tag), g.n(), g.classes(), g.generators());
}

QuotientGroup make_binary_dihedral(std::int64_t m) {
  require(m >= 2, "bindih: m must be at least 2 (spec bindih:2m needs 2m >= 4)");
  std::vector<GroupElement> elems;
  for (std::int64_t l = 0; l < 2 * m; ++l) {
    const DicyclicElement rot{AngleFraction(l, 2 * m), false};
    const DicyclicElement refl = DicyclicElement{AngleFraction{}, true} * rot;
    elems.push_back(pair_element(rot.eigenangles()));
    elems.push_back(pair_element(refl.eigenangles()));
  }
  return QuotientGroup(simple_tag(Family::BinaryDihedral, m), 2, compress(elems),
                       {DicyclicElement{AngleFraction(1, 2 * m), false}.matrix(),
                        DicyclicElement{AngleFraction{}, true}.matrix()});
}

QuotientGroup make_binary_tetrahedral() { return polyhedral_group(PolyhedralKind::Tetrahedral, Family::BinaryTetrahedral); }
QuotientGroup make_binary_octahedral() { return polyhedral_group(PolyhedralKind::Octahedral, Family::BinaryOctahedral); }
QuotientGroup make_binary_icosahedral() { return polyhedral_group(PolyhedralKind::Icosahedral, Family::BinaryIcosahedral); }

QuotientGroup make_product_with_center(const QuotientGroup& base, std::int64_t l) {
  require(l >= 1, "product: l must be at least 1");
  require(l % 2 == 1, "product: l must be odd");
  std::int64_t modulus = 0;
  switch (base.tag().family) {
    case Family::BinaryIcosahedral: modulus = 30; break;
    case Family::BinaryOctahedral:
    case Family::BinaryTetrahedral: modulus = 6; break;
    case Family::BinaryDihedral: modulus = 2 * base.tag().m; break;
    default:
      throw ConstraintError("product: base must be bindih:2m, 2T, 2O or 2I");
  }
  require_free(std::gcd(l, modulus) == 1, "product: l must be coprime to " + std::to_string(modulus));
  if (l == 1) return base;
  QuotientGroup g = product_unchecked(base, l);
  if (!check_free_action(g).acts_freely) throw InternalError("product group unexpectedly has fixed points");
  return g;
}

QuotientGroup make_q_semidirect(std::int64_t l) {
  require(l >= 1 && l % 2 == 1, "qsemi: l must be a positive odd integer");
  const Rational h(1, 2);
  const QuaternionExact g{Biquadratic(h), Biquadratic(h), Biquadratic(h), Biquadratic(h)};
  QuotientGroup out = psi_image<QuaternionExact>(
      simple_tag(Family::QSemidirect, 1, l),
      {{QuaternionExact::i(), AngleFraction{}}, {QuaternionExact::j(), AngleFraction{}}, {g, AngleFraction(1, 18 * l)}},
      QuaternionExact::one());
  if (!check_free_action(out).acts_freely) throw InternalError("qsemi group unexpectedly has fixed points");
  return out;
}

QuotientGroup make_cyclic_semidirect(std::int64_t m, std::int64_t l) {
  require(m >= 3 && m % 2 == 1, "cycsemi: m must be an odd integer >= 3");
  require(l >= 2, "cycsemi: l must be a positive even integer");
  require_free(l % 2 == 0, "cycsemi: l must be even");
  require_free(std::gcd(m, l) == 1, "cycsemi: m must be coprime to l");
  QuotientGroup out = psi_image<DicyclicElement>(
      simple_tag(Family::CyclicSemidirect, m, l),
      {{DicyclicElement{AngleFraction(1, 2 * m), false}, AngleFraction{}},
       {DicyclicElement{AngleFraction{}, true}, AngleFraction(1, 4 * l)}},
      DicyclicElement{});
  if (!check_free_action(out).acts_freely) throw InternalError("cycsemi group unexpectedly has fixed points");
  return out;
}

FreeActionCheck check_free_action(const QuotientGroup& g) {
  for (const auto& c : g.classes()) {
    if (!c.element.is_identity() && c.element.has_fixed_points()) return {false, c.element};
  }
  return {true, std::nullopt};
}

namespace detail {

QuotientGroup psi_image_unchecked(const std::vector<std::pair<QuaternionExact, AngleFraction>>& generators) {
  return psi_image<QuaternionExact>(simple_tag(Family::Unchecked), generators, QuaternionExact::one());
}

QuotientGroup psi_image_unchecked(const std::vector<std::pair<DicyclicElement, AngleFraction>>& generators) {
  return psi_image<DicyclicElement>(simple_tag(Family::Unchecked), generators, DicyclicElement{});
}

QuotientGroup diagonal_cyclic_unchecked(std::int64_t m, const std::vector<std::int64_t>& rotations) {
  std::vector<GroupElement> elems;
  for (std::int64_t j = 0; j < m; ++j) {
    GroupElement e;
    for (auto r : rotations) e.angles.push_back(AngleFraction(j * r, m));
    elems.push_back(std::move(e));
  }
  std::vector<AngleFraction> gen;
  for (auto r : rotations) gen.push_back(AngleFraction(r, m));
  FamilyTag tag = simple_tag(Family::Unchecked, m);
  tag.rotations = rotations;
  return QuotientGroup(std::move(tag), static_cast<int>(rotations.size()), compress(elems), {diagonal_matrix(gen)});
}

}  // namespace detail

}  // namespace kohn
