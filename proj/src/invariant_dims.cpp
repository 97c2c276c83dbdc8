#include "kohn/invariant_dims.hpp"

#include <cmath>
#include <sstream>

#include <boost/rational.hpp>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

using Q = boost::rational<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

// Cyclic subgroup of SU(2) of order m, as a function of s = p + q.
Q cyclic_dim(std::int64_t m, std::int64_t s) {
  if (m == 1) return Q(s + 1);
  if (m % 2 == 0) return s % 2 == 0 ? Q(2 * floor_div(s, m) + 1) : Q(0);
  if (s % 2 == 0) return Q(2 * floor_div(s, 2 * m) + 1);
  return Q(2 * floor_div(s + m, 2 * m));
}

// Contribution of the 2m elements with eigenvalues +-i.
Q order4_term(std::int64_t s) {
  switch (mod(s, 4)) {
    case 0: return Q(1);
    case 2: return Q(-1);
    default: return Q(0);
  }
}

Q bindih_dim(std::int64_t m, std::int64_t s) { return Q(1, 2) * cyclic_dim(2 * m, s) + Q(1, 2) * order4_term(s); }

Q order6_term(std::int64_t s) {
  switch (mod(s, 6)) {
    case 0: return Q(2);
    case 4: return Q(-2);
    default: return Q(0);
  }
}

Q tetra_dim(std::int64_t s) { return Q(1, 3) * bindih_dim(2, s) + Q(1, 3) * order6_term(s); }

Q octa_dim(std::int64_t s) {
  Q extra(0);
  switch (mod(s, 8)) {
    case 0: extra = Q(1); break;
    case 6: extra = Q(-1); break;
    default: break;
  }
  return Q(1, 2) * tetra_dim(s) + Q(1, 2) * extra;
}

Q icosa_dim(std::int64_t s) {
  Q six(0), ten(0);
  switch (mod(s, 6)) {
    case 0: six = Q(1); break;
    case 4: six = Q(-1); break;
    default: break;
  }
  switch (mod(s, 10)) {
    case 0: ten = Q(2); break;
    case 2: ten = Q(1); break;
    case 6: ten = Q(-1); break;
    case 8: ten = Q(-2); break;
    default: break;
  }
  return Q(1, 5) * (tetra_dim(s) + order4_term(s) + six + ten);
}

Q su2_dim(const FamilyTag& tag, std::int64_t s) {
  switch (tag.family) {
    case Family::Cyclic: return cyclic_dim(tag.m, s);
    case Family::Lens: return cyclic_dim(tag.m, s);
    case Family::BinaryDihedral: return bindih_dim(tag.m, s);
    case Family::BinaryTetrahedral: return tetra_dim(s);
    case Family::BinaryOctahedral: return octa_dim(s);
    case Family::BinaryIcosahedral: return icosa_dim(s);
    default: throw UnsupportedFamily("no SU(2) closed form for " + tag.render());
  }
}

Q closed_form(const FamilyTag& tag, std::int64_t p, std::int64_t q) {
  const std::int64_t s = p + q;
  const std::int64_t d = q - p;
  switch (tag.family) {
    case Family::ProductWithCenter:
      return mod(d, tag.l) == 0 ? closed_form(*tag.base, p, q) : Q(0);
    case Family::QSemidirect: {
      const std::int64_t l = tag.l;
      const Q first = mod(d, 6 * l) == 0 ? Q(1, 3) * bindih_dim(2, s) : Q(0);
      Q phase(0);
      const std::int64_t r = mod(d, 18 * l);
      if (r == 0) phase = Q(2);
      else if (r == 6 * l || r == 12 * l) phase = Q(-1);
      return first + Q(1, 6) * phase * order6_term(s);
    }
    case Family::CyclicSemidirect: {
      const std::int64_t l = tag.l;
      const Q first = mod(d, 2 * l) == 0 ? Q(1, 2) * cyclic_dim(2 * tag.m, s) : Q(0);
      Q phase(0);
      const std::int64_t r = mod(d, 4 * l);
      if (r == 0) phase = Q(1);
      else if (r == 2 * l) phase = Q(-1);
      return first + Q(1, 2) * phase * order4_term(s);
    }
    default:
      return su2_dim(tag, s);
  }
}

long double collapse_tolerance() { return 1e-6L; }

}  // namespace

BidegreeDim dim_invariant(const QuotientGroup& g, std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw DomainError("bidegree must be nonnegative");
  const Bidegree bd{p, q, g.n()};
  std::complex<long double> sum = 0;
  for (const auto& c : g.classes()) {
    const CharacterValue chi = g.n() == 2 ? char_su2_closed(bd, c.element) : char_general(bd, c.element);
    sum += static_cast<long double>(c.multiplicity) * chi.value();
  }
  const long double avg = sum.real() / static_cast<long double>(g.order());
  const long double imag = sum.imag() / static_cast<long double>(g.order());
  const long double rounded = std::round(avg);
  if (std::fabs(avg - rounded) > collapse_tolerance() || std::fabs(imag) > collapse_tolerance() || rounded < 0) {
    std::ostringstream os;
    os.precision(17);
    os << "non-integral invariant dimension " << static_cast<double>(avg) << " + " << static_cast<double>(imag)
       << "i for " << g.name() << " at (" << p << "," << q << ")";
    throw NonIntegralDimension(os.str());
  }
  return {p, q, static_cast<std::int64_t>(rounded), g.name()};
}

bool has_closed_form(const FamilyTag& tag, int n) {
  if (n != 2) return tag.family == Family::Lens && tag.m == 1;
  switch (tag.family) {
    case Family::Lens: return tag.in_su2();
    case Family::Unchecked: return false;
    case Family::ProductWithCenter: return has_closed_form(*tag.base, n);
    default: return true;
  }
}

std::int64_t closed_form_dimension(const FamilyTag& tag, int n, std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) throw DomainError("bidegree must be nonnegative");
  if (!has_closed_form(tag, n)) throw UnsupportedFamily("no closed form for " + tag.render() + " in n = " + std::to_string(n));
  if (n != 2) return sphere_dimension({p, q, n});
  const Q v = closed_form(tag, p, q);
  if (v.denominator() != 1 || v.numerator() < 0)
    throw NonIntegralDimension("closed form gives " + std::to_string(v.numerator()) + "/" + std::to_string(v.denominator()) +
                               " for " + tag.render());
  return v.numerator();
}

BidegreeDim dim_closed_form(const QuotientGroup& g, std::int64_t p, std::int64_t q) {
  return {p, q, closed_form_dimension(g.tag(), g.n(), p, q), g.name()};
}

ReconcileReport reconcile(const QuotientGroup& g, std::int64_t pq_ceiling) {
  ReconcileReport r;
  r.group = g.name();
  r.ceiling = pq_ceiling;
  for (std::int64_t s = 0; s <= pq_ceiling; ++s) {
    for (std::int64_t p = 0; p <= s; ++p) {
      const std::int64_t q = s - p;
      const auto a = dim_invariant(g, p, q).dim;
      const auto c = closed_form_dimension(g.tag(), g.n(), p, q);
      ++r.cells_checked;
      if (a != c) r.mismatches.push_back({p, q, a, c});
    }
  }
  return r;
}

}  // namespace kohn
