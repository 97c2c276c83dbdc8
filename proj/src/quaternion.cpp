#include "kohn/quaternion.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

int rational_sign(const Rational& r) { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }

// Sign of u + v*sqrt(s) for rationals u, v and a positive non-square s.
int sign_with_root(const Rational& u, const Rational& v, std::int64_t s) {
  const int su = rational_sign(u);
  const int sv = rational_sign(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return su == 0 ? sv : su;
  // Opposite signs: compare u^2 against s*v^2.
  const Rational diff = u * u - v * v * Rational(s);
  return rational_sign(diff) * su;
}

void hash_combine(std::size_t& seed, std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); }

}  // namespace

bool Biquadratic::is_zero() const {
  for (const auto& r : c_)
    if (r.numerator() != 0) return false;
  return true;
}

Biquadratic Biquadratic::operator+(const Biquadratic& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

Biquadratic Biquadratic::operator-(const Biquadratic& o) const { return *this + (-o); }

Biquadratic Biquadratic::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Biquadratic Biquadratic::operator*(const Biquadratic& o) const {
  const auto& [x1, y1, z1, w1] = c_;
  const auto& [x2, y2, z2, w2] = o.c_;
  // Basis 1, r2, r5, r10 with r2*r5 = r10, r2*r10 = 2 r5, r5*r10 = 5 r2.
  const Rational x = x1 * x2 + Rational(2) * y1 * y2 + Rational(5) * z1 * z2 + Rational(10) * w1 * w2;
  const Rational y = x1 * y2 + y1 * x2 + Rational(5) * (z1 * w2 + w1 * z2);
  const Rational z = x1 * z2 + z1 * x2 + Rational(2) * (y1 * w2 + w1 * y2);
  const Rational w = x1 * w2 + w1 * x2 + y1 * z2 + z1 * y2;
  return {x, y, z, w};
}

Biquadratic Biquadratic::operator*(const Rational& r) const {
  return {c_[0] * r, c_[1] * r, c_[2] * r, c_[3] * r};
}

int Biquadratic::sign() const {
  // Write the element as A + B*sqrt5 with A = x + y r2 and B = z + w r2.
  const auto& [x, y, z, w] = c_;
  const int sa = sign_with_root(x, y, 2);
  const int sb = sign_with_root(z, w, 2);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: sign(A^2 - 5 B^2) decides, and A^2 - 5B^2 lies in Q(r2).
  const Rational u = x * x + Rational(2) * y * y - Rational(5) * (z * z + Rational(2) * w * w);
  const Rational v = Rational(2) * x * y - Rational(10) * z * w;
  return sign_with_root(u, v, 2) * sa;
}

double Biquadratic::to_double() const {
  auto d = [](const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); };
  return d(c_[0]) + d(c_[1]) * std::sqrt(2.0) + d(c_[2]) * std::sqrt(5.0) + d(c_[3]) * std::sqrt(10.0);
}

std::string Biquadratic::to_string() const {
  std::ostringstream os;
  os << c_[0] << " + " << c_[1] << "*sqrt2 + " << c_[2] << "*sqrt5 + " << c_[3] << "*sqrt10";
  return os.str();
}

QuaternionExact QuaternionExact::operator*(const QuaternionExact& o) const {
  const auto& [a1, b1, c1, d1] = std::tie(a_, b_, c_, d_);
  const auto& [a2, b2, c2, d2] = std::tie(o.a_, o.b_, o.c_, o.d_);
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

QuaternionExact QuaternionExact::operator-() const { return {-a_, -b_, -c_, -d_}; }

Biquadratic QuaternionExact::norm_squared() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

bool QuaternionExact::is_unit() const { return norm_squared() == Biquadratic(Rational(1)); }

AngleFraction rotation_angle_from_real_part(const Biquadratic& re) {
  const Rational h(1, 2);
  const Rational q(1, 4);
  // (real part, angle in turns); phi/2 = (1+r5)/4 and 1/(2 phi) = (r5-1)/4.
  static const std::vector<std::pair<Biquadratic, AngleFraction>> table = {
      {Biquadratic(Rational(1)), AngleFraction(0, 1)},
      {Biquadratic(Rational(-1)), AngleFraction(1, 2)},
      {Biquadratic(Rational(0)), AngleFraction(1, 4)},
      {Biquadratic(h), AngleFraction(1, 6)},
      {Biquadratic(-h), AngleFraction(1, 3)},
      {Biquadratic(0, h), AngleFraction(1, 8)},
      {Biquadratic(0, -h), AngleFraction(3, 8)},
      {Biquadratic(q, 0, q), AngleFraction(1, 10)},
      {Biquadratic(-q, 0, -q), AngleFraction(2, 5)},
      {Biquadratic(-q, 0, q), AngleFraction(1, 5)},
      {Biquadratic(q, 0, -q), AngleFraction(3, 10)},
  };
  for (const auto& [value, angle] : table)
    if (value == re) return angle;
  throw InternalError("real part " + re.to_string() + " is not in the binary polyhedral trace table");
}

std::array<AngleFraction, 2> QuaternionExact::eigenangles() const {
  AngleFraction t = rotation_angle_from_real_part(a_);
  // Diagonal matrices keep the eigenvalue a+bi first.
  if (c_.is_zero() && d_.is_zero() && b_.sign() < 0) t = -t;
  return {t, -t};
}

std::size_t hash_value(const Biquadratic& x) {
  std::size_t seed = 0;
  for (const auto& r : x.coords()) {
    hash_combine(seed, std::hash<std::int64_t>{}(r.numerator()));
    hash_combine(seed, std::hash<std::int64_t>{}(r.denominator()));
  }
  return seed;
}

std::size_t hash_value(const QuaternionExact& q) {
  std::size_t seed = hash_value(q.a());
  hash_combine(seed, hash_value(q.b()));
  hash_combine(seed, hash_value(q.c()));
  hash_combine(seed, hash_value(q.d()));
  return seed;
}

}  // namespace kohn
