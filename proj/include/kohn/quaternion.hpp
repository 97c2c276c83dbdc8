#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include <boost/rational.hpp>

#include "kohn/angle.hpp"

namespace kohn {

using Rational = boost::rational<std::int64_t>;

/// Element x + y*sqrt2 + z*sqrt5 + w*sqrt10 of the field Q(sqrt2, sqrt5).
class Biquadratic {
public:
  Biquadratic() = default;
  Biquadratic(Rational x, Rational y = 0, Rational z = 0, Rational w = 0) : c_{x, y, z, w} {}

  static Biquadratic sqrt2() { return {0, 1, 0, 0}; }
  static Biquadratic sqrt5() { return {0, 0, 1, 0}; }
  /// The golden ratio (1 + sqrt5) / 2.
  static Biquadratic golden() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }

  const Rational& rational_part() const { return c_[0]; }
  const std::array<Rational, 4>& coords() const { return c_; }
  bool is_zero() const;

  Biquadratic operator+(const Biquadratic& o) const;
  Biquadratic operator-(const Biquadratic& o) const;
  Biquadratic operator-() const;
  Biquadratic operator*(const Biquadratic& o) const;
  Biquadratic operator*(const Rational& r) const;

  /// Sign of the real number this element denotes; exact.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Biquadratic&, const Biquadratic&) = default;

private:
  std::array<Rational, 4> c_{};
};

/// A quaternion a + bi + cj + dk with coordinates in Q(sqrt2, sqrt5).
class QuaternionExact {
public:
  QuaternionExact() = default;
  QuaternionExact(Biquadratic a, Biquadratic b, Biquadratic c, Biquadratic d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static QuaternionExact one() { return basis(0); }
  static QuaternionExact i() { return basis(1); }
  static QuaternionExact j() { return basis(2); }
  static QuaternionExact k() { return basis(3); }

  const Biquadratic& a() const { return a_; }
  const Biquadratic& b() const { return b_; }
  const Biquadratic& c() const { return c_; }
  const Biquadratic& d() const { return d_; }

  QuaternionExact operator*(const QuaternionExact& o) const;
  QuaternionExact operator-() const;

  Biquadratic norm_squared() const;
  bool is_unit() const;

  /// Eigenangles of the associated SU(2) matrix
  ///   [[a+bi, -c+di], [c+di, a-bi]].
  /// The rotation angle is read off the real part against the finite table of
  /// real parts that occur in binary polyhedral groups. Throws InternalError
  /// for any other real part.
  std::array<AngleFraction, 2> eigenangles() const;

  friend bool operator==(const QuaternionExact&, const QuaternionExact&) = default;

private:
  static QuaternionExact basis(int index) {
    std::array<Biquadratic, 4> v{};
    v[index] = Biquadratic(Rational(1));
    return {v[0], v[1], v[2], v[3]};
  }

  Biquadratic a_, b_, c_, d_;
};

/// Angle t in [0, 1/2] with cos(2*pi*t) equal to the given real part, for real
/// parts in the binary polyhedral table.
AngleFraction rotation_angle_from_real_part(const Biquadratic& re);

std::size_t hash_value(const Biquadratic& x);
std::size_t hash_value(const QuaternionExact& q);

}  // namespace kohn

template <>
struct std::hash<kohn::QuaternionExact> {
  std::size_t operator()(const kohn::QuaternionExact& q) const noexcept { return kohn::hash_value(q); }
};
