#include "kohn/angle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kohn/errors.hpp"

namespace kohn {

AngleFraction::AngleFraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw DomainError("angle denominator must be positive");
  std::int64_t k = numerator % denominator;
  if (k < 0) k += denominator;
  const std::int64_t g = std::gcd(k, denominator);
  num_ = k / g;
  den_ = denominator / g;
}

AngleFraction AngleFraction::operator+(const AngleFraction& o) const {
  const std::int64_t d = std::lcm(den_, o.den_);
  return {num_ * (d / den_) + o.num_ * (d / o.den_), d};
}

AngleFraction AngleFraction::operator-(const AngleFraction& o) const { return *this + (-o); }

AngleFraction AngleFraction::operator-() const { return {-num_, den_}; }

AngleFraction AngleFraction::operator*(std::int64_t k) const {
  // Reduce k first so the product cannot overflow.
  std::int64_t kk = k % den_;
  if (kk < 0) kk += den_;
  return {static_cast<std::int64_t>((static_cast<__int128>(num_) * kk) % den_), den_};
}

std::int64_t AngleFraction::numerator_over(std::int64_t common_denominator) const {
  if (common_denominator % den_ != 0)
    throw InternalError("common denominator is not a multiple of the angle denominator");
  return num_ * (common_denominator / den_);
}

std::complex<double> AngleFraction::to_complex() const {
  const double t = 2.0 * std::numbers::pi * turns();
  return {std::cos(t), std::sin(t)};
}

std::string AngleFraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

AngleFraction AngleFraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(text), 1};
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw ParseError("malformed angle '" + text + "'");
  }
}

}  // namespace kohn
