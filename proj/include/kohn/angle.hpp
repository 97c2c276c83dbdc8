#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace kohn {

/// An exact rotation angle k/N, measured in full turns, standing for the root
/// of unity exp(2*pi*i*k/N). Always stored reduced with 0 <= k < N.
class AngleFraction {
public:
  constexpr AngleFraction() = default;
  AngleFraction(std::int64_t numerator, std::int64_t denominator);

  static AngleFraction zero() { return {}; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// Multiplicative order of the root of unity.
  std::int64_t order() const { return den_; }

  AngleFraction operator+(const AngleFraction& o) const;
  AngleFraction operator-(const AngleFraction& o) const;
  AngleFraction operator-() const;
  AngleFraction operator*(std::int64_t k) const;
  AngleFraction& operator+=(const AngleFraction& o) { return *this = *this + o; }

  /// Numerator over a multiple of the reduced denominator.
  std::int64_t numerator_over(std::int64_t common_denominator) const;

  std::complex<double> to_complex() const;
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "k/N", or "0/1" for the zero angle.
  std::string to_string() const;
  static AngleFraction parse(const std::string& text);

  friend bool operator==(const AngleFraction&, const AngleFraction&) = default;
  friend std::strong_ordering operator<=>(const AngleFraction& a, const AngleFraction& b) {
    // Compare as rationals; both denominators are positive.
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace kohn

template <>
struct std::hash<kohn::AngleFraction> {
  std::size_t operator()(const kohn::AngleFraction& a) const noexcept {
    return std::hash<std::int64_t>{}(a.numerator() * 1000003 + a.denominator());
  }
};
