#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbifrob {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator both fit in 63 bits are
/// kept inline; anything larger is promoted to a GMP rational and demoted
/// again as soon as it fits. The representation is canonical: equal values
/// always have identical storage, so comparison never needs GMP unless both
/// operands are large.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(std::int64_t value) noexcept;  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& value);

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept = default;
  ~Scalar() = default;

  /// Parses "p", "-p", "p/q" (whitespace around tokens allowed).
  static Scalar parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  mpq_class to_mpq() const;
  std::string str() const;

  Scalar inverse() const;
  Scalar pow(int exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::size_t hash() const;

 private:
  void assign_big(mpq_class value);
  void assign_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^k for any integer k.
inline Scalar sign_power(long long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace orbifrob
