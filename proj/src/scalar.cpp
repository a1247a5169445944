#include "orbifrob/scalar.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include "orbifrob/errors.hpp"

namespace orbifrob {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool mpz_small(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

}  // namespace

Scalar::Scalar(std::int64_t value) noexcept : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    num_ = 0;
    assign_big(mpq_class(mpz_from_i128(value)));
  }
}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  assign_i128(num, den);
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  assign_big(std::move(v));
}

Scalar::Scalar(const Scalar& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Scalar::assign_big(mpq_class value) {
  if (mpz_small(value.get_num()) && mpz_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

void Scalar::assign_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  assign_big(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num_part = trim(text.substr(0, slash));
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_int(num_part) || !valid_int(den_part) || den_part.front() == '-' || den_part.front() == '+') {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  if (num_part.front() == '+') num_part.remove_prefix(1);
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw ParseError("rational literal with zero denominator '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  Scalar out;
  out.assign_big(std::move(q));
  return out;
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  if (!big_) {
    Scalar out;
    out.assign_i128(den_, num_);
    return out;
  }
  Scalar out;
  out.assign_big(mpq_class(1) / *big_);
  return out;
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base(*this);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        num_ = out;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    assign_i128(n, d);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_sub_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        num_ = out;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    assign_i128(n, d);
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t out;
      if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
        num_ = out;
        return *this;
      }
    }
    assign_i128(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  if (!big_ && !rhs.big_) {
    assign_i128(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

Scalar Scalar::operator-() const {
  if (!big_) {
    Scalar out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Scalar out;
  out.assign_big(-*big_);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Scalar::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace orbifrob
