#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace progfree {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
///
/// Backed by int64 with __int128 intermediates. Every constructor and
/// arithmetic operator reduces the result; if the reduced value does not fit
/// in int64, std::overflow_error is thrown. Denominators in this project are
/// bounded by small multiples of the modulus, so this never triggers at desk
/// scale, but the check makes silent wrap-around impossible.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ + i128(y.num_) * x.den_, i128(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ - i128(y.num_) * x.den_, i128(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    i128 l = i128(x.num_) * y.den_;
    i128 r = i128(y.num_) * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer <= *this.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Canonical text form: "p/q", or "p" when the value is an integer.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p/q" or "p". Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view s);

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Unique representative of r modulo 1 in [0, 1).
Rational reduce_mod1(const Rational& r);

/// The half-fold map [0,1) -> [0,1/2): t for t < 1/2, else t - 1/2.
/// Invariant under doubling mod 1: 2t == 2t' (mod 1) implies equal folds.
/// Throws std::invalid_argument outside [0,1).
Rational half_fold(const Rational& t);

}  // namespace progfree
