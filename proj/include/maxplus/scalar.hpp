#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace maxplus {

/**
 * An element of the completed max-plus semiring R u {-inf, +inf}.
 *
 * Finite values are exact rationals. The default-constructed value is
 * -inf, the neutral element of oplus and the absorbing element of otimes.
 */
class Scalar {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Scalar() = default;
  Scalar(long value) : kind_(Kind::Finite), value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}     // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value);                                    // NOLINT(google-explicit-constructor)

  static Scalar neg_inf() { return Scalar{}; }
  static Scalar pos_inf();
  /// The multiplicative unit, 0.
  static Scalar unit() { return Scalar{0L}; }

  /// Accepts "-inf", "+inf"/"inf", integers, decimals ("-13.999") and fractions ("3/4").
  static Scalar parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Finite value; throws std::logic_error on an infinity.
  const mpq_class& value() const;

  /// Exact text: "-inf", "+inf", a terminating decimal, or "p/q".
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Kind kind_ = Kind::NegInf;
  mpq_class value_;
};

/// max(a, b)
Scalar oplus(const Scalar& a, const Scalar& b);

/// a + b, with -inf absorbing over everything (including +inf).
Scalar otimes(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact decimal or "p/q" rendering of a rational.
std::string rational_to_string(const mpq_class& q);

}  // namespace maxplus
