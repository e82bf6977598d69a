#ifndef DRCALC_SCALED_DECIMAL_HPP
#define DRCALC_SCALED_DECIMAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "drcalc/bigint.hpp"

namespace drcalc {

// A digit of an expansion. Positions k >= 1 carry a value in 0..9; position 0
// carries the full integer part a0, which may be any integer (negative included).
using Digit = BigInt;

enum class Ordering { Less, Equal, Greater };

// Exact terminating decimal: value = mantissa * 10^(-scale), scale >= 0.
//
// Equality is value-based: (m, k) and (10*m, k+1) denote the same number and
// compare Equal; no normalization of trailing zeros is performed.
//
// All expansions use floor convention: the integer part a0 satisfies
// a0 <= x < a0+1, fractional digits are in 0..9 regardless of sign, so
// -3.087 reads as (-4).913.
class ScaledDecimal {
 public:
  ScaledDecimal() : mantissa_(0), scale_(0) {}
  ScaledDecimal(BigInt mantissa, int scale);

  const BigInt& mantissa() const { return mantissa_; }
  int scale() const { return scale_; }

  Rational to_rational() const;
  bool is_zero() const { return mantissa_ == 0; }

  // Integer part a0 = floor(value).
  BigInt integer_part() const;

  // Floor-form string "a0.d1..dk", with a negative integer part wrapped in
  // parentheses: (-2).443. Scale-0 values render as a plain integer.
  std::string str() const;

  // Accepts floor form "(-2).443", plain "a0.digits", a bare integer, and the
  // conventional sign form "-2.443" (meaning -(2.443), converted to floor form).
  static ScaledDecimal parse(std::string_view text);

 private:
  BigInt mantissa_;
  int scale_;
};

ScaledDecimal add_exact(const ScaledDecimal& a, const ScaledDecimal& b);
ScaledDecimal sub_exact(const ScaledDecimal& a, const ScaledDecimal& b);
ScaledDecimal mul_exact(const ScaledDecimal& a, const ScaledDecimal& b);
ScaledDecimal negate_exact(const ScaledDecimal& a);

// Largest scale-k grid value <= a (floor toward -inf); result scale is k.
ScaledDecimal truncate(const ScaledDecimal& a, int k);

// k-th digit of the floor-normalized expansion; position 0 returns a0.
Digit digit_at(const ScaledDecimal& a, int k);

Ordering cmp_exact(const ScaledDecimal& a, const ScaledDecimal& b);

inline bool value_eq(const ScaledDecimal& a, const ScaledDecimal& b) {
  return cmp_exact(a, b) == Ordering::Equal;
}

// Exact conversion of p/q (q != 0) when the quotient terminates in base 10;
// throws std::domain_error otherwise.
ScaledDecimal scaled_from_rational(const Rational& q);

// True iff p/q has a terminating decimal expansion (reduced q = 2^a * 5^b).
bool rational_terminates(const Rational& q);

}  // namespace drcalc

#endif
