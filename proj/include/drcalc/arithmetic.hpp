#ifndef DRCALC_ARITHMETIC_HPP
#define DRCALC_ARITHMETIC_HPP

#include "drcalc/decimal_real.hpp"

namespace drcalc {

// Scan budget for the Case-2 searches. `horizon` caps the digit position any
// single scan may examine; a request at position p may always scan to p+1, so
// the effective cap is max(horizon, p+1) and small horizons cannot starve a
// scan that needs exactly one probe.
struct Fuel {
  long horizon = 1000;

  long limit_for(long pos) const { return horizon > pos ? horizon : pos + 1; }
};

// x + y. Both operands exact: exact rational sum (the only situation where
// the terminating branch is decidable). Otherwise a producer that finds, for
// each requested position j, the first n >= j+1 with the n-th digit of
// x_n + y_n not equal to 9 and emits (x_n + y_n)_j.
DecimalReal add(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel = {});

// x - y. Scan looks for digit positions where x and y disagree; if the
// streams agree through the whole budget the difference stays undetermined
// (for exact operands the rational short-circuit answers instead).
DecimalReal sub(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel = {});

// 0 - x.
DecimalReal negate(const DecimalReal& x, const Fuel& fuel = {});

// x * y. Signs are resolved first (an operand indistinguishable from zero and
// not exactly zero makes the product undetermined); non-negative operands use
// the shifted scan with minimal s satisfying a0(x) + a0(y) + 2 <= 10^s.
DecimalReal mul(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel = {});

// 1 / x. Stevin digit search: each digit is the largest d keeping x * t <= 1.
// Throws std::domain_error when the sign of x is indistinguishable from zero.
DecimalReal reciprocal(const DecimalReal& x, const Fuel& fuel = {});

// x / y. Reduced to 0 < x' <= 1 <= y' by sign rules and powers of ten, then
// the quotient scan on theta_k(x'_{2k} / y'_k) > 0; if that scan exhausts its
// budget the producer falls back to mul(x, reciprocal(y)). Throws
// std::domain_error when the sign of y is indistinguishable from zero.
DecimalReal div(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel = {});

// Multiply by 10^e (e may be negative). Digit shifts are exact; no scanning.
DecimalReal shift10(const DecimalReal& x, int e);

}  // namespace drcalc

#endif
