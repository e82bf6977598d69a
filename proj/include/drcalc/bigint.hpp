#ifndef DRCALC_BIGINT_HPP
#define DRCALC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace drcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 10^k, k >= 0. Cached per thread; hot in every truncation loop.
const BigInt& pow10(int k);

// Floor division/remainder with divisor > 0: quotient rounds toward -inf,
// remainder in [0, divisor).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

// Largest integer r with r*r <= n. Requires n >= 0.
BigInt isqrt(const BigInt& n);

Rational rational_abs(const Rational& q);

// floor(q) as an integer.
BigInt rational_floor(const Rational& q);

}  // namespace drcalc

#endif
