#include "drcalc/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace drcalc {

const BigInt& pow10(int k) {
  if (k < 0) throw std::invalid_argument("pow10: negative exponent");
  thread_local std::vector<BigInt> cache{BigInt(1)};
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * 10);
  return cache[static_cast<std::size_t>(k)];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  BigInt q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) --q;
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return sqrt(n);
}

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

BigInt rational_floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

}  // namespace drcalc
