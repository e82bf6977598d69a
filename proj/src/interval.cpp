#include "drcalc/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drcalc {

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
}

std::string RationalInterval::str() const {
  std::ostringstream out;
  out << "[" << lo << ", " << hi << "]";
  return out.str();
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval interval_abs(const RationalInterval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

RationalInterval interval_div(const RationalInterval& a, const RationalInterval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval_div: divisor contains zero");
  Rational q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return {std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
}

namespace {

// Largest scale-m grid value whose square is <= q.
Rational sqrt_lower(const Rational& q, int m) {
  // floor(q * 10^(2m)) then integer sqrt: r <= sqrt(q)*10^m.
  BigInt n = floor_div(numerator(q) * pow10(2 * m), denominator(q));
  return Rational(isqrt(n), pow10(m));
}

Rational sqrt_upper(const Rational& q, int m) {
  BigInt scaled_num = numerator(q) * pow10(2 * m);
  BigInt n = floor_div(scaled_num, denominator(q));
  BigInt r = isqrt(n);
  if (r * r == n && n * denominator(q) == scaled_num) return Rational(r, pow10(m));  // exact
  return Rational(r + 1, pow10(m));
}

}  // namespace

RationalInterval interval_sqrt(const RationalInterval& a, int scale) {
  if (a.hi < 0) throw std::domain_error("interval_sqrt: negative interval");
  Rational lo = a.lo < 0 ? Rational(0) : a.lo;
  return {sqrt_lower(lo, scale), sqrt_upper(a.hi, scale)};
}

RationalInterval outward_round(const RationalInterval& a, int scale) {
  const BigInt& p = pow10(scale);
  BigInt lo = floor_div(numerator(a.lo) * p, denominator(a.lo));
  BigInt hi = -floor_div(-numerator(a.hi) * p, denominator(a.hi));  // ceil
  return {Rational(lo, p), Rational(hi, p)};
}

RationalInterval intersect(const RationalInterval& a, const RationalInterval& b) {
  Rational lo = std::max(a.lo, b.lo);
  Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) throw std::logic_error("intersect: empty intersection");
  return {lo, hi};
}

}  // namespace drcalc
