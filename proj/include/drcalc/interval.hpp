#ifndef DRCALC_INTERVAL_HPP
#define DRCALC_INTERVAL_HPP

#include <string>

#include "drcalc/bigint.hpp"

namespace drcalc {

// Enclosure [lo, hi] with rational endpoints, lo <= hi. Every operation is
// outward-rounded: the result interval contains the exact image of the
// operand intervals. Endpoint arithmetic on rationals is itself exact, so
// rounding only enters through sqrt and explicit grid rounding.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h);
  explicit RationalInterval(const Rational& point) : lo(point), hi(point) {}

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  std::string str() const;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);

RationalInterval interval_abs(const RationalInterval& a);

// Requires 0 outside b; throws std::domain_error otherwise.
RationalInterval interval_div(const RationalInterval& a, const RationalInterval& b);

// Enclosure of sqrt over a, computed by integer sqrt with directed rounding at
// the given decimal scale. A lower endpoint slightly below zero (outward
// rounding noise) is clamped to zero; a genuinely negative interval throws.
RationalInterval interval_sqrt(const RationalInterval& a, int scale);

// Smallest scale-`scale` grid interval containing a (floor lo, ceil hi).
RationalInterval outward_round(const RationalInterval& a, int scale);

// Intersection; throws std::logic_error when empty (callers use this to
// enforce nestedness of refinement chains).
RationalInterval intersect(const RationalInterval& a, const RationalInterval& b);

}  // namespace drcalc

#endif
