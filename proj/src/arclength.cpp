#include "drcalc/arclength.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "drcalc/constructions.hpp"

namespace drcalc {

namespace {

constexpr int kSqrtGuard = 4;

// Tight enclosure of {t^2 : t in a}; the plain interval product loses the
// sign information when a straddles zero.
RationalInterval interval_square(const RationalInterval& a) {
  Rational l2 = a.lo * a.lo;
  Rational h2 = a.hi * a.hi;
  if (a.lo >= 0) return {l2, h2};
  if (a.hi <= 0) return {h2, l2};
  return {Rational(0), std::max(l2, h2)};
}

RationalInterval chord_length(const RationalInterval& dx, const RationalInterval& dy, int scale) {
  return interval_sqrt(interval_square(dx) + interval_square(dy), scale);
}

RationalInterval eval_at(const CoordinateMap& f, const Rational& t) {
  return f(RationalInterval(t));
}

CoordinateMap affine_map(const Rational& offset, const Rational& slope) {
  return [offset, slope](const RationalInterval& in) {
    Rational a = offset + slope * in.lo;
    Rational b = offset + slope * in.hi;
    return slope >= 0 ? RationalInterval(a, b) : RationalInterval(b, a);
  };
}

}  // namespace

PrecisionUnreachableError::PrecisionUnreachableError(const std::string& what, RationalInterval best)
    : std::runtime_error(what), best_(std::move(best)) {}

MonotoneCurve segment_curve(const Rational& x0, const Rational& y0, const Rational& x1,
                            const Rational& y1) {
  MonotoneCurve c;
  c.domain = RationalInterval(Rational(0), Rational(1));
  c.f1 = affine_map(x0, x1 - x0);
  c.f2 = affine_map(y0, y1 - y0);
  c.m1 = x1 >= x0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
  c.m2 = y1 >= y0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
  return c;
}

MonotoneCurve circle_curve(const Rational& t0, const Rational& t1, int sqrt_scale) {
  if (t0 < -1 || t1 > 1 || t0 > t1)
    throw std::domain_error("circle_curve: need -1 <= t0 <= t1 <= 1");
  MonotoneCurve c;
  c.domain = RationalInterval(t0, t1);
  c.f1 = [](const RationalInterval& in) { return in; };
  c.f2 = [sqrt_scale](const RationalInterval& in) {
    RationalInterval sq = interval_square(in);
    Rational lo = Rational(1) - sq.hi;
    Rational hi = Rational(1) - sq.lo;
    if (lo < 0) lo = 0;  // parameter grazing the endpoints
    return interval_sqrt(RationalInterval(lo, hi), sqrt_scale);
  };
  c.m1 = Monotonicity::Increasing;
  c.m2 = t1 <= 0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
  return c;
}

RationalInterval polygonal_lower(const MonotoneCurve& curve, const std::vector<Rational>& partition,
                                 int precision) {
  if (partition.size() < 2) throw std::invalid_argument("polygonal_lower: need at least two points");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i > 0 && !(partition[i - 1] < partition[i]))
      throw std::invalid_argument("polygonal_lower: partition not strictly increasing");
    if (partition[i] < curve.domain.lo || partition[i] > curve.domain.hi)
      throw std::invalid_argument("polygonal_lower: partition point outside domain");
  }
  int scale = precision + kSqrtGuard;
  RationalInterval sum(Rational(0));
  RationalInterval px = eval_at(curve.f1, partition[0]);
  RationalInterval py = eval_at(curve.f2, partition[0]);
  for (std::size_t i = 1; i < partition.size(); ++i) {
    RationalInterval qx = eval_at(curve.f1, partition[i]);
    RationalInterval qy = eval_at(curve.f2, partition[i]);
    sum = sum + chord_length(qx - px, qy - py, scale);
    px = qx;
    py = qy;
  }
  return sum;
}

RationalInterval variation_upper_bound(const MonotoneCurve& curve) {
  RationalInterval d1 = eval_at(curve.f1, curve.domain.hi) - eval_at(curve.f1, curve.domain.lo);
  RationalInterval d2 = eval_at(curve.f2, curve.domain.hi) - eval_at(curve.f2, curve.domain.lo);
  return interval_abs(d1) + interval_abs(d2);
}

// One subdivision level of the arc from t0 to t1: 2^level congruent pieces,
// each subtending the same central angle. s encloses the squared chord of a
// single piece. Halving an arc maps the squared chord by s -> 2 - sqrt(4-s),
// so the whole refinement runs on rational intervals without ever locating
// the (irrational) subdivision points.
RationalInterval circle_arc_length(const Rational& t0, const Rational& t1, int precision_k,
                                   long max_doublings) {
  if (t0 < -1 || t1 > 1 || !(t0 < t1))
    throw std::domain_error("circle_arc_length: need -1 <= t0 < t1 <= 1");
  const int scale = 2 * (precision_k + kSqrtGuard);
  // The true gap between tangent and chord sums falls by 4x per doubling;
  // 5k/3 levels clear 10^-k with room, the constant covers the initial gap.
  const long cap = max_doublings >= 0 ? max_doublings : (5L * precision_k) / 3 + 24;
  const Rational target(BigInt(1), pow10(precision_k));

  RationalInterval y0 = interval_sqrt(RationalInterval(Rational(1) - t0 * t0), scale);
  RationalInterval y1 = interval_sqrt(RationalInterval(Rational(1) - t1 * t1), scale);
  RationalInterval s = interval_square(RationalInterval(Rational(t1 - t0))) +
                       interval_square(y1 - y0);
  if (s.lo < 0) s = RationalInterval(Rational(0), s.hi);
  if (s.hi > 4) s = RationalInterval(std::min(s.lo, Rational(4)), Rational(4));

  Rational best_lo(0);
  Rational best_hi(4);  // crude variation bound: any upper-semicircle arc is shorter
  BigInt pieces = 1;
  for (long level = 0;; ++level) {
    RationalInterval c = interval_sqrt(s, scale);
    Rational lower = Rational(pieces) * c.lo;
    if (lower > best_lo) best_lo = lower;

    RationalInterval rest = interval_sqrt(RationalInterval(Rational(4) - s.hi, Rational(4) - s.lo),
                                          scale);
    if (rest.lo > 0) {
      // Circumscribed tangent sum: 2^level * 2c / sqrt(4 - c^2), valid while
      // each piece spans less than a half turn.
      BigInt twice = pieces * 2;
      Rational upper = Rational(twice) * c.hi / rest.lo;
      if (upper < best_hi) best_hi = upper;
    }
    if (best_hi - best_lo < target) return {best_lo, best_hi};
    if (level >= cap) {
      std::ostringstream msg;
      msg << "circle_arc_length: precision unreachable within " << cap
          << " doublings (width " << RationalInterval(best_lo, best_hi).width() << ")";
      throw PrecisionUnreachableError(msg.str(), RationalInterval(best_lo, best_hi));
    }
    Rational next_lo = Rational(2) - rest.hi;
    if (next_lo < 0) next_lo = 0;
    s = RationalInterval(next_lo, Rational(2) - rest.lo);
    pieces *= 2;
  }
}

DecimalReal pi_real() {
  return from_enclosures([](int s) { return circle_arc_length(Rational(-1), Rational(1), s); },
                         "pi");
}

DecimalReal arc_angle(const Rational& t0, const Rational& t1) {
  if (t0 < -1 || t1 > 1 || t0 > t1)
    throw std::domain_error("arc_angle: need -1 <= t0 <= t1 <= 1");
  if (t0 == t1) return DecimalReal::from_int(0);
  std::ostringstream name;
  name << "arc(" << t0 << ", " << t1 << ")";
  return from_enclosures([t0, t1](int s) { return circle_arc_length(t0, t1, s); }, name.str());
}

}  // namespace drcalc
