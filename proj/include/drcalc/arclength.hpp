#ifndef DRCALC_ARCLENGTH_HPP
#define DRCALC_ARCLENGTH_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drcalc/bigint.hpp"
#include "drcalc/decimal_real.hpp"
#include "drcalc/interval.hpp"

namespace drcalc {

enum class Monotonicity { Increasing, Decreasing };

// Coordinate map: rational interval in, outward-rounded enclosure of the
// exact image out.
using CoordinateMap = std::function<RationalInterval(const RationalInterval&)>;

// A planar curve (f1, f2) on a rational parameter interval, with each
// coordinate monotone in the declared direction. The tags are trusted:
// operations that need monotonicity (variation_upper_bound) do not verify
// them, so a curve whose coordinate changes direction inside the domain must
// be split at the turning point first.
struct MonotoneCurve {
  RationalInterval domain;
  CoordinateMap f1;
  CoordinateMap f2;
  Monotonicity m1 = Monotonicity::Increasing;
  Monotonicity m2 = Monotonicity::Increasing;
};

// Raised when the doubling loop hits its iteration cap before reaching the
// requested enclosure width. Carries the tightest enclosure obtained so far.
class PrecisionUnreachableError : public std::runtime_error {
 public:
  PrecisionUnreachableError(const std::string& what, RationalInterval best);
  const RationalInterval& best() const { return best_; }

 private:
  RationalInterval best_;
};

// Straight segment from (x0, y0) to (x1, y1) on parameter domain [0, 1].
MonotoneCurve segment_curve(const Rational& x0, const Rational& y0, const Rational& x1,
                            const Rational& y1);

// Upper unit-circle piece t -> (t, sqrt(1 - t^2)) on [t0, t1], -1 <= t0 <=
// t1 <= 1. The height map rounds outward at sqrt_scale. The second
// coordinate is monotone only when the piece stays on one side of t = 0.
MonotoneCurve circle_curve(const Rational& t0, const Rational& t1, int sqrt_scale = 40);

// Enclosure of the inscribed-polygon length over the given parameter
// partition (strictly increasing, inside the domain). Its lo is a certified
// lower bound for the curve length; refining the partition never decreases
// the true chord sum. precision sets the square-root rounding scale.
RationalInterval polygonal_lower(const MonotoneCurve& curve, const std::vector<Rational>& partition,
                                 int precision);

// Enclosure of |f1(a)-f1(b)| + |f2(a)-f2(b)|. For a curve that is monotone
// in both coordinates this dominates every chord sum, so hi bounds the
// length from above.
RationalInterval variation_upper_bound(const MonotoneCurve& curve);

// Two-sided enclosure of the length of the upper unit-circle arc from t0 to
// t1 (-1 <= t0 < t1 <= 1) with width below 10^-precision_k. Lower bounds
// come from inscribed equal-arc chord sums, upper bounds from circumscribed
// tangent sums over the same subdivision; the subdivision doubles until the
// width target is met. max_doublings < 0 picks a cap that the known
// convergence rate cannot miss; a tighter explicit cap may raise
// PrecisionUnreachableError.
RationalInterval circle_arc_length(const Rational& t0, const Rational& t1, int precision_k,
                                   long max_doublings = -1);

// Length of the full upper semicircle as a streamed real: pi.
DecimalReal pi_real();

// Length of the arc from t0 to t1 as a streamed real; equals the subtended
// angle at the centre. arc_angle(t, t) is exactly zero.
DecimalReal arc_angle(const Rational& t0, const Rational& t1);

}  // namespace drcalc

#endif
