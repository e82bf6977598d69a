#ifndef DRCALC_CONSTRUCTIONS_HPP
#define DRCALC_CONSTRUCTIONS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drcalc/decimal_real.hpp"
#include "drcalc/interval.hpp"

namespace drcalc {

// A caller-supplied construction (cut, Cauchy sequence, enclosure chain)
// contradicted its own contract. Distinct from UndeterminedError: this is a
// defect in the input, not a budget limit.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// Dedekind cut (A | B) of the rationals presented as a decision procedure.
// in_lower(q) answers q in A; A must be downward closed, B upward closed, and
// B must have no smallest element. Only the witness claims are checkable up
// front; the no-smallest-element promise is the caller's.
struct CutOracle {
  std::function<bool(const Rational&)> in_lower;
  Rational witness_lo;  // must classify into A
  Rational witness_hi;  // must classify into B
};

// Cauchy sequence with an effective modulus: |q_m - q_n| < 10^-s whenever
// m, n > modulus(s). modulus should be monotone in s.
struct CauchyInput {
  std::function<Rational(long)> term;  // q_n, n >= 1
  std::function<long(int)> modulus;    // scale -> N
};

// Enclosure chain: refine(s) returns an interval of width <= 10^-s containing
// one fixed value. Successive calls must agree (intersections stay non-empty);
// a violation surfaces as ConstructionError.
using EnclosureFn = std::function<RationalInterval(int)>;

// A digit cell straddled through this many consecutive probe scales gets the
// value identified as the terminating decimal on the boundary. Values within
// 10^-(k + kIdentifyGuard + 3) of a grid point but not on it are misread as
// the grid point; the guard trades that risk against digit liveness.
inline constexpr int kIdentifyGuard = 60;

// Digit emission from an enclosure chain, with sticky identification of
// persistently straddled grid points. `name` labels error messages.
DecimalReal from_enclosures(EnclosureFn refine, std::string name);

// a0 by integer binary search between the witnesses, then maximal-digit
// descent. A run of 64 consecutive 9s is treated as a cut pinned to a
// terminating decimal (ill-formed under the no-smallest-element convention)
// and rejected; the detector is necessarily partial.
DecimalReal from_dedekind(CutOracle cut);

DecimalReal from_cauchy(CauchyInput c);

// Greatest lower bound of a non-empty finite list: digit-wise minimum over
// surviving elements, which equals the dictionary-order minimum element.
DecimalReal glb_finite(std::vector<DecimalReal> xs);

// glb of the first `count` elements of an enumeration. This is an upper
// bound on the glb of the full enumeration; no convergence claim is made.
DecimalReal glb_prefix(const std::function<DecimalReal(long)>& element, long count);

// Digit interleaving z = 0.a1 b1 c1 a2 b2 c2 ... where a, b are the
// fractional digits of x and y and the box stream c encodes the integer
// parts: E(a0(x)) then E(a0(y)) then zeros, with E(n) = sign digit (0
// non-negative, 1 negative), |n| ones, and a terminating 0. Box digits are
// 0/1 only, so the output never grows a trailing-9 tail.
DecimalReal cantor_pair(const DecimalReal& x, const DecimalReal& y);

// Inverse of cantor_pair on its image. Malformed box streams raise
// ConstructionError naming the defective digit position of z.
std::pair<DecimalReal, DecimalReal> cantor_unpair(const DecimalReal& z);

}  // namespace drcalc

#endif
