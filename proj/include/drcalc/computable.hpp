#ifndef DRCALC_COMPUTABLE_HPP
#define DRCALC_COMPUTABLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "drcalc/arithmetic.hpp"
#include "drcalc/bigint.hpp"
#include "drcalc/decimal_real.hpp"

namespace drcalc {

// A named constant whose digits come from a deterministic algorithm, plus a
// note on where the algorithm gets its certificates from.
struct ConstantSpec {
  std::string name;
  std::function<DecimalReal()> make;
  std::string note;
};

// Registry of the built-in constants: pi, e, sqrt2.
const std::vector<ConstantSpec>& known_constants();

enum class StatsOp { Add, Mul };

struct CarryStatsReport {
  std::string operation;  // "add" or "mul"
  long trials = 0;
  std::uint64_t seed = 0;
  // Fraction of trials where the result truncation equals the lower of its
  // two admissible values, as an exact ratio.
  Rational frequency_first_choice;
};

// Positive square root, digit by digit: truncation(k) is the largest
// scale-k value y with y^2 <= r, decided by exact rational comparison. When
// r is the square of a rational the result drops to an exact backing.
// Negative input throws std::domain_error.
DecimalReal sqrt_rational(const Rational& r);

// Euler's number as the limit of the partial sums of 1/i!, with the
// convergence modulus derived from the tail bound 2/(n+1)!.
DecimalReal e_real();

// Empirical frequency of the no-carry outcome: draw operands with uniform
// i.i.d. decimal digits (over [0,1)^2 for add; over x, y >= 0, x + y <= 1
// by rejection for mul), and test whether truncating the exact result at
// position k matches truncating the product/sum of the operands' (k+1)-
// truncations. Deterministic for a given seed: trial i draws from its own
// splitmix64 stream starting 2^20 steps past trial i-1's, so results do not
// depend on evaluation order.
CarryStatsReport carry_stats(StatsOp op, int k, long trials, std::uint64_t seed);

struct ScanDepthRow {
  int position = 0;
  int digit = 0;
  long depth = 0;  // deepest operand truncation consulted so far
};

// Streams the first `digits` fractional digits of pi + e, recording after
// each one how deep the addition had to scan. Every row is a certified
// digit; the table makes no claim about positions beyond the last row, and
// a long enough 9-run ahead of some position would surface as
// UndeterminedError rather than a wrong row.
std::vector<ScanDepthRow> pi_plus_e_demo(int digits, const Fuel& fuel = {});

}  // namespace drcalc

#endif
