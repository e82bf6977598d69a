#include "drcalc/computable.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "drcalc/arclength.hpp"
#include "drcalc/constructions.hpp"

namespace drcalc {

namespace {

class SqrtProducer : public Producer {
 public:
  explicit SqrtProducer(Rational r) : r_(std::move(r)) {}

  ScaledDecimal truncation(int k) override {
    // Largest m with (m/10^k)^2 <= r: integer sqrt of floor(r * 10^2k).
    BigInt scaled = floor_div(numerator(r_) * pow10(2 * k), denominator(r_));
    return ScaledDecimal(isqrt(scaled), k);
  }

  std::string describe() const override {
    std::ostringstream out;
    out << "sqrt(" << r_ << ")";
    return out.str();
  }

 private:
  Rational r_;
};

// splitmix64: state walks by the 64-bit golden ratio, output is the
// mixed state. Jumping n steps ahead is state + n*kGolden, which gives
// each trial its own stream with a guaranteed-disjoint span.
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamStride = 1ULL << 20;

std::uint64_t splitmix_next(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw below bound (as top bits of 64-bit outputs, rejecting
// overshoot), so the distribution is exact and platform-independent.
std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t bound) {
  int bits = std::bit_width(bound - 1);
  for (;;) {
    std::uint64_t v = splitmix_next(state) >> (64 - bits);
    if (v < bound) return v;
  }
}

std::uint64_t pow10_u64(int k) {
  std::uint64_t p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

// Uniform mantissa in [0, 10^digits): identical in distribution to drawing
// `digits` i.i.d. decimal digits. Drawn in 18-digit chunks, most
// significant first, so narrow and wide integer paths consume the stream
// identically.
template <class UInt>
UInt uniform_mantissa(std::uint64_t& state, int digits) {
  UInt m = 0;
  int rem = digits % 18;
  if (rem > 0) m = static_cast<UInt>(uniform_below(state, pow10_u64(rem)));
  for (int full = digits / 18; full > 0; --full) {
    m *= static_cast<UInt>(pow10_u64(18));
    m += static_cast<UInt>(uniform_below(state, pow10_u64(18)));
  }
  return m;
}

template <class UInt>
UInt upow10(int k) {
  UInt p = 1;
  while (k-- > 0) p *= 10;
  return p;
}

// One trial: true iff the scale-k truncation of the exact result equals
// the truncation built from the operands' scale-(k+1) truncations (the
// lower of the two admissible outcomes).
template <class UInt>
bool trial_first_choice(std::uint64_t& state, StatsOp op, int k, int depth) {
  const UInt full = upow10<UInt>(depth);
  UInt mx = uniform_mantissa<UInt>(state, depth);
  UInt my = uniform_mantissa<UInt>(state, depth);
  if (op == StatsOp::Add) {
    UInt exact = (mx + my) / upow10<UInt>(depth - k);
    UInt lower = (mx / upow10<UInt>(depth - k - 1) + my / upow10<UInt>(depth - k - 1)) / 10;
    return exact == lower;
  }
  while (mx + my > full) {  // mul sample space: x + y <= 1
    mx = uniform_mantissa<UInt>(state, depth);
    my = uniform_mantissa<UInt>(state, depth);
  }
  UInt exact = (mx * my) / upow10<UInt>(2 * depth - k);
  UInt tx = mx / upow10<UInt>(depth - k - 1);
  UInt ty = my / upow10<UInt>(depth - k - 1);
  UInt lower = (tx * ty) / upow10<UInt>(k + 2);
  return exact == lower;
}

}  // namespace

DecimalReal sqrt_rational(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt_rational: negative operand");
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt a = isqrt(num);
  BigInt b = isqrt(den);
  if (a * a == num && b * b == den) return DecimalReal::from_rational(Rational(a, b));
  return DecimalReal::from_producer(std::make_unique<SqrtProducer>(r));
}

DecimalReal e_real() {
  CauchyInput c;
  c.term = [](long n) {
    Rational sum = 0;
    BigInt fact = 1;
    for (long i = 0; i <= n; ++i) {
      if (i > 0) fact *= i;
      sum += Rational(BigInt(1), fact);
    }
    return sum;
  };
  // Tail past q_n is under 2/(n+1)!; stop once that clears 10^-s.
  c.modulus = [](int s) {
    BigInt fact = 1;  // (n+1)! at n = 0
    long n = 0;
    while (2 * pow10(s) > fact) {
      ++n;
      fact *= (n + 1);
    }
    return n;
  };
  return from_cauchy(std::move(c));
}

const std::vector<ConstantSpec>& known_constants() {
  static const std::vector<ConstantSpec> table = {
      {"pi", [] { return pi_real(); }, "upper semicircle arc length via chord/tangent doubling"},
      {"e", [] { return e_real(); }, "factorial series with explicit tail modulus"},
      {"sqrt2", [] { return sqrt_rational(Rational(2)); }, "digit-wise maximal root, exact squaring"},
  };
  return table;
}

CarryStatsReport carry_stats(StatsOp op, int k, long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("carry_stats: trials must be positive");
  if (k < 0) throw std::invalid_argument("carry_stats: digit position must be non-negative");
  // k+1 truncation digits plus 10 guard digits of tail; the finite tail
  // skews the carry threshold by under 10^-9 per trial, far inside the
  // sampling noise at any feasible trial count.
  const int depth = k + 11;
  BigInt matches = 0;
  for (long i = 0; i < trials; ++i) {
    std::uint64_t state = seed + static_cast<std::uint64_t>(i) * kStreamStride * kGolden;
    bool first = depth <= 18
                     ? trial_first_choice<unsigned __int128>(state, op, k, depth)
                     : trial_first_choice<BigInt>(state, op, k, depth);
    if (first) ++matches;
  }
  CarryStatsReport report;
  report.operation = op == StatsOp::Add ? "add" : "mul";
  report.trials = trials;
  report.seed = seed;
  report.frequency_first_choice = Rational(matches, BigInt(trials));
  return report;
}

std::vector<ScanDepthRow> pi_plus_e_demo(int digits, const Fuel& fuel) {
  if (digits < 1) throw std::invalid_argument("pi_plus_e_demo: need at least one digit");
  DecimalReal sum = add(pi_real(), e_real(), fuel);
  std::vector<ScanDepthRow> rows;
  rows.reserve(static_cast<std::size_t>(digits));
  for (int k = 1; k <= digits; ++k) {
    ScanDepthRow row;
    row.position = k;
    row.digit = static_cast<int>(sum.digit(k));
    row.depth = sum.scan_depth();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace drcalc
