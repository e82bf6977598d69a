#include "drcalc/decimal_real.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

namespace drcalc {

UndeterminedError::UndeterminedError(const std::string& context, long horizon)
    : std::runtime_error(context + " (undetermined at horizon " + std::to_string(horizon) + ")"),
      horizon_(horizon) {}

namespace detail {

struct RealImpl {
  Backing backing;
  std::optional<Rational> exact;     // set iff backing != Algorithmic
  std::unique_ptr<Producer> producer;  // set iff backing == Algorithmic

  mutable std::mutex mu;
  mutable bool have_cache = false;
  mutable ScaledDecimal cache;  // deepest truncation computed so far

  ScaledDecimal truncation_locked(int k) const {
    if (have_cache && cache.scale() >= k) return truncate(cache, k);
    ScaledDecimal t = exact ? ScaledDecimal(
                                  floor_div(numerator(*exact) * pow10(k), denominator(*exact)), k)
                            : producer->truncation(k);
    if (t.scale() != k)
      throw std::logic_error("producer returned truncation at wrong scale");
    if (have_cache && !value_eq(truncate(t, cache.scale()), cache))
      throw std::logic_error("digit stream inconsistency: " + t.str() + " does not extend " +
                             cache.str());
    cache = t;
    have_cache = true;
    return cache;
  }
};

}  // namespace detail

using detail::RealImpl;

DecimalReal::DecimalReal(std::shared_ptr<RealImpl> impl) : impl_(std::move(impl)) {}

DecimalReal::DecimalReal() : DecimalReal(from_scaled(ScaledDecimal())) {}

DecimalReal DecimalReal::from_scaled(const ScaledDecimal& a) {
  auto impl = std::make_shared<RealImpl>();
  impl->backing = Backing::Terminating;
  impl->exact = a.to_rational();
  return DecimalReal(std::move(impl));
}

DecimalReal DecimalReal::from_rational(const Rational& q) {
  auto impl = std::make_shared<RealImpl>();
  impl->backing = rational_terminates(q) ? Backing::Terminating : Backing::Rational;
  impl->exact = q;
  return DecimalReal(std::move(impl));
}

DecimalReal DecimalReal::from_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::invalid_argument("from_rational: zero denominator");
  return from_rational(Rational(p, q));
}

DecimalReal DecimalReal::from_int(long n) { return from_rational(Rational(n)); }

DecimalReal DecimalReal::from_producer(std::unique_ptr<Producer> p) {
  if (!p) throw std::invalid_argument("from_producer: null producer");
  auto impl = std::make_shared<RealImpl>();
  impl->backing = Backing::Algorithmic;
  impl->producer = std::move(p);
  return DecimalReal(std::move(impl));
}

Backing DecimalReal::backing() const { return impl_->backing; }

std::optional<Rational> DecimalReal::exact_value() const { return impl_->exact; }

ScaledDecimal DecimalReal::truncation(int k) const {
  if (k < 0) throw std::invalid_argument("truncation: k must be >= 0");
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->truncation_locked(k);
}

BigInt DecimalReal::a0() const { return truncation(0).mantissa(); }

Digit DecimalReal::digit(int k) const {
  if (k == 0) return a0();
  return digit_at(truncation(k), k);
}

DigitOutcome DecimalReal::digit_outcome(int k) const {
  try {
    return DigitOutcome::Determined(digit(k));
  } catch (const UndeterminedError& e) {
    return DigitOutcome::Exhausted(e.horizon());
  }
}

long DecimalReal::scan_depth() const {
  return impl_->producer ? impl_->producer->scan_depth() : 0;
}

std::string DecimalReal::describe() const {
  if (impl_->producer) return impl_->producer->describe();
  return impl_->backing == Backing::Terminating ? "terminating" : "rational";
}

Comparison cmp_with_fuel(const DecimalReal& x, const DecimalReal& y, long fuel) {
  if (fuel < 1) throw std::invalid_argument("cmp_with_fuel: fuel must be positive");
  // Separation persists: x_j < y_j forces x_k < y_k for k > j (the gap is at
  // least 10^-j, tails add less). So probing a sparse schedule and finishing
  // at exactly `fuel` loses nothing, while early exits keep producers from
  // scanning deeper than needed.
  long pos = 0;
  for (;;) {
    int k = static_cast<int>(pos);
    Ordering o = cmp_exact(x.truncation(k), y.truncation(k));
    if (o == Ordering::Less) return {CmpResult::Less, pos};
    if (o == Ordering::Greater) return {CmpResult::Greater, pos};
    if (pos == fuel) return {CmpResult::Indistinguishable, fuel};
    pos = pos < 16 ? pos + 1 : std::min(fuel, pos * 2);
  }
}

SignResult sign_with_fuel(const DecimalReal& x, long fuel) {
  if (fuel < 1) throw std::invalid_argument("sign_with_fuel: fuel must be positive");
  BigInt a0 = x.a0();
  if (a0 < 0) return {SignClass::Negative, 0};
  if (a0 >= 1) return {SignClass::Positive, 0};
  // a0 = 0: the value is in [0,1); positive iff some digit is nonzero.
  for (long k = 1; k <= fuel; ++k) {
    if (x.digit(static_cast<int>(k)) != 0) return {SignClass::Positive, k};
  }
  return {SignClass::IndistinguishableFromZero, fuel};
}

namespace {

class ViewProducer final : public Producer {
 public:
  explicit ViewProducer(DecimalReal source) : source_(std::move(source)) {}
  ScaledDecimal truncation(int k) override { return source_.truncation(k); }
  long scan_depth() const override { return source_.scan_depth(); }
  std::string describe() const override { return "opaque view of " + source_.describe(); }

 private:
  DecimalReal source_;
};

}  // namespace

DecimalReal as_algorithmic(const DecimalReal& x) {
  return DecimalReal::from_producer(std::make_unique<ViewProducer>(x));
}

std::string dump_digits(const DecimalReal& x, int k) {
  if (k < 0) throw std::invalid_argument("dump_digits: k must be >= 0");
  ScaledDecimal t = x.truncation(k);
  std::ostringstream out;
  out << "D10 v1 a0=" << t.integer_part() << "\n";
  for (int j = 1; j <= k; ++j) {
    out << digit_at(t, j);
    if (j % 50 == 0 || j == k) out << "\n";
  }
  return out.str();
}

}  // namespace drcalc
