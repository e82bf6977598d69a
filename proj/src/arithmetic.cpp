#include "drcalc/arithmetic.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <utility>

namespace drcalc {

namespace {

bool both_exact(const DecimalReal& x, const DecimalReal& y) {
  return x.exact_value().has_value() && y.exact_value().has_value();
}

bool exactly_zero(const DecimalReal& x) {
  auto v = x.exact_value();
  return v && *v == 0;
}

// Sign certificate used internally by the operations. Exact values are
// decided from the fraction (no fuel); everything else goes through the
// digit scan. l is the first-nonzero digit position for positives in (0,1),
// which the division reduction reuses as a magnitude bound.
SignResult certified_sign(const DecimalReal& v, const Fuel& fuel) {
  if (auto e = v.exact_value()) {
    if (*e == 0) return {SignClass::IndistinguishableFromZero, 0};
    if (*e < 0) return {SignClass::Negative, 0};
    if (rational_floor(*e) >= 1) return {SignClass::Positive, 0};
    long l = 1;
    Rational t = *e * 10;
    while (t < 1) {
      t *= 10;
      ++l;
    }
    return {SignClass::Positive, l};
  }
  return sign_with_fuel(v, fuel.horizon);
}

int digits10(BigInt a) {
  int d = 0;
  while (a > 0) {
    a /= 10;
    ++d;
  }
  return d;
}

// Base for scanning producers: records the deepest digit position examined,
// merged with the depths of the operand streams.
class ScanProducer : public Producer {
 public:
  explicit ScanProducer(Fuel fuel) : fuel_(fuel) {}

  long scan_depth() const override {
    return std::max(deepest_.load(std::memory_order_relaxed), operand_depth());
  }

 protected:
  void note_depth(long n) {
    long cur = deepest_.load(std::memory_order_relaxed);
    while (n > cur && !deepest_.compare_exchange_weak(cur, n, std::memory_order_relaxed)) {
    }
  }
  virtual long operand_depth() const = 0;

  Fuel fuel_;

 private:
  std::atomic<long> deepest_{0};
};

// Case-2 addition scan: the first n >= j+1 whose digit of x_n + y_n is not 9
// determines (x+y)_{n-1} = (x_n + y_n)_{n-1}, hence every coarser truncation.
class AddProducer final : public ScanProducer {
 public:
  AddProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    long limit = fuel_.limit_for(j);
    for (long n = j + 1; n <= limit; ++n) {
      note_depth(n);
      int ni = static_cast<int>(n);
      ScaledDecimal s = add_exact(x_.truncation(ni), y_.truncation(ni));
      if (digit_at(s, ni) != 9) return truncate(s, j);
    }
    throw UndeterminedError("addition: digit of x_n + y_n is 9 at every scanned n", limit);
  }

  std::string describe() const override { return "add(" + x_.describe() + ", " + y_.describe() + ")"; }

 protected:
  long operand_depth() const override { return std::max(x_.scan_depth(), y_.scan_depth()); }

 private:
  DecimalReal x_, y_;
};

// Subtraction scan: the first position n where the digits of x and y differ
// gives (x-y)_{n-1} = (x_n - y_n)_{n-1}. Streams that agree through the whole
// budget leave the difference undetermined (the true difference would be the
// terminating x_m - y_m, but that needs all remaining digits to agree).
class SubProducer final : public ScanProducer {
 public:
  SubProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    long limit = fuel_.limit_for(j);
    for (long n = j + 1; n <= limit; ++n) {
      note_depth(n);
      int ni = static_cast<int>(n);
      if (x_.digit(ni) != y_.digit(ni)) {
        ScaledDecimal d = sub_exact(x_.truncation(ni), y_.truncation(ni));
        return truncate(d, j);
      }
    }
    throw UndeterminedError("subtraction: digit streams agree at every scanned position", limit);
  }

  std::string describe() const override { return "sub(" + x_.describe() + ", " + y_.describe() + ")"; }

 protected:
  long operand_depth() const override { return std::max(x_.scan_depth(), y_.scan_depth()); }

 private:
  DecimalReal x_, y_;
};

// Core product of two certified non-negative streams. s is the minimal
// non-negative integer with a0(x) + a0(y) + 2 <= 10^s, so x + y <= 10^s holds
// from the integer parts alone and the scan condition on the digit of
// x_{n+s} y_{n+s} certifies (xy)_{n-1}.
class MulCoreProducer final : public ScanProducer {
 public:
  MulCoreProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    ensure_scale();
    long limit = fuel_.limit_for(j);
    for (long n = j + 1; n <= limit; ++n) {
      note_depth(n + s_);
      int ni = static_cast<int>(n);
      ScaledDecimal p = mul_exact(x_.truncation(ni + s_), y_.truncation(ni + s_));
      if (digit_at(p, ni) != 9) return truncate(p, j);
    }
    throw UndeterminedError("multiplication: digit of x_{n+s} y_{n+s} is 9 at every scanned n",
                            limit);
  }

  std::string describe() const override { return "mul(" + x_.describe() + ", " + y_.describe() + ")"; }

  int scale_param() {
    ensure_scale();
    return s_;
  }

 protected:
  long operand_depth() const override { return std::max(x_.scan_depth(), y_.scan_depth()); }

 private:
  void ensure_scale() {
    if (s_ >= 0) return;
    BigInt bound = x_.a0() + y_.a0() + 2;
    int s = 0;
    while (pow10(s) < bound) ++s;
    s_ = s;
  }

  DecimalReal x_, y_;
  int s_ = -1;
};

DecimalReal make_zero() { return DecimalReal(); }

// Resolves operand signs on first use, then delegates to a pipeline built
// from the sign identities xy = (-x)(-y) and xy = -(x(-y)).
class MulProducer final : public ScanProducer {
 public:
  MulProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    resolve();
    return result_->truncation(j);
  }

  std::string describe() const override { return "mul(" + x_.describe() + ", " + y_.describe() + ")"; }

 protected:
  long operand_depth() const override {
    long d = std::max(x_.scan_depth(), y_.scan_depth());
    if (result_) d = std::max(d, result_->scan_depth());
    return d;
  }

 private:
  void resolve() {
    if (result_) return;
    SignResult sx = certified_sign(x_, fuel_);
    SignResult sy = certified_sign(y_, fuel_);
    // Exact zeros never reach here (handled by the wrapper); an operand whose
    // sign cannot be certified leaves even a0 of the product unknown.
    if (sx.cls == SignClass::IndistinguishableFromZero ||
        sy.cls == SignClass::IndistinguishableFromZero)
      throw UndeterminedError("multiplication: operand sign indistinguishable from zero",
                              fuel_.horizon);
    bool nx = sx.cls == SignClass::Negative;
    bool ny = sy.cls == SignClass::Negative;
    DecimalReal px = nx ? negate(x_, fuel_) : x_;
    DecimalReal py = ny ? negate(y_, fuel_) : y_;
    DecimalReal core =
        DecimalReal::from_producer(std::make_unique<MulCoreProducer>(px, py, fuel_));
    result_ = (nx != ny) ? negate(core, fuel_) : core;
  }

  DecimalReal x_, y_;
  std::optional<DecimalReal> result_;
};

// Stevin search for 1/x on a certified positive stream: each digit is the
// largest d such that x * (prefix + d*10^-k) <= 1, decided from truncations:
//   x_n * t > 1             certifies x*t > 1      (x >= x_n),
//   (x_n + 10^-n) * t <= 1  certifies x*t < 1      (x < x_n + 10^-n, t > 0).
// Both certificates are monotone in n. Exact equality x*t = 1 can never be
// certified from a black-box stream; the comparison then exhausts its budget.
class ReciprocalProducer final : public ScanProducer {
 public:
  ReciprocalProducer(DecimalReal x, Fuel fuel) : ScanProducer(fuel), x_(std::move(x)) {}

  ScaledDecimal truncation(int j) override {
    long limit = fuel_.limit_for(j);
    if (!prefix_) prefix_ = ScaledDecimal(find_a0(limit), 0);
    while (prefix_->scale() < j) {
      int k = prefix_->scale() + 1;
      int d = 9;
      for (; d >= 1; --d) {
        ScaledDecimal t = add_exact(*prefix_, ScaledDecimal(d, k));
        if (compare_xt_one(t, limit) == Ordering::Less) break;
      }
      prefix_ = add_exact(*prefix_, ScaledDecimal(d, k));
    }
    return truncate(*prefix_, j);
  }

  std::string describe() const override { return "reciprocal(" + x_.describe() + ")"; }

 protected:
  long operand_depth() const override { return x_.scan_depth(); }

 private:
  Ordering compare_xt_one(const ScaledDecimal& t, long limit) {
    static const ScaledDecimal one(1, 0);
    if (t.is_zero()) return Ordering::Less;
    for (long n = std::max(1, t.scale() + 1); n <= limit; ++n) {
      note_depth(n);
      int ni = static_cast<int>(n);
      ScaledDecimal xn = x_.truncation(ni);
      if (cmp_exact(mul_exact(xn, t), one) == Ordering::Greater) return Ordering::Greater;
      ScaledDecimal hi = add_exact(xn, ScaledDecimal(1, ni));
      if (cmp_exact(mul_exact(hi, t), one) != Ordering::Greater) return Ordering::Less;
    }
    throw UndeterminedError("reciprocal: comparison of x*t against 1 unresolved", limit);
  }

  BigInt find_a0(long limit) {
    if (compare_xt_one(ScaledDecimal(1, 0), limit) == Ordering::Greater) return 0;
    BigInt lo = 1, hi = 2;
    while (compare_xt_one(ScaledDecimal(hi, 0), limit) != Ordering::Greater) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (compare_xt_one(ScaledDecimal(mid, 0), limit) == Ordering::Greater)
        hi = mid;
      else
        lo = mid;
    }
    return lo;
  }

  DecimalReal x_;
  std::optional<ScaledDecimal> prefix_;  // maximal certified truncation so far
};

// Exact digit shift by 10^e; floors at negative target scales collapse into
// the integer part via floor(floor(v*10^a)/10^b) = floor(v*10^(a-b)).
class ShiftProducer final : public Producer {
 public:
  ShiftProducer(DecimalReal x, int e) : x_(std::move(x)), e_(e) {}

  ScaledDecimal truncation(int k) override {
    if (k + e_ >= 0) return ScaledDecimal(x_.truncation(k + e_).mantissa(), k);
    BigInt m = floor_div(x_.truncation(0).mantissa(), pow10(-(k + e_)));
    return ScaledDecimal(std::move(m), k);
  }

  long scan_depth() const override { return x_.scan_depth(); }
  std::string describe() const override {
    return "shift10(" + x_.describe() + ", " + std::to_string(e_) + ")";
  }

 private:
  DecimalReal x_;
  int e_;
};

// Quotient scan on reduced operands 0 < x <= 1 <= y < 10. With truncation
// mantissas a (scale 2k) and b (scale k), x_{2k}/y_k = a/(b*10^k), so its
// scale-k truncation is just floor(a/b) over 10^k; a nonzero digit there
// certifies (x/y)_{k-1} exactly (overshoot of x/y_k above x/y is < 10^-k and
// x_{2k}/y_k never undershoots past the same scale-k cell).
class DivCoreProducer final : public ScanProducer {
 public:
  DivCoreProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    long limit = fuel_.limit_for(j);
    for (long k = j + 1; k <= limit; ++k) {
      note_depth(2 * k);
      int ki = static_cast<int>(k);
      ScaledDecimal a = x_.truncation(2 * ki);
      ScaledDecimal b = y_.truncation(ki);
      ScaledDecimal t(floor_div(a.mantissa(), b.mantissa()), ki);
      if (digit_at(t, ki) > 0) return truncate(t, j);
    }
    // The theta_k > 0 scan exhausted its budget (the quotient is then at or
    // just above a grid value). x/y = x * (1/y); the Stevin route can still
    // resolve when the reciprocal's digits are reachable.
    if (!fallback_) fallback_ = mul(x_, reciprocal(y_, fuel_), fuel_);
    return fallback_->truncation(j);
  }

  std::string describe() const override { return "div(" + x_.describe() + ", " + y_.describe() + ")"; }

 protected:
  long operand_depth() const override {
    long d = std::max(x_.scan_depth(), y_.scan_depth());
    if (fallback_) d = std::max(d, fallback_->scan_depth());
    return d;
  }

 private:
  DecimalReal x_, y_;
  std::optional<DecimalReal> fallback_;
};

class DivProducer final : public ScanProducer {
 public:
  DivProducer(DecimalReal x, DecimalReal y, Fuel fuel)
      : ScanProducer(fuel), x_(std::move(x)), y_(std::move(y)) {}

  ScaledDecimal truncation(int j) override {
    resolve();
    if (zero_) return ScaledDecimal(0, j);
    return result_->truncation(j);
  }

  std::string describe() const override { return "div(" + x_.describe() + ", " + y_.describe() + ")"; }

 protected:
  long operand_depth() const override {
    long d = std::max(x_.scan_depth(), y_.scan_depth());
    if (result_) d = std::max(d, result_->scan_depth());
    return d;
  }

 private:
  // p with v * 10^-p in (0, 1], for certified-positive v.
  int shift_into_unit(const DecimalReal& v) {
    BigInt a0 = v.a0();
    if (a0 >= 1) return digits10(a0);
    return -(static_cast<int>(first_nonzero(v)) - 1);
  }

  // q with v * 10^-q in [1, 10), for certified-positive v.
  int shift_above_one(const DecimalReal& v) {
    BigInt a0 = v.a0();
    if (a0 >= 1) return digits10(a0) - 1;
    return -static_cast<int>(first_nonzero(v));
  }

  long first_nonzero(const DecimalReal& v) {
    SignResult s = sign_with_fuel(v, fuel_.horizon);
    if (s.cls != SignClass::Positive)
      throw UndeterminedError("division: positive operand lost its certificate", fuel_.horizon);
    return s.l;
  }

  void resolve() {
    if (zero_ || result_) return;
    SignResult sy = certified_sign(y_, fuel_);
    if (sy.cls == SignClass::IndistinguishableFromZero)
      throw std::domain_error("division: divisor sign indistinguishable from zero");
    SignResult sx = certified_sign(x_, fuel_);
    if (sx.cls == SignClass::IndistinguishableFromZero) {
      if (exactly_zero(x_)) {
        zero_ = true;
        return;
      }
      throw UndeterminedError("division: dividend sign indistinguishable from zero",
                              fuel_.horizon);
    }
    bool nx = sx.cls == SignClass::Negative;
    bool ny = sy.cls == SignClass::Negative;
    DecimalReal px = nx ? negate(x_, fuel_) : x_;
    DecimalReal py = ny ? negate(y_, fuel_) : y_;
    int p = shift_into_unit(px);
    int q = shift_above_one(py);
    DecimalReal core = DecimalReal::from_producer(
        std::make_unique<DivCoreProducer>(shift10(px, -p), shift10(py, -q), fuel_));
    DecimalReal scaled = shift10(core, p - q);
    result_ = (nx != ny) ? negate(scaled, fuel_) : scaled;
  }

  DecimalReal x_, y_;
  std::optional<DecimalReal> result_;
  bool zero_ = false;
};

}  // namespace

DecimalReal add(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel) {
  if (both_exact(x, y)) return DecimalReal::from_rational(*x.exact_value() + *y.exact_value());
  return DecimalReal::from_producer(std::make_unique<AddProducer>(x, y, fuel));
}

DecimalReal sub(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel) {
  if (both_exact(x, y)) return DecimalReal::from_rational(*x.exact_value() - *y.exact_value());
  return DecimalReal::from_producer(std::make_unique<SubProducer>(x, y, fuel));
}

DecimalReal negate(const DecimalReal& x, const Fuel& fuel) {
  if (auto e = x.exact_value()) {
    Rational n = -*e;
    return DecimalReal::from_rational(n);
  }
  return sub(make_zero(), x, fuel);
}

DecimalReal mul(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel) {
  if (both_exact(x, y)) return DecimalReal::from_rational(*x.exact_value() * *y.exact_value());
  if (exactly_zero(x) || exactly_zero(y)) return make_zero();
  return DecimalReal::from_producer(std::make_unique<MulProducer>(x, y, fuel));
}

DecimalReal reciprocal(const DecimalReal& x, const Fuel& fuel) {
  if (auto e = x.exact_value()) {
    if (*e == 0) throw std::domain_error("reciprocal of zero");
    Rational r = 1 / *e;
    return DecimalReal::from_rational(r);
  }
  SignResult s = sign_with_fuel(x, fuel.horizon);
  if (s.cls == SignClass::IndistinguishableFromZero)
    throw std::domain_error("reciprocal: sign indistinguishable from zero");
  if (s.cls == SignClass::Negative)
    return negate(DecimalReal::from_producer(
                      std::make_unique<ReciprocalProducer>(negate(x, fuel), fuel)),
                  fuel);
  return DecimalReal::from_producer(std::make_unique<ReciprocalProducer>(x, fuel));
}

DecimalReal div(const DecimalReal& x, const DecimalReal& y, const Fuel& fuel) {
  if (both_exact(x, y)) {
    if (*y.exact_value() == 0) throw std::domain_error("division by zero");
    return DecimalReal::from_rational(*x.exact_value() / *y.exact_value());
  }
  if (exactly_zero(y)) throw std::domain_error("division by zero");
  return DecimalReal::from_producer(std::make_unique<DivProducer>(x, y, fuel));
}

DecimalReal shift10(const DecimalReal& x, int e) {
  if (auto v = x.exact_value()) {
    Rational r = e >= 0 ? *v * Rational(pow10(e)) : *v / Rational(pow10(-e));
    return DecimalReal::from_rational(r);
  }
  return DecimalReal::from_producer(std::make_unique<ShiftProducer>(x, e));
}

}  // namespace drcalc
