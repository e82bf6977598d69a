#ifndef DRCALC_DECIMAL_REAL_HPP
#define DRCALC_DECIMAL_REAL_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "drcalc/scaled_decimal.hpp"

namespace drcalc {

// A digit scan hit its horizon without certifying the digit. This is the
// library's "don't know yet" outcome; it never stands in for a wrong digit.
class UndeterminedError : public std::runtime_error {
 public:
  UndeterminedError(const std::string& context, long horizon);
  long horizon() const noexcept { return horizon_; }

 private:
  long horizon_;
};

// Non-throwing form of a digit request.
struct DigitOutcome {
  bool determined;
  Digit digit;   // meaningful when determined
  long horizon;  // meaningful when exhausted

  static DigitOutcome Determined(Digit d) { return {true, std::move(d), 0}; }
  static DigitOutcome Exhausted(long h) { return {false, 0, h}; }
};

enum class Backing {
  Terminating,  // exact value with a terminating expansion
  Rational,     // exact p/q whose expansion repeats
  Algorithmic,  // black-box truncation producer with a validity promise
};

// Supplies scale-k floor truncations of one fixed real number.
//
// Contract: truncation(k) returns the exact x_k (scale k) of a single value x
// in the ambient set (digits 0..9, no trailing-9 tail). Calls must be
// consistent across k; the memo layer verifies the prefix property and treats
// a violation as a programming error. A producer that cannot certify x_k
// within its internal budget throws UndeterminedError.
class Producer {
 public:
  virtual ~Producer() = default;
  virtual ScaledDecimal truncation(int k) = 0;
  // Deepest digit position examined so far, including positions consumed from
  // operand streams. Zero for producers that do no scanning.
  virtual long scan_depth() const { return 0; }
  virtual std::string describe() const = 0;
};

namespace detail {
struct RealImpl;
}

// A real as an integer part a0 plus a fractional digit stream,
// floor convention throughout. Handles share state; digit queries are
// memoized and internally synchronized.
class DecimalReal {
 public:
  DecimalReal();  // zero (Terminating backing)

  static DecimalReal from_scaled(const ScaledDecimal& a);
  static DecimalReal from_rational(const Rational& q);
  static DecimalReal from_rational(const BigInt& p, const BigInt& q);
  static DecimalReal from_int(long n);
  static DecimalReal from_producer(std::unique_ptr<Producer> p);

  Backing backing() const;
  // Set for Terminating/Rational backings, empty for Algorithmic.
  std::optional<Rational> exact_value() const;

  // a0 = floor(x). For Algorithmic backings this may require an internal scan
  // and can throw UndeterminedError.
  BigInt a0() const;
  // k-th digit, k >= 0 (position 0 is a0). May throw UndeterminedError.
  Digit digit(int k) const;
  // Exact x_k at scale k. May throw UndeterminedError.
  ScaledDecimal truncation(int k) const;
  DigitOutcome digit_outcome(int k) const;

  long scan_depth() const;
  std::string describe() const;

  bool same_handle(const DecimalReal& other) const { return impl_ == other.impl_; }

 private:
  explicit DecimalReal(std::shared_ptr<detail::RealImpl> impl);
  std::shared_ptr<detail::RealImpl> impl_;
};

enum class CmpResult { Less, Greater, Indistinguishable };

struct Comparison {
  CmpResult result;
  // For Indistinguishable: truncations agree through this position.
  long agree_through = 0;
};

// Dictionary-order comparison through truncation position `fuel`. A
// Less/Greater verdict is final: once truncations separate they stay
// separated at every deeper position. Operand scan errors propagate;
// Indistinguishable itself is a value, not an error.
Comparison cmp_with_fuel(const DecimalReal& x, const DecimalReal& y, long fuel);

enum class SignClass { Positive, Negative, IndistinguishableFromZero };

struct SignResult {
  SignClass cls;
  // Positive with a0 = 0: position of the first nonzero digit (0 when a0
  // decides). Indistinguishable: the fuel that was exhausted.
  long l = 0;
};

// a0 < 0 decides Negative and a0 >= 1 decides Positive immediately; for
// a0 = 0 the digits are scanned through `fuel`. Zero is never certified
// nonzero, including exact zero.
SignResult sign_with_fuel(const DecimalReal& x, long fuel);

// Re-expose x through an opaque producer: exactness information is dropped,
// forcing arithmetic consumers onto their digit-scan paths.
DecimalReal as_algorithmic(const DecimalReal& x);

// Text dump: header "D10 v1 a0=<int>", then the first k fractional digits in
// lines of 50. May throw UndeterminedError.
std::string dump_digits(const DecimalReal& x, int k);

}  // namespace drcalc

#endif
