#include "drcalc/scaled_decimal.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace drcalc {

ScaledDecimal::ScaledDecimal(BigInt mantissa, int scale)
    : mantissa_(std::move(mantissa)), scale_(scale) {
  if (scale < 0) throw std::invalid_argument("ScaledDecimal: scale must be >= 0");
}

Rational ScaledDecimal::to_rational() const { return Rational(mantissa_, pow10(scale_)); }

BigInt ScaledDecimal::integer_part() const { return floor_div(mantissa_, pow10(scale_)); }

std::string ScaledDecimal::str() const {
  BigInt a0 = integer_part();
  std::ostringstream out;
  if (scale_ == 0) {
    out << a0;
    return out.str();
  }
  if (a0 < 0)
    out << "(" << a0 << ")";
  else
    out << a0;
  BigInt frac = mantissa_ - a0 * pow10(scale_);  // in [0, 10^scale)
  std::string digits = frac.str();
  out << "." << std::string(static_cast<std::size_t>(scale_) - digits.size(), '0') << digits;
  return out.str();
}

namespace {

// cpp_int's string constructor reads a leading 0 as octal; digit runs like
// "099" must be accumulated by hand.
BigInt digits_to_int(std::string_view digits) {
  BigInt v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

ScaledDecimal ScaledDecimal::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("ScaledDecimal::parse: ") + what + " in \"" +
                                std::string(text) + "\"");
  };
  if (text.empty()) fail("empty input");

  bool floor_form = false;
  bool neg = false;
  if (text[i] == '(') {
    floor_form = true;
    ++i;
  }
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t int_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == int_start) fail("missing integer part");
  BigInt int_part = digits_to_int(text.substr(int_start, i - int_start));
  if (floor_form) {
    if (i >= text.size() || text[i] != ')') fail("missing ')'");
    ++i;
  }
  std::string frac_digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == frac_start) fail("missing fractional digits");
    frac_digits = std::string(text.substr(frac_start, i - frac_start));
  }
  if (i != text.size()) fail("trailing characters");

  int scale = static_cast<int>(frac_digits.size());
  BigInt frac = digits_to_int(frac_digits);
  if (floor_form) {
    // a0 given directly (floor form): value = a0 + 0.frac.
    BigInt a0 = neg ? BigInt(-int_part) : int_part;
    return ScaledDecimal(a0 * pow10(scale) + frac, scale);
  }
  // Conventional form: sign applies to the whole magnitude.
  BigInt mag = int_part * pow10(scale) + frac;
  return ScaledDecimal(neg ? BigInt(-mag) : mag, scale);
}

ScaledDecimal add_exact(const ScaledDecimal& a, const ScaledDecimal& b) {
  int k = std::max(a.scale(), b.scale());
  BigInt m = a.mantissa() * pow10(k - a.scale()) + b.mantissa() * pow10(k - b.scale());
  return ScaledDecimal(std::move(m), k);
}

ScaledDecimal sub_exact(const ScaledDecimal& a, const ScaledDecimal& b) {
  int k = std::max(a.scale(), b.scale());
  BigInt m = a.mantissa() * pow10(k - a.scale()) - b.mantissa() * pow10(k - b.scale());
  return ScaledDecimal(std::move(m), k);
}

ScaledDecimal mul_exact(const ScaledDecimal& a, const ScaledDecimal& b) {
  return ScaledDecimal(a.mantissa() * b.mantissa(), a.scale() + b.scale());
}

ScaledDecimal negate_exact(const ScaledDecimal& a) {
  return ScaledDecimal(-a.mantissa(), a.scale());
}

ScaledDecimal truncate(const ScaledDecimal& a, int k) {
  if (k < 0) throw std::invalid_argument("truncate: k must be >= 0");
  if (k >= a.scale()) return ScaledDecimal(a.mantissa() * pow10(k - a.scale()), k);
  return ScaledDecimal(floor_div(a.mantissa(), pow10(a.scale() - k)), k);
}

Digit digit_at(const ScaledDecimal& a, int k) {
  if (k < 0) throw std::invalid_argument("digit_at: k must be >= 0");
  if (k == 0) return a.integer_part();
  // a_k = m_k - 10*m_{k-1} where m_j is the scale-j truncation mantissa.
  return truncate(a, k).mantissa() - 10 * truncate(a, k - 1).mantissa();
}

Ordering cmp_exact(const ScaledDecimal& a, const ScaledDecimal& b) {
  int k = std::max(a.scale(), b.scale());
  BigInt ma = a.mantissa() * pow10(k - a.scale());
  BigInt mb = b.mantissa() * pow10(k - b.scale());
  if (ma < mb) return Ordering::Less;
  if (ma > mb) return Ordering::Greater;
  return Ordering::Equal;
}

bool rational_terminates(const Rational& q) {
  BigInt d = denominator(q);  // cpp_rational keeps this reduced and positive
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

ScaledDecimal scaled_from_rational(const Rational& q) {
  BigInt d = denominator(q);
  int two = 0, five = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++two;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++five;
  }
  if (d != 1) throw std::domain_error("scaled_from_rational: expansion does not terminate");
  int scale = std::max(two, five);
  BigInt m = numerator(q) * (pow10(scale) / denominator(q));
  return ScaledDecimal(std::move(m), scale);
}

}  // namespace drcalc
