#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "drcalc/arithmetic.hpp"
#include "drcalc/constructions.hpp"

using namespace drcalc;

namespace {

const char* kSqrt2Digits = "414213562373095048801688724209698078569671875376948073176679737990732478462107"
                           "038850387534327641572735013846230912297";
const char* kEDigits = "718281828459045235360287471352662497757247093699959574966967627724076630353547"
                       "594571382178525166427427466391932003059";

CutOracle sqrt2_cut() {
  return {[](const Rational& q) { return q < 0 || q * q < 2; }, Rational(1), Rational(2)};
}

CauchyInput e_series() {
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
  // Remainder past q_n is below 2/(n+1)!, so any N with 2/(N+1)! <= 10^-s
  // keeps all later terms within 10^-s of q_N.
  c.modulus = [](int s) {
    BigInt fact = 1;  // (n+1)! at n = 0
    long n = 0;
    while (2 * pow10(s) > fact) {
      ++n;
      fact *= (n + 1);
    }
    return n;
  };
  return c;
}

void check_fractional_digits(const DecimalReal& x, const char* digits, int upto) {
  for (int k = 1; k <= upto; ++k) {
    INFO("digit position " << k);
    CHECK(x.digit(k) == digits[k - 1] - '0');
  }
}

}  // namespace

TEST_CASE("dedekind: the sqrt(2) cut streams sqrt(2)") {
  auto x = from_dedekind(sqrt2_cut());
  CHECK(x.backing() == Backing::Algorithmic);
  CHECK(x.a0() == 1);
  CHECK(x.truncation(8).str() == "1.41421356");
  check_fractional_digits(x, kSqrt2Digits, 40);
}

TEST_CASE("dedekind: truncations bracket the cut at every scale") {
  auto cut = sqrt2_cut();
  auto x = from_dedekind(sqrt2_cut());
  for (int k = 0; k <= 20; ++k) {
    Rational t = x.truncation(k).to_rational();
    CHECK(cut.in_lower(t));
    CHECK_FALSE(cut.in_lower(t + Rational(BigInt(1), pow10(k))));
  }
}

TEST_CASE("dedekind: witness validation") {
  CutOracle bad = sqrt2_cut();
  bad.witness_lo = Rational(3);  // classified into B
  bad.witness_hi = Rational(4);
  CHECK_THROWS_AS(from_dedekind(bad), ConstructionError);

  CutOracle swapped = sqrt2_cut();
  swapped.witness_lo = Rational(2);
  swapped.witness_hi = Rational(1);
  CHECK_THROWS_AS(from_dedekind(swapped), ConstructionError);

  CutOracle everything{[](const Rational&) { return true; }, Rational(0), Rational(1)};
  CHECK_THROWS_AS(from_dedekind(everything), ConstructionError);
}

TEST_CASE("dedekind: cut pinned to a rational is rejected via the 9-run guard") {
  // A = {q < 1} makes B = {q >= 1} have a smallest element; the digit search
  // would emit 0.999... forever.
  CutOracle at_one{[](const Rational& q) { return q < 1; }, Rational(0), Rational(2)};
  auto x = from_dedekind(at_one);
  CHECK_THROWS_AS(x.truncation(70), ConstructionError);

  CutOracle at_five{[](const Rational& q) { return q < 5; }, Rational(4), Rational(6)};
  auto y = from_dedekind(at_five);
  CHECK(y.a0() == 4);  // 4 in A, 5 in B: the search hugs 5 from below
  CHECK_THROWS_AS(y.truncation(70), ConstructionError);
}

TEST_CASE("cauchy: oscillating 1 + (-1)^n/10^n identifies the limit 1") {
  CauchyInput c;
  c.term = [](long n) {
    Rational step(BigInt(1), pow10(static_cast<int>(n)));
    return n % 2 == 0 ? Rational(1) + step : Rational(1) - step;
  };
  c.modulus = [](int s) { return static_cast<long>(s) + 1; };
  auto x = from_cauchy(std::move(c));
  CHECK(x.truncation(5).str() == "1.00000");
  CHECK(x.digit(40) == 0);
  CHECK(x.a0() == 1);
}

TEST_CASE("cauchy: constant sequence") {
  CauchyInput c;
  c.term = [](long) { return Rational(22, 7); };
  c.modulus = [](int) { return 1L; };
  auto x = from_cauchy(std::move(c));
  auto want = DecimalReal::from_rational(22, 7);
  CHECK(x.a0() == 3);
  for (int k = 1; k <= 15; ++k) CHECK(x.digit(k) == want.digit(k));
}

TEST_CASE("cauchy: factorial series reaches e, including the 999 run") {
  auto e = from_cauchy(e_series());
  CHECK(e.a0() == 2);
  CHECK(e.truncation(9).str() == "2.718281828");
  // Positions 47-49 are 999: the digit cell resolves only a few scales
  // deeper, exercising the probe loop.
  check_fractional_digits(e, kEDigits, 60);
}

TEST_CASE("cauchy: modulus violations surface as construction errors") {
  CauchyInput c;
  // Jumps between 0 and 1/2 forever; no real has all these enclosures.
  c.term = [](long n) { return n % 2 == 0 ? Rational(0) : Rational(1, 2); };
  c.modulus = [](int s) { return static_cast<long>(s); };
  auto x = from_cauchy(std::move(c));
  CHECK_THROWS_AS(x.truncation(3), ConstructionError);
}

TEST_CASE("enclosures: nested chains emit digits; width violations are rejected") {
  auto x = from_enclosures(
      [](int s) {
        Rational r(BigInt(1), pow10(s + 1));
        return RationalInterval(Rational(1, 3) - r, Rational(1, 3) + r);
      },
      "third");
  CHECK(x.truncation(6).str() == "0.333333");

  auto wide = from_enclosures([](int) { return RationalInterval(Rational(0), Rational(1)); },
                              "too wide");
  CHECK_THROWS_AS(wide.truncation(2), ConstructionError);
}

TEST_CASE("enclosures: a persistently straddled grid point is identified") {
  auto x = from_enclosures(
      [](int s) {
        Rational r(BigInt(1), pow10(s + 1));
        return RationalInterval(Rational(1, 2) - r, Rational(1, 2) + r);
      },
      "half");
  CHECK(x.truncation(4).str() == "0.5000");
  CHECK(x.digit(30) == 0);
}

TEST_CASE("glb_finite: picks the dictionary minimum") {
  std::vector<DecimalReal> xs = {
      as_algorithmic(DecimalReal::from_rational(22, 7)),   // 3.1428...
      as_algorithmic(DecimalReal::from_rational(2718, 1000)),
      as_algorithmic(DecimalReal::from_scaled(ScaledDecimal::parse("2.5"))),
  };
  auto g = glb_finite(xs);
  CHECK(g.truncation(4).str() == "2.5000");

  std::vector<DecimalReal> ys = {
      as_algorithmic(DecimalReal::from_rational(1, 3)),
      as_algorithmic(DecimalReal::from_scaled(ScaledDecimal::parse("0.333"))),
      as_algorithmic(DecimalReal::from_scaled(ScaledDecimal::parse("0.3334"))),
  };
  auto h = glb_finite(ys);
  CHECK(h.truncation(6).str() == "0.333000");
  // Never above any element.
  for (const auto& y : ys) CHECK(cmp_with_fuel(h, y, 30).result != CmpResult::Greater);
}

TEST_CASE("glb_finite: exact lists short-circuit to the exact minimum") {
  std::vector<DecimalReal> xs = {DecimalReal::from_rational(1, 3),
                                 DecimalReal::from_rational(333, 1000),
                                 DecimalReal::from_rational(3334, 10000)};
  auto g = glb_finite(xs);
  REQUIRE(g.exact_value().has_value());
  CHECK(*g.exact_value() == Rational(333, 1000));
}

TEST_CASE("glb_finite: singleton returns the element; empty list is rejected") {
  auto x = as_algorithmic(DecimalReal::from_rational(1, 7));
  auto g = glb_finite({x});
  CHECK(g.same_handle(x));
  CHECK_THROWS_AS(glb_finite({}), std::invalid_argument);
}

TEST_CASE("glb_prefix: glb of the first count elements") {
  auto g = glb_prefix(
      [](long i) { return as_algorithmic(DecimalReal::from_rational(10 - i, 3)); }, 5);
  // Elements 10/3, 3, 8/3, 7/3, 2: minimum 2.
  CHECK(g.truncation(3).str() == "2.000");
  CHECK_THROWS_AS(glb_prefix([](long) { return DecimalReal(); }, 0), std::invalid_argument);
}

TEST_CASE("cantor_pair: interleaving with zero boxes for zero integer parts") {
  auto z = cantor_pair(DecimalReal::from_scaled(ScaledDecimal::parse("0.1")),
                       DecimalReal::from_scaled(ScaledDecimal::parse("0.2")));
  CHECK(z.truncation(9).str() == "0.120000000");
  auto zz = cantor_pair(DecimalReal::from_int(0), DecimalReal::from_int(0));
  CHECK(zz.truncation(12).str() == "0.000000000000");
}

TEST_CASE("cantor_pair: box stream encodes both integer parts in unary") {
  auto z = cantor_pair(DecimalReal::from_scaled(ScaledDecimal::parse("2.5")),
                       DecimalReal::from_scaled(ScaledDecimal::parse("(-1).25")));
  // x digits 5,0,0,...; y digits 2,5,0,...; boxes E(2)=0,1,1,0 then E(-1)=1,1,0.
  CHECK(z.truncation(21).str() == "0.520051001000001001000");
}

TEST_CASE("cantor_unpair: inverts cantor_pair") {
  auto x = DecimalReal::from_scaled(ScaledDecimal::parse("2.5"));
  auto y = DecimalReal::from_scaled(ScaledDecimal::parse("(-1).25"));
  auto [px, py] = cantor_unpair(cantor_pair(x, y));
  CHECK(px.a0() == 2);
  CHECK(py.a0() == -1);
  for (int k = 0; k <= 25; ++k) {
    CHECK(px.digit(k) == x.digit(k));
    CHECK(py.digit(k) == y.digit(k));
  }
}

TEST_CASE("cantor_unpair: malformed box streams name the defect position") {
  // Digit position 3 (the first box) holds 5: not a sign digit.
  auto bad_sign = cantor_unpair(DecimalReal::from_scaled(ScaledDecimal::parse("0.005")));
  try {
    bad_sign.first.a0();
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& err) {
    CHECK(std::string(err.what()).find("position 3") != std::string::npos);
  }

  // Sign box 1 followed immediately by terminator: negative zero.
  auto neg_zero = cantor_unpair(DecimalReal::from_scaled(ScaledDecimal::parse("0.000000001")));
  CHECK_THROWS_AS(neg_zero.first.a0(), ConstructionError);

  // Nonzero box after both encodings ended.
  auto late_box =
      cantor_unpair(DecimalReal::from_scaled(ScaledDecimal::parse("0.000000000000001")));
  CHECK(late_box.first.a0() == 0);  // encodings parse fine
  try {
    late_box.first.truncation(5);
    FAIL("expected ConstructionError");
  } catch (const ConstructionError& err) {
    CHECK(std::string(err.what()).find("position 15") != std::string::npos);
  }
}

TEST_CASE("cantor_pair: distinct pairs are digit-distinguishable") {
  auto a = cantor_pair(DecimalReal::from_scaled(ScaledDecimal::parse("0.1")),
                       DecimalReal::from_scaled(ScaledDecimal::parse("0.2")));
  auto b = cantor_pair(DecimalReal::from_scaled(ScaledDecimal::parse("0.2")),
                       DecimalReal::from_scaled(ScaledDecimal::parse("0.1")));
  CHECK(cmp_with_fuel(a, b, 10).result != CmpResult::Indistinguishable);
}

TEST_CASE("cantor_pair composes with arithmetic operands") {
  // Paired values are ordinary reals: feed a sum through the pairing.
  auto s = add(as_algorithmic(DecimalReal::from_rational(1, 3)),
               as_algorithmic(DecimalReal::from_rational(1, 7)));
  auto z = cantor_pair(s, DecimalReal::from_int(-2));
  auto [px, py] = cantor_unpair(z);
  CHECK(py.a0() == -2);
  auto want = DecimalReal::from_rational(10, 21);
  for (int k = 0; k <= 12; ++k) CHECK(px.digit(k) == want.digit(k));
}
