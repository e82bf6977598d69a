#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "drcalc/arclength.hpp"
#include "drcalc/oracle.hpp"

using namespace drcalc;

namespace {

// First digits of the targets, used to anchor enclosures from the other
// side: an oracle interval must overlap [prefix, prefix + step].
RationalInterval ref_interval(const std::string& digits, int scale) {
  Rational lo(BigInt(digits.c_str()), pow10(scale));
  return {lo, lo + Rational(BigInt(1), pow10(scale))};
}

bool overlaps(const RationalInterval& a, const RationalInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

const char* kPi31 = "3141592653589793238462643383279";
const char* kE31 = "2718281828459045235360287471352";
const char* kSqrt2_31 = "1414213562373095048801688724209";
const char* kPiPlusSqrt2 = "4555806215962888287";
const char* kPiTimesSqrt2 = "4442882938158366247";
const char* kPiOverSqrt2 = "2221441469079183123";

Rational step(int scale) { return Rational(BigInt(1), pow10(scale)); }

}  // namespace

TEST_CASE("exact rational expressions evaluate to point intervals") {
  RationalInterval third = interval_eval(*parse_expr("1/3"), 4);
  CHECK(third.lo == Rational(1, 3));
  CHECK(third.hi == Rational(1, 3));

  RationalInterval r = interval_eval(*parse_expr("recip(3)"), 10);
  CHECK(r.width() == 0);
  CHECK(r.lo == Rational(1, 3));

  RationalInterval p = interval_eval(*parse_expr("2.5 * 4"), 0);
  CHECK(p.lo == Rational(10));
  CHECK(p.hi == Rational(10));

  RationalInterval floorform = interval_eval(*parse_expr("(-8).765 + 5.678"), 3);
  CHECK(floorform.lo == Rational(-1557, 1000));
  CHECK(floorform.width() <= step(3));
}

TEST_CASE("constants meet their reference digits") {
  RationalInterval pi = interval_eval(*parse_expr("pi"), 12);
  CHECK(pi.width() <= step(12));
  CHECK(overlaps(pi, ref_interval(kPi31, 30)));

  RationalInterval e = interval_eval(*parse_expr("e"), 12);
  CHECK(e.width() <= step(12));
  CHECK(overlaps(e, ref_interval(kE31, 30)));

  RationalInterval s2 = interval_eval(*parse_expr("sqrt2"), 12);
  CHECK(s2.width() <= step(12));
  CHECK(overlaps(s2, ref_interval(kSqrt2_31, 30)));

  RationalInterval s2f = interval_eval(*parse_expr("sqrt(2)"), 12);
  CHECK(s2f.width() <= step(12));
  CHECK(overlaps(s2f, ref_interval(kSqrt2_31, 30)));
}

TEST_CASE("compound enclosures are tight and correctly placed") {
  RationalInterval sum = interval_eval(*parse_expr("pi + sqrt(2)"), 10);
  CHECK(sum.width() <= step(10));
  CHECK(overlaps(sum, ref_interval(kPiPlusSqrt2, 18)));

  RationalInterval prod = interval_eval(*parse_expr("pi * sqrt(2)"), 10);
  CHECK(prod.width() <= step(10));
  CHECK(overlaps(prod, ref_interval(kPiTimesSqrt2, 18)));

  RationalInterval quot = interval_eval(*parse_expr("pi / sqrt(2)"), 10);
  CHECK(quot.width() <= step(10));
  CHECK(overlaps(quot, ref_interval(kPiOverSqrt2, 18)));
}

TEST_CASE("cancellation stays centered on zero") {
  RationalInterval diff = interval_eval(*parse_expr("pi - pi"), 8);
  CHECK(diff.lo <= 0);
  CHECK(diff.hi >= 0);
  CHECK(diff.width() <= step(8));

  RationalInterval s = interval_eval(*parse_expr("sqrt(2) - sqrt2"), 6);
  CHECK(s.lo <= 0);
  CHECK(s.hi >= 0);
  CHECK(s.width() <= step(6));
}

TEST_CASE("glb takes pointwise minima") {
  RationalInterval g = interval_eval(*parse_expr("glb(1/3, 0.333, 0.3334)"), 6);
  CHECK(g.lo == Rational(333, 1000));
  CHECK(g.hi == Rational(333, 1000));

  RationalInterval picked = interval_eval(*parse_expr("glb(pi, 3)"), 6);
  CHECK(picked.lo == Rational(3));
  CHECK(picked.hi == Rational(3));
}

TEST_CASE("sqrt of a negative value is a domain error") {
  CHECK_THROWS_AS(interval_eval(*parse_expr("sqrt(0 - 2)"), 4), OracleError);
}

TEST_CASE("division by an enclosure stuck at zero") {
  try {
    interval_eval(*parse_expr("1 / (pi - pi)"), 4);
    FAIL("expected OracleError");
  } catch (const OracleUnsupported&) {
    FAIL("wrong error class");
  } catch (const OracleError& err) {
    CHECK(std::string(err.what()).find("containing zero") != std::string::npos);
  }
}

TEST_CASE("pair lies outside the oracle's fragment") {
  CHECK_THROWS_AS(interval_eval(*parse_expr("pair(1, 2)"), 3), OracleUnsupported);
  IntervalReal o = interval_real(parse_expr("pair(1/3, 0.5)"));
  CHECK_THROWS_AS(o.refine(3), OracleUnsupported);
}

TEST_CASE("refine returns a nested chain regardless of call order") {
  IntervalReal o = interval_real(parse_expr("pi"));
  RationalInterval e10 = o.refine(10);
  RationalInterval e4 = o.refine(4);
  RationalInterval e12 = o.refine(12);

  CHECK(e10.width() <= step(10));
  CHECK(e4.width() <= step(4));
  CHECK(e4.lo <= e10.lo);
  CHECK(e10.hi <= e4.hi);
  CHECK(e10.lo <= e12.lo);
  CHECK(e12.hi <= e10.hi);

  RationalInterval again = o.refine(10);
  CHECK(again.lo == e10.lo);
  CHECK(again.hi == e10.hi);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(interval_eval(*parse_expr("1"), -1), std::invalid_argument);
  IntervalReal o = interval_real(parse_expr("1"));
  CHECK_THROWS_AS(o.refine(-2), std::invalid_argument);
  CHECK_THROWS_AS(certify_digits(DecimalReal::from_int(1), o, -1), std::invalid_argument);
}

TEST_CASE("certification of the constructed pi") {
  IntervalReal o = interval_real(parse_expr("pi"));
  DecimalReal pi = pi_real();
  CHECK(certify_digits(pi, o, 10).status == CertifyStatus::Certified);
  CHECK(certify_digits(pi, o, 25).status == CertifyStatus::Certified);
}

TEST_CASE("certification of an exact value against its oracle") {
  IntervalReal o = interval_real(parse_expr("recip(3)"));
  CertifyResult r = certify_digits(DecimalReal::from_rational(Rational(1, 3)), o, 20);
  CHECK(r.status == CertifyStatus::Certified);
}

TEST_CASE("a corrupted value is refuted at the first bad position") {
  IntervalReal o = interval_real(parse_expr("pi"));

  CertifyResult r4 = certify_digits(DecimalReal::from_rational(Rational(31416, 10000)), o, 4);
  CHECK(r4.status == CertifyStatus::Mismatch);
  CHECK(r4.position == 4);

  // 3.14159 is right through position 5 and wrong from 6 on.
  CertifyResult r10 = certify_digits(DecimalReal::from_rational(Rational(314159, 100000)), o, 10);
  CHECK(r10.status == CertifyStatus::Mismatch);
  CHECK(r10.position == 6);
}

TEST_CASE("an enclosure pinned to a cell edge stays inconclusive") {
  // pi - pi + 1 hovers around 1 without ever committing to one side, so the
  // digit cell [1, 1 + 10^-k) of the exact value 1 can never be confirmed
  // or refuted.
  IntervalReal o = interval_real(parse_expr("pi - pi + 1"));
  CertifyResult r = certify_digits(DecimalReal::from_int(1), o, 3);
  CHECK(r.status == CertifyStatus::Inconclusive);
  CHECK(r.position == -1);
}

TEST_CASE("exhaustive small check over scale-1 values") {
  SmallCheckReport rep = exhaustive_small_check(1, 1);
  CHECK(rep.pairs_checked == 30 * 30 + 1);
  CHECK(rep.triples_checked == 30 * 30 * 30);
  CHECK(rep.counterexamples == 0);
  CHECK(rep.first_counterexample.empty());
}

TEST_CASE("exhaustive small check over integer values") {
  SmallCheckReport rep = exhaustive_small_check(0, 2);
  CHECK(rep.pairs_checked == 5 * 5 + 1);
  CHECK(rep.triples_checked == 5 * 5 * 5);
  CHECK(rep.counterexamples == 0);
}

TEST_CASE("exhaustive small check over scale-2 values") {
  SmallCheckReport rep = exhaustive_small_check(2, 1);
  CHECK(rep.pairs_checked == 300 * 300 + 1);
  CHECK(rep.triples_checked == 30 * 30 * 30);
  CHECK(rep.counterexamples == 0);
}

TEST_CASE("small check rejects out-of-range bounds") {
  CHECK_THROWS_AS(exhaustive_small_check(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_small_check(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_small_check(1, 3), std::invalid_argument);
}
