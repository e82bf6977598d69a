#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "drcalc/eval.hpp"

using namespace drcalc;

namespace {

DecimalReal eval_text(const std::string& src, const Fuel& fuel = {}) {
  return evaluate(*parse_expr(src), fuel);
}

}  // namespace

TEST_CASE("literals, constants and grouping") {
  CHECK(*eval_text("(-2).443").exact_value() == Rational(-1557, 1000));
  CHECK(eval_text("pi").truncation(10).str() == "3.1415926535");
  CHECK(eval_text("e").truncation(9).str() == "2.718281828");
  CHECK(eval_text("sqrt2").truncation(10).str() == "1.4142135623");
  CHECK(*eval_text("(1 + 2) * 3").exact_value() == Rational(9));
}

TEST_CASE("negation uses the integer-part convention") {
  CHECK(*eval_text("-0.5").exact_value() == Rational(-1, 2));
  CHECK(eval_text("-pi").truncation(5).str() == "(-4).85840");
}

TEST_CASE("reciprocal and division") {
  CHECK(*eval_text("recip(4)").exact_value() == Rational(1, 4));
  CHECK(eval_text("recip(pi)").truncation(10).str() == "0.3183098861");
  CHECK(eval_text("1 / 7").truncation(12).str() == "0.142857142857");
  CHECK_THROWS_AS(eval_text("recip(0)"), std::domain_error);
  CHECK_THROWS_AS(eval_text("1 / 0"), std::domain_error);
}

TEST_CASE("sqrt is confined to exactly known rational operands") {
  CHECK(eval_text("sqrt(2)").truncation(10).str() == "1.4142135623");
  CHECK(*eval_text("sqrt(2.25)").exact_value() == Rational(3, 2));
  CHECK_THROWS_AS(eval_text("sqrt(0 - 4)"), std::domain_error);
  CHECK_THROWS_AS(eval_text("sqrt(pi)"), std::domain_error);
}

TEST_CASE("glb and pair through the evaluator") {
  CHECK(eval_text("glb(1/3, 0.333, 0.3334)").truncation(6).str() == "0.333000");
  CHECK(eval_text("pair(0.12, 0.45)").truncation(9).str() == "0.140250000");
}

TEST_CASE("fuel reaches the streaming operations") {
  DecimalReal v = eval_text("e - e", Fuel{77});
  DigitOutcome o = v.digit_outcome(0);
  CHECK_FALSE(o.determined);
  CHECK(o.horizon == 77);
}

TEST_CASE("render_digits on fully determined values") {
  Rendered r = render_digits(eval_text("1/3 + 2/3"), 5);
  CHECK(r.text == "1.00000");
  CHECK(r.status == EvalStatus::ExactTerminating);
  CHECK(r.digits_emitted == 5);
  CHECK(status_text(r) == "exact-terminating");

  Rendered stream = render_digits(eval_text("pi / sqrt(2)"), 10);
  CHECK(stream.text == "2.2214414690");
  CHECK(stream.status == EvalStatus::Streamed);
  CHECK(status_text(stream) == "streamed");

  Rendered zero_digits = render_digits(eval_text("7"), 0);
  CHECK(zero_digits.text == "7");
  CHECK(zero_digits.digits_emitted == 0);
}

TEST_CASE("render_digits never prints past an exhausted position") {
  Rendered gone = render_digits(eval_text("e - e", Fuel{50}), 10);
  CHECK(gone.status == EvalStatus::Undetermined);
  CHECK(gone.digits_emitted == -1);
  CHECK(gone.horizon == 50);
  CHECK(gone.text == "…at horizon 50");
  CHECK(status_text(gone) == "undetermined(50)");

  // The forced product determines its integer part but no fractional digit.
  DecimalReal forced = mul(as_algorithmic(DecimalReal::from_rational(Rational(1, 3))),
                           as_algorithmic(DecimalReal::from_scaled(ScaledDecimal::parse("0.3"))),
                           Fuel{60});
  Rendered partial = render_digits(forced, 10);
  CHECK(partial.status == EvalStatus::Undetermined);
  CHECK(partial.digits_emitted == 0);
  CHECK(partial.text == "0…at horizon 60");
}

TEST_CASE("render_digits validates its digit count") {
  CHECK_THROWS_AS(render_digits(eval_text("1"), -1), std::invalid_argument);
}
