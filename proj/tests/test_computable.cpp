#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "drcalc/arithmetic.hpp"
#include "drcalc/arclength.hpp"
#include "drcalc/computable.hpp"

using namespace drcalc;

namespace {

const char* kSqrt2 = "1.41421356237309504880168872420969807856967187537694807317667973799073247846210"
                     "7038850387534327641572735013846230912297024";
const char* kPiPlusE = "5.859874482048838473822930854632165381954416";

// pi (+,-,*,/) sqrt2 references.
const char* kSum = "4.555806215962888287264332107489200962766841274752053894151624";
const char* kDiff = "1.727379091216698189660954659069804805627497523998157747798264";
const char* kProd = "4.442882938158366247015880990060693698614621689375690223085395";
const char* kQuot = "2.221441469079183123507940495030346849307310844687845111542697";

void check_prefix(const DecimalReal& x, const char* digits, int upto) {
  CHECK(x.a0() == digits[0] - '0');
  for (int k = 1; k <= upto; ++k) {
    INFO("digit position " << k);
    CHECK(x.digit(k) == digits[k + 1] - '0');
  }
}

}  // namespace

TEST_CASE("sqrt_rational: streamed digits of sqrt(2)") {
  auto s = sqrt_rational(Rational(2));
  CHECK(s.backing() == Backing::Algorithmic);
  CHECK(s.truncation(8).str() == "1.41421356");
  check_prefix(s, kSqrt2, 40);
}

TEST_CASE("sqrt_rational: exact roots collapse to exact backings") {
  auto two = sqrt_rational(Rational(4));
  CHECK(two.backing() == Backing::Terminating);
  CHECK(two.truncation(3).str() == "2.000");

  auto zero = sqrt_rational(Rational(0));
  CHECK(zero.truncation(3).str() == "0.000");

  auto frac = sqrt_rational(Rational(4, 9));  // 2/3: rational, repeating
  CHECK(frac.backing() == Backing::Rational);
  CHECK(frac.truncation(5).str() == "0.66666");

  auto grid = sqrt_rational(Rational(25, 16));
  CHECK(grid.backing() == Backing::Terminating);
  CHECK(grid.truncation(4).str() == "1.2500");
}

TEST_CASE("sqrt_rational: truncations bracket the root at every scale") {
  for (const Rational& r : {Rational(2), Rational(3), Rational(1, 2), Rational(7, 5),
                            Rational(123456, 7)}) {
    auto s = sqrt_rational(r);
    for (int k = 0; k <= 25; ++k) {
      Rational t = s.truncation(k).to_rational();
      Rational step(BigInt(1), pow10(k));
      CHECK(t * t <= r);
      CHECK(r < (t + step) * (t + step));
    }
  }
}

TEST_CASE("sqrt_rational: negative operand is rejected") {
  CHECK_THROWS_AS(sqrt_rational(Rational(-1)), std::domain_error);
}

TEST_CASE("e_real: series digits") {
  auto e = e_real();
  CHECK(e.truncation(0).str() == "2");
  CHECK(e.truncation(9).str() == "2.718281828");
  CHECK(e.digit(15) == 5);  // 2.718281828459045...
}

TEST_CASE("e_real: subtracting an independent copy is honestly undetermined") {
  auto diff = sub(e_real(), e_real(), Fuel{40});
  auto out = diff.digit_outcome(0);
  CHECK_FALSE(out.determined);
  CHECK(out.horizon == 40);
  CHECK_THROWS_AS(diff.truncation(0), UndeterminedError);
}

TEST_CASE("pi and sqrt2 combine to 30+ certified digits under every operation") {
  auto pi = pi_real();
  auto s2 = sqrt_rational(Rational(2));
  Fuel fuel{300};
  check_prefix(add(pi, s2, fuel), kSum, 30);
  check_prefix(sub(pi, s2, fuel), kDiff, 30);
  check_prefix(mul(pi, s2, fuel), kProd, 30);
  check_prefix(div(pi, s2, fuel), kQuot, 30);
}

TEST_CASE("known_constants registry") {
  const auto& table = known_constants();
  REQUIRE(table.size() == 3);
  CHECK(table[0].name == "pi");
  CHECK(table[1].name == "e");
  CHECK(table[2].name == "sqrt2");
  CHECK(table[0].make().truncation(4).str() == "3.1415");
  CHECK(table[1].make().truncation(4).str() == "2.7182");
  CHECK(table[2].make().truncation(4).str() == "1.4142");
  for (const auto& c : table) CHECK_FALSE(c.note.empty());
}

TEST_CASE("carry_stats: reproducible and seed-sensitive") {
  auto a = carry_stats(StatsOp::Add, 6, 500, 42);
  auto b = carry_stats(StatsOp::Add, 6, 500, 42);
  CHECK(a.frequency_first_choice == b.frequency_first_choice);
  CHECK(a.operation == "add");
  CHECK(a.trials == 500);
  CHECK(a.seed == 42);

  auto c = carry_stats(StatsOp::Add, 6, 500, 43);
  CHECK(c.frequency_first_choice != a.frequency_first_choice);  // overwhelmingly likely
}

TEST_CASE("carry_stats: single trial is all-or-nothing") {
  auto r = carry_stats(StatsOp::Add, 6, 1, 7);
  CHECK((r.frequency_first_choice == 0 || r.frequency_first_choice == 1));
}

TEST_CASE("carry_stats: add frequency sits near 0.95") {
  auto r = carry_stats(StatsOp::Add, 6, 20000, 2024);
  CHECK(r.frequency_first_choice > Rational(94, 100));
  CHECK(r.frequency_first_choice < Rational(96, 100));
}

TEST_CASE("carry_stats: mul frequency stays above 0.9") {
  auto r = carry_stats(StatsOp::Mul, 6, 20000, 2024);
  CHECK(r.operation == "mul");
  CHECK(r.frequency_first_choice > Rational(9, 10));
}

TEST_CASE("carry_stats: wide positions leave the fast integer path") {
  auto r = carry_stats(StatsOp::Add, 12, 2000, 99);  // 23 working digits
  CHECK(r.frequency_first_choice > Rational(90, 100));
  auto again = carry_stats(StatsOp::Add, 12, 2000, 99);
  CHECK(r.frequency_first_choice == again.frequency_first_choice);
}

TEST_CASE("carry_stats: argument validation") {
  CHECK_THROWS_AS(carry_stats(StatsOp::Add, 6, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(carry_stats(StatsOp::Add, -1, 10, 1), std::invalid_argument);
}

TEST_CASE("pi_plus_e_demo: certified digits with their scan depths") {
  auto rows = pi_plus_e_demo(10);
  REQUIRE(rows.size() == 10);
  for (int i = 0; i < 10; ++i) {
    INFO("row " << i);
    CHECK(rows[i].position == i + 1);
    CHECK(rows[i].digit == kPiPlusE[i + 2] - '0');
    CHECK(rows[i].depth >= rows[i].position);
    if (i > 0) CHECK(rows[i].depth >= rows[i - 1].depth);
  }
}
