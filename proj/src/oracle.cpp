#include "drcalc/oracle.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "drcalc/arithmetic.hpp"

namespace drcalc {

namespace {

RationalInterval ieval(const Expr& e, int scale);

// atan(1/x) bracketed by alternating partial sums; the error is below the
// first omitted term.
RationalInterval atan_inv(long x, const Rational& eps) {
  Rational sum = 0;
  BigInt x2 = BigInt(x) * x;
  BigInt power = x;  // x^(2i+1)
  long i = 0;
  for (;;) {
    Rational term(BigInt(1), BigInt(2 * i + 1) * power);
    if (term < eps) return {sum - term, sum + term};
    sum += i % 2 == 0 ? term : -term;
    ++i;
    power *= x2;
  }
}

// Machin's formula: pi = 16*atan(1/5) - 4*atan(1/239). Chosen precisely
// because it shares nothing with the geometric construction on the other
// side of the certification fence.
RationalInterval machin_pi(int scale) {
  Rational eps(BigInt(1), pow10(scale + 3));
  RationalInterval a5 = atan_inv(5, eps);
  RationalInterval a239 = atan_inv(239, eps);
  return RationalInterval(Rational(16)) * a5 - RationalInterval(Rational(4)) * a239;
}

RationalInterval e_interval(int scale) {
  Rational sum = 0;
  BigInt fact = 1;  // n!
  long n = 0;
  for (;;) {
    sum += Rational(BigInt(1), fact);
    BigInt next = fact * (n + 1);
    Rational tail(BigInt(2), next);  // bounds everything past 1/n!
    if (tail <= Rational(BigInt(1), pow10(scale + 1))) return {sum, sum + tail};
    fact = next;
    ++n;
  }
}

Rational scale_target(int scale) { return Rational(BigInt(1), pow10(scale)); }

// Deepening schedule shared by products and quotients. Six doublings reach
// roughly 64x the requested scale, after which further refinement of a
// divisor still straddling zero costs more than it can reveal.
constexpr int kRefinementRounds = 6;

RationalInterval mul_enclosure(const Expr& lhs, const Expr& rhs, int scale) {
  int m = scale + 2;
  for (int round = 0; round < kRefinementRounds; ++round) {
    RationalInterval p = ieval(lhs, m) * ieval(rhs, m);
    if (p.width() <= scale_target(scale)) return p;
    m = 2 * m + 4;
  }
  throw OracleError("oracle: product enclosure failed to narrow");
}

// num == nullptr computes a reciprocal. Deepens until the divisor clears
// zero and the quotient meets the width target.
RationalInterval div_enclosure(const Expr* num, const Expr& den, int scale) {
  int m = scale + 2;
  bool divisor_cleared = false;
  for (int round = 0; round < kRefinementRounds; ++round) {
    RationalInterval b = ieval(den, m);
    if (b.lo > 0 || b.hi < 0) {
      divisor_cleared = true;
      RationalInterval a = num ? ieval(*num, m) : RationalInterval(Rational(1));
      RationalInterval q = interval_div(a, b);
      if (q.width() <= scale_target(scale)) return q;
    }
    m = 2 * m + 4;
  }
  if (!divisor_cleared)
    throw OracleError("oracle: division by an interval containing zero after refinement cap");
  throw OracleError("oracle: quotient enclosure failed to narrow");
}

RationalInterval ieval(const Expr& e, int scale) {
  struct Visitor {
    int scale;

    RationalInterval operator()(const NumberNode& n) const {
      return RationalInterval(n.value.to_rational());
    }
    RationalInterval operator()(const ConstNode& c) const {
      if (c.name == "pi") return machin_pi(scale);
      if (c.name == "e") return e_interval(scale);
      return interval_sqrt(RationalInterval(Rational(2)), scale + 1);
    }
    RationalInterval operator()(const UnaryNode& u) const {
      switch (u.op) {
        case UnaryOp::Neg:
          return -ieval(*u.operand, scale);
        case UnaryOp::Sqrt: {
          RationalInterval a = ieval(*u.operand, 2 * scale + 4);
          if (a.hi < 0) throw OracleError("oracle: square root of a negative value");
          if (a.lo < 0) a = RationalInterval(Rational(0), a.hi);
          return interval_sqrt(a, scale + 1);
        }
        case UnaryOp::Recip:
        default:
          return div_enclosure(nullptr, *u.operand, scale);
      }
    }
    RationalInterval operator()(const BinaryNode& b) const {
      switch (b.op) {
        case BinaryOp::Add:
          return ieval(*b.lhs, scale + 1) + ieval(*b.rhs, scale + 1);
        case BinaryOp::Sub:
          return ieval(*b.lhs, scale + 1) - ieval(*b.rhs, scale + 1);
        case BinaryOp::Mul:
          return mul_enclosure(*b.lhs, *b.rhs, scale);
        case BinaryOp::Div:
        default:
          return div_enclosure(b.lhs.get(), *b.rhs, scale);
      }
    }
    RationalInterval operator()(const CallNode& c) const {
      if (c.kind == CallKind::Pair)
        throw OracleUnsupported("oracle: pair interleaves digits and is not interval-computable");
      RationalInterval acc = ieval(*c.args.front(), scale);
      for (std::size_t i = 1; i < c.args.size(); ++i) {
        RationalInterval next = ieval(*c.args[i], scale);
        acc = RationalInterval(std::min(acc.lo, next.lo), std::min(acc.hi, next.hi));
      }
      return acc;
    }
    RationalInterval operator()(const ParenNode& p) const { return ieval(*p.inner, scale); }
  };
  return std::visit(Visitor{scale}, e.node);
}

}  // namespace

RationalInterval interval_eval(const Expr& e, int scale) {
  if (scale < 0) throw std::invalid_argument("interval_eval: negative scale");
  return ieval(e, scale);
}

IntervalReal interval_real(ExprPtr e) {
  // refine(s) returns the intersection of the base enclosures at every
  // scale up to s, which makes the chain nested regardless of call order.
  struct State {
    std::mutex mu;
    std::vector<RationalInterval> chain;  // chain[j] = base(0) ∩ ... ∩ base(j)
  };
  auto state = std::make_shared<State>();
  IntervalReal out;
  out.refine = [e = std::move(e), state](int scale) {
    if (scale < 0) throw std::invalid_argument("refine: negative scale");
    std::lock_guard<std::mutex> lock(state->mu);
    while (state->chain.size() <= static_cast<std::size_t>(scale)) {
      int next = static_cast<int>(state->chain.size());
      RationalInterval base = ieval(*e, next);
      state->chain.push_back(state->chain.empty() ? base
                                                  : intersect(state->chain.back(), base));
    }
    return state->chain[static_cast<std::size_t>(scale)];
  };
  return out;
}

CertifyResult certify_digits(const DecimalReal& x, const IntervalReal& oracle, int k,
                             int scale_guard) {
  if (k < 0) throw std::invalid_argument("certify_digits: negative digit count");
  if (scale_guard < 0) throw std::invalid_argument("certify_digits: negative guard");
  Rational t = x.truncation(k).to_rational();
  Rational step(BigInt(1), pow10(k));
  for (int extra : {0, 8, 20, 40}) {
    RationalInterval e = oracle.refine(k + scale_guard + extra);
    if (t <= e.lo && e.hi <= t + step) return {CertifyStatus::Certified, -1};
    if (e.hi < t || t + step < e.lo) {
      // The oracle excludes x's digit cell outright; locate the first
      // position where the expansions part ways.
      for (int j = 0; j <= k; ++j) {
        Rational tj = x.truncation(j).to_rational();
        Rational stepj(BigInt(1), pow10(j));
        RationalInterval ej = oracle.refine(j + scale_guard + extra);
        if (ej.hi < tj || tj + stepj < ej.lo) return {CertifyStatus::Mismatch, j};
      }
      return {CertifyStatus::Mismatch, k};
    }
  }
  return {CertifyStatus::Inconclusive, -1};
}

namespace {

// Library truncations against digit-at-a-time long division; catches any
// drift between the two digit extraction styles.
template <class Trunc>
bool digits_agree(const Rational& q, Trunc trunc, int depth) {
  BigInt a0 = rational_floor(q);
  Rational rest = q - a0;
  BigInt expect = a0;
  for (int j = 0; j <= depth; ++j) {
    if (j > 0) {
      rest *= 10;
      BigInt d = rational_floor(rest);
      rest -= d;
      expect = expect * 10 + d;
    }
    ScaledDecimal t = trunc(j);
    if (t.scale() != j || t.mantissa() != expect) return false;
  }
  return true;
}

}  // namespace

SmallCheckReport exhaustive_small_check(int max_scale, int max_int) {
  if (max_scale < 0 || max_scale > 3)
    throw std::invalid_argument("exhaustive_small_check: max_scale must be in 0..3");
  if (max_int < 0 || max_int > 2)
    throw std::invalid_argument("exhaustive_small_check: max_int must be in 0..2");

  SmallCheckReport rep;
  auto note = [&rep](const std::string& what) {
    if (rep.counterexamples++ == 0) rep.first_counterexample = what;
  };

  const int depth = max_scale + 2;
  const BigInt grid = pow10(max_scale);
  std::vector<ScaledDecimal> vals;
  std::vector<Rational> qs;
  std::vector<DecimalReal> reals;
  for (BigInt m = -BigInt(max_int) * grid; m < BigInt(max_int + 1) * grid; ++m) {
    vals.emplace_back(m, max_scale);
    qs.emplace_back(m, grid);
    reals.push_back(DecimalReal::from_scaled(vals.back()));
  }

  const ScaledDecimal zero(BigInt(0), 0);
  const ScaledDecimal one(BigInt(1), 0);

  // Anchor instance with an integer part outside the enumerated range.
  {
    ScaledDecimal a = ScaledDecimal::parse("(-8).765");
    ScaledDecimal b = ScaledDecimal::parse("5.678");
    if (add_exact(a, b).str() != "(-2).443") note("worked example (-8).765 + 5.678");
    ++rep.pairs_checked;
  }

  for (std::size_t i = 0; i < vals.size(); ++i) {
    const ScaledDecimal& x = vals[i];
    const Rational& qx = qs[i];

    if (!value_eq(add_exact(x, zero), x)) note("additive identity at x=" + x.str());
    if (!value_eq(mul_exact(x, one), x)) note("multiplicative identity at x=" + x.str());
    if (!add_exact(x, negate_exact(x)).is_zero()) note("additive inverse at x=" + x.str());
    if (!x.is_zero()) {
      Rational inv = *reciprocal(reals[i]).exact_value();
      if (qx * inv != 1) note("multiplicative inverse at x=" + x.str());
    }

    for (std::size_t j = 0; j < vals.size(); ++j) {
      const ScaledDecimal& y = vals[j];
      const Rational& qy = qs[j];
      ++rep.pairs_checked;

      ScaledDecimal sum = add_exact(x, y);
      if (!digits_agree(qx + qy, [&](int s) { return truncate(sum, s); }, depth))
        note("addition digits at x=" + x.str() + " y=" + y.str());
      if (!value_eq(sum, add_exact(y, x))) note("addition commutativity at x=" + x.str() + " y=" + y.str());

      ScaledDecimal diff = sub_exact(x, y);
      if (!digits_agree(qx - qy, [&](int s) { return truncate(diff, s); }, depth))
        note("subtraction digits at x=" + x.str() + " y=" + y.str());

      ScaledDecimal prod = mul_exact(x, y);
      if (!digits_agree(qx * qy, [&](int s) { return truncate(prod, s); }, depth))
        note("multiplication digits at x=" + x.str() + " y=" + y.str());
      if (!value_eq(prod, mul_exact(y, x)))
        note("multiplication commutativity at x=" + x.str() + " y=" + y.str());

      if (y.is_zero()) {
        try {
          div(reals[i], reals[j]);
          note("division by zero accepted at x=" + x.str());
        } catch (const std::domain_error&) {
        }
      } else {
        DecimalReal quot = div(reals[i], reals[j]);
        if (!digits_agree(qx / qy, [&](int s) { return quot.truncation(s); }, depth))
          note("division digits at x=" + x.str() + " y=" + y.str());
      }
    }
  }

  // Three-variable laws on the scale-1 subgrid.
  const int tscale = std::min(max_scale, 1);
  const BigInt tgrid = pow10(tscale);
  std::vector<ScaledDecimal> tvals;
  for (BigInt m = -BigInt(max_int) * tgrid; m < BigInt(max_int + 1) * tgrid; ++m)
    tvals.emplace_back(m, tscale);

  for (const ScaledDecimal& x : tvals)
    for (const ScaledDecimal& y : tvals)
      for (const ScaledDecimal& z : tvals) {
        ++rep.triples_checked;
        if (!value_eq(add_exact(add_exact(x, y), z), add_exact(x, add_exact(y, z))))
          note("addition associativity at x=" + x.str() + " y=" + y.str() + " z=" + z.str());
        if (!value_eq(mul_exact(mul_exact(x, y), z), mul_exact(x, mul_exact(y, z))))
          note("multiplication associativity at x=" + x.str() + " y=" + y.str() + " z=" + z.str());
        if (!value_eq(mul_exact(x, add_exact(y, z)),
                      add_exact(mul_exact(x, y), mul_exact(x, z))))
          note("distributive law at x=" + x.str() + " y=" + y.str() + " z=" + z.str());
      }

  return rep;
}

}  // namespace drcalc
