#include "drcalc/eval.hpp"

#include <variant>
#include <vector>

#include "drcalc/computable.hpp"
#include "drcalc/constructions.hpp"

namespace drcalc {

DecimalReal evaluate(const Expr& e, const Fuel& fuel) {
  struct Visitor {
    const Fuel& fuel;

    DecimalReal operator()(const NumberNode& n) const {
      return DecimalReal::from_scaled(n.value);
    }
    DecimalReal operator()(const ConstNode& c) const {
      for (const ConstantSpec& spec : known_constants())
        if (spec.name == c.name) return spec.make();
      throw std::domain_error("unknown constant: " + c.name);
    }
    DecimalReal operator()(const UnaryNode& u) const {
      switch (u.op) {
        case UnaryOp::Neg:
          return negate(evaluate(*u.operand, fuel), fuel);
        case UnaryOp::Recip:
          return reciprocal(evaluate(*u.operand, fuel), fuel);
        case UnaryOp::Sqrt:
        default: {
          DecimalReal v = evaluate(*u.operand, fuel);
          auto q = v.exact_value();
          if (!q)
            throw std::domain_error(
                "sqrt applies to exactly known rational values; this operand streams");
          return sqrt_rational(*q);
        }
      }
    }
    DecimalReal operator()(const BinaryNode& b) const {
      DecimalReal lhs = evaluate(*b.lhs, fuel);
      DecimalReal rhs = evaluate(*b.rhs, fuel);
      switch (b.op) {
        case BinaryOp::Add:
          return add(lhs, rhs, fuel);
        case BinaryOp::Sub:
          return sub(lhs, rhs, fuel);
        case BinaryOp::Mul:
          return mul(lhs, rhs, fuel);
        case BinaryOp::Div:
        default:
          return div(lhs, rhs, fuel);
      }
    }
    DecimalReal operator()(const CallNode& c) const {
      std::vector<DecimalReal> args;
      args.reserve(c.args.size());
      for (const ExprPtr& a : c.args) args.push_back(evaluate(*a, fuel));
      if (c.kind == CallKind::Glb) return glb_finite(std::move(args));
      return cantor_pair(args[0], args[1]);
    }
    DecimalReal operator()(const ParenNode& p) const { return evaluate(*p.inner, fuel); }
  };
  return std::visit(Visitor{fuel}, e.node);
}

Rendered render_digits(const DecimalReal& x, int k) {
  if (k < 0) throw std::invalid_argument("render_digits: negative digit count");
  Rendered out;
  int determined = -1;
  for (int j = 0; j <= k; ++j) {
    DigitOutcome o = x.digit_outcome(j);
    if (!o.determined) {
      out.horizon = o.horizon;
      break;
    }
    determined = j;
  }
  if (determined == k) {
    out.text = x.truncation(k).str();
    out.digits_emitted = k;
    out.status = x.backing() == Backing::Terminating ? EvalStatus::ExactTerminating
                                                     : EvalStatus::Streamed;
    return out;
  }
  out.status = EvalStatus::Undetermined;
  out.digits_emitted = determined;
  std::string prefix = determined >= 0 ? x.truncation(determined).str() : "";
  out.text = prefix + "…at horizon " + std::to_string(out.horizon);
  return out;
}

std::string status_text(const Rendered& r) {
  switch (r.status) {
    case EvalStatus::ExactTerminating:
      return "exact-terminating";
    case EvalStatus::Streamed:
      return "streamed";
    case EvalStatus::Undetermined:
    default:
      return "undetermined(" + std::to_string(r.horizon) + ")";
  }
}

}  // namespace drcalc
