#ifndef DRCALC_EVAL_HPP
#define DRCALC_EVAL_HPP

#include <string>

#include "drcalc/arithmetic.hpp"
#include "drcalc/expr.hpp"

namespace drcalc {

// Evaluates the AST with the streaming arithmetic. Scanning operations
// (reciprocal, division, comparisons buried in them) honor the fuel bound.
// Throws std::domain_error when an operand leaves an operation's domain and
// UndeterminedError when a digit demanded during construction exhausts.
DecimalReal evaluate(const Expr& e, const Fuel& fuel = {});

enum class EvalStatus { ExactTerminating, Streamed, Undetermined };

struct Rendered {
  std::string text;         // digit string, cut at the first exhausted position
  EvalStatus status = EvalStatus::Streamed;
  int digits_emitted = -1;  // fractional digits printed; -1 when even a0 is unknown
  long horizon = 0;         // exhaustion horizon when status == Undetermined
};

// First k fractional digits of x in the integer-part form, never printing a
// digit that was not determined: "3.1415926535", "(-2).443", or a prefix
// with an explicit "...at horizon h" trailer.
Rendered render_digits(const DecimalReal& x, int k);

// "exact-terminating", "streamed" or "undetermined(h)".
std::string status_text(const Rendered& r);

}  // namespace drcalc

#endif
