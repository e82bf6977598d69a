#ifndef DRCALC_EXPR_HPP
#define DRCALC_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drcalc/scaled_decimal.hpp"

namespace drcalc {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Neg, Recip, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div };
enum class CallKind { Glb, Pair };

struct NumberNode {
  ScaledDecimal value;
};
struct ConstNode {
  std::string name;  // pi, e, sqrt2
};
struct UnaryNode {
  UnaryOp op;
  ExprPtr operand;
};
struct BinaryNode {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct CallNode {
  CallKind kind;
  std::vector<ExprPtr> args;  // glb: one or more; pair: exactly two
};
struct ParenNode {
  ExprPtr inner;
};

struct Expr {
  std::variant<NumberNode, ConstNode, UnaryNode, BinaryNode, CallNode, ParenNode> node;
};

ExprPtr make_number(ScaledDecimal value);
ExprPtr make_const(std::string name);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(CallKind kind, std::vector<ExprPtr> args);
ExprPtr make_paren(ExprPtr inner);

// Syntax error with the byte offset of the offending token and the set of
// tokens that would have been acceptable there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Recursive-descent parse of the expression language:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | primary
//   primary:= number | const | recip/sqrt '(' expr ')'
//           | glb '(' args ')' | pair '(' expr ',' expr ')' | '(' expr ')'
// Literals cover plain decimals ("2.443", "7") and the integer-part form
// "(-2).443"; a leading '-' otherwise binds as unary negation, which denotes
// the same value.
ExprPtr parse_expr(std::string_view input);

// Canonical text form; parsing it reproduces the same rendering.
std::string render(const Expr& e);
inline std::string render(const ExprPtr& e) { return render(*e); }

}  // namespace drcalc

#endif
