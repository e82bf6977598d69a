#include "drcalc/expr.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace drcalc {

ExprPtr make_number(ScaledDecimal value) {
  return std::make_shared<Expr>(Expr{NumberNode{std::move(value)}});
}
ExprPtr make_const(std::string name) {
  return std::make_shared<Expr>(Expr{ConstNode{std::move(name)}});
}
ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
  return std::make_shared<Expr>(Expr{UnaryNode{op, std::move(operand)}});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<Expr>(Expr{BinaryNode{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_call(CallKind kind, std::vector<ExprPtr> args) {
  return std::make_shared<Expr>(Expr{CallNode{kind, std::move(args)}});
}
ExprPtr make_paren(ExprPtr inner) {
  return std::make_shared<Expr>(Expr{ParenNode{std::move(inner)}});
}

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::ostringstream out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  return out.str();
}

std::string error_text(std::size_t offset, const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << "syntax error at offset " << offset << ": expected " << join_expected(expected);
  return out.str();
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != in_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(pos_, std::move(expected));
  }

  void skip_space() {
    while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* shown) {
    if (!eat(c)) fail({shown});
  }

  char peek() {
    skip_space();
    return pos_ < in_.size() ? in_[pos_] : '\0';
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (eat('+')) {
        lhs = make_binary(BinaryOp::Add, std::move(lhs), term());
      } else if (eat('-')) {
        lhs = make_binary(BinaryOp::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (eat('*')) {
        lhs = make_binary(BinaryOp::Mul, std::move(lhs), factor());
      } else if (eat('/')) {
        lhs = make_binary(BinaryOp::Div, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    if (peek() == '-') {
      ++pos_;
      return make_unary(UnaryOp::Neg, factor());
    }
    return primary();
  }

  ExprPtr primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      if (at_integer_part_literal()) return number();
      ++pos_;
      ExprPtr inner = expr();
      expect(')', "')'");
      return make_paren(std::move(inner));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail({"a number", "a constant", "a function", "'('", "'-'"});
  }

  // Matches the compact integer-part literal "(-2).443" (also "(2).443")
  // starting at the current position, so '(' can still open a grouped
  // expression everywhere else.
  bool at_integer_part_literal() {
    skip_space();
    std::size_t p = pos_;
    if (p >= in_.size() || in_[p] != '(') return false;
    ++p;
    if (p < in_.size() && in_[p] == '-') ++p;
    std::size_t digits = 0;
    while (p < in_.size() && std::isdigit(static_cast<unsigned char>(in_[p]))) ++p, ++digits;
    if (digits == 0 || p + 1 >= in_.size() || in_[p] != ')' || in_[p + 1] != '.') return false;
    return p + 2 < in_.size() && std::isdigit(static_cast<unsigned char>(in_[p + 2]));
  }

  ExprPtr number() {
    skip_space();
    std::size_t start = pos_;
    if (in_[pos_] == '(') {
      pos_ = in_.find(')', pos_) + 1;  // shape validated by at_integer_part_literal
      ++pos_;                          // '.'
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    } else {
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
      if (pos_ < in_.size() && in_[pos_] == '.') {
        ++pos_;
        std::size_t frac = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        if (pos_ == frac) fail({"a digit after '.'"});
      }
    }
    return make_number(ScaledDecimal::parse(std::string(in_.substr(start, pos_ - start))));
  }

  ExprPtr identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < in_.size() && (std::isalnum(static_cast<unsigned char>(in_[pos_])))) ++pos_;
    std::string name(in_.substr(start, pos_ - start));
    if (name == "pi" || name == "e" || name == "sqrt2") return make_const(std::move(name));
    if (name == "recip" || name == "sqrt") {
      UnaryOp op = name == "recip" ? UnaryOp::Recip : UnaryOp::Sqrt;
      expect('(', "'('");
      ExprPtr arg = expr();
      expect(')', "')'");
      return make_unary(op, std::move(arg));
    }
    if (name == "glb" || name == "pair") {
      CallKind kind = name == "glb" ? CallKind::Glb : CallKind::Pair;
      expect('(', "'('");
      std::vector<ExprPtr> args;
      args.push_back(expr());
      while (eat(',')) args.push_back(expr());
      if (kind == CallKind::Pair && args.size() != 2) {
        pos_ = start;
        fail({"exactly two arguments to pair"});
      }
      expect(')', "')'");
      return make_call(kind, std::move(args));
    }
    pos_ = start;
    fail({"'pi'", "'e'", "'sqrt2'", "'recip'", "'sqrt'", "'glb'", "'pair'"});
  }
};

int precedence(const Expr& e) {
  if (std::holds_alternative<BinaryNode>(e.node)) {
    BinaryOp op = std::get<BinaryNode>(e.node).op;
    return op == BinaryOp::Add || op == BinaryOp::Sub ? 1 : 2;
  }
  return 3;  // atoms and unary bind tighter than any binary operator
}

std::string render_child(const ExprPtr& child, int min_prec) {
  std::string s = render(*child);
  return precedence(*child) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error(error_text(offset, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

ExprPtr parse_expr(std::string_view input) { return Parser(input).run(); }

std::string render(const Expr& e) {
  struct Visitor {
    std::string operator()(const NumberNode& n) const { return n.value.str(); }
    std::string operator()(const ConstNode& c) const { return c.name; }
    std::string operator()(const UnaryNode& u) const {
      switch (u.op) {
        case UnaryOp::Neg:
          return "-" + render_child(u.operand, 3);
        case UnaryOp::Recip:
          return "recip(" + render(*u.operand) + ")";
        case UnaryOp::Sqrt:
        default:
          return "sqrt(" + render(*u.operand) + ")";
      }
    }
    std::string operator()(const BinaryNode& b) const {
      const char* op;
      int prec = b.op == BinaryOp::Add || b.op == BinaryOp::Sub ? 1 : 2;
      switch (b.op) {
        case BinaryOp::Add: op = " + "; break;
        case BinaryOp::Sub: op = " - "; break;
        case BinaryOp::Mul: op = " * "; break;
        default: op = " / "; break;
      }
      // A right operand at the same precedence level would reassociate when
      // reparsed, so it gets explicit parentheses.
      return render_child(b.lhs, prec) + op + render_child(b.rhs, prec + 1);
    }
    std::string operator()(const CallNode& c) const {
      std::string out = c.kind == CallKind::Glb ? "glb(" : "pair(";
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += render(*c.args[i]);
      }
      return out + ")";
    }
    std::string operator()(const ParenNode& p) const { return "(" + render(*p.inner) + ")"; }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace drcalc
