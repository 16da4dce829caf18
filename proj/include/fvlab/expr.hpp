#pragma once

// Expression front end.
//
// Grammar, loosest to tightest binding:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'x' | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// So -x^2 is -(x^2), 2^-1 is 2^(-1) and 2^3^2 is 2^(3^2).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fvlab/real_function.hpp"

namespace fvlab {

enum class ExprKind { Var, Num, Add, Sub, Mul, Div, Pow, Neg, Call };

enum class Func { Abs, Sign, Sin, Cos, Tan, Cot, Exp, Log, Sqrt, Pow, PowAbs };

struct ExprNode {
  ExprKind kind;
  double value = 0.0;  // Num only
  Func func = Func::Abs;  // Call only
  std::vector<std::shared_ptr<const ExprNode>> args;
};

/// Immutable syntax tree; copies share nodes.
class Expr {
 public:
  explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

  const ExprNode& root() const { return *root_; }

  static Expr var();
  static Expr num(double v);
  static Expr unary(ExprKind kind, Expr a);  // Neg
  static Expr binary(ExprKind kind, Expr a, Expr b);
  static Expr call(Func f, std::vector<Expr> args);

 private:
  std::shared_ptr<const ExprNode> root_;
};

/// Throws SyntaxError or UnknownIdentifier.
Expr parse(std::string_view text);

/// Extended-real evaluation: NaN stands for undefined.
double eval(const Expr& e, double x);

/// Fully parenthesised form that parses back to the same tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

std::string_view func_name(Func f);

/// Wraps an expression as a function.  Poles of tan and cot with an affine
/// argument are declared in the domain.
RealFunction to_function(const Expr& e, std::string description = {});

/// parse + to_function, keeping the source text as the description.
RealFunction parse_function(std::string_view text);

}  // namespace fvlab
