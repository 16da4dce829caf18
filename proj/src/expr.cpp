#include "fvlab/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

#include "fvlab/errors.hpp"

namespace fvlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct FuncInfo {
  std::string_view name;
  Func func;
  int arity;
};

constexpr FuncInfo kFuncs[] = {
    {"abs", Func::Abs, 1},   {"sign", Func::Sign, 1}, {"sin", Func::Sin, 1},
    {"cos", Func::Cos, 1},   {"tan", Func::Tan, 1},   {"cot", Func::Cot, 1},
    {"exp", Func::Exp, 1},   {"log", Func::Log, 1},   {"sqrt", Func::Sqrt, 1},
    {"pow", Func::Pow, 2},   {"powabs", Func::PowAbs, 2},
};

const FuncInfo* lookup(std::string_view name) {
  for (const auto& f : kFuncs) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const FuncInfo& info(Func f) {
  for (const auto& i : kFuncs) {
    if (i.func == f) return i;
  }
  return kFuncs[0];
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                s_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(ExprKind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(ExprKind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(ExprKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = Expr::binary(ExprKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::unary(ExprKind::Neg, unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return Expr::binary(ExprKind::Pow, base, unary());
    return base;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "operand");
    char c = s_[pos_];
    if (is_digit(c) || c == '.') return number();
    if (is_ident_start(c)) return identifier();
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    throw SyntaxError(pos_, "operand");
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    }
    if (pos_ - start == 1 && s_[start] == '.') throw SyntaxError(start, "digit");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p >= s_.size() || !is_digit(s_[p])) throw SyntaxError(p, "exponent digits");
      while (p < s_.size() && is_digit(s_[p])) ++p;
      pos_ = p;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec == std::errc::result_out_of_range || !std::isfinite(v)) {
      throw SyntaxError(start, "finite number literal");
    }
    if (ec != std::errc() || ptr != s_.data() + pos_) throw SyntaxError(start, "number");
    return Expr::num(v);
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (name == "x") return Expr::var();
    const FuncInfo* f = lookup(name);
    if (f == nullptr) throw UnknownIdentifier(std::string(name), start);
    expect('(');
    std::vector<Expr> args;
    args.push_back(expr());
    for (int i = 1; i < f->arity; ++i) {
      expect(',');
      args.push_back(expr());
    }
    expect(')');
    return Expr::call(f->func, std::move(args));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double sign_zero_positive(double v) {
  if (std::isnan(v)) return kNaN;
  return v >= 0 ? 1.0 : -1.0;
}

double eval_node(const ExprNode& n, double x) {
  switch (n.kind) {
    case ExprKind::Var:
      return x;
    case ExprKind::Num:
      return n.value;
    case ExprKind::Add:
      return eval_node(*n.args[0], x) + eval_node(*n.args[1], x);
    case ExprKind::Sub:
      return eval_node(*n.args[0], x) - eval_node(*n.args[1], x);
    case ExprKind::Mul:
      return eval_node(*n.args[0], x) * eval_node(*n.args[1], x);
    case ExprKind::Div:
      return eval_node(*n.args[0], x) / eval_node(*n.args[1], x);
    case ExprKind::Pow:
      return std::pow(eval_node(*n.args[0], x), eval_node(*n.args[1], x));
    case ExprKind::Neg:
      return -eval_node(*n.args[0], x);
    case ExprKind::Call:
      break;
  }
  double u = eval_node(*n.args[0], x);
  switch (n.func) {
    case Func::Abs: return std::fabs(u);
    case Func::Sign: return sign_zero_positive(u);
    case Func::Sin: return std::sin(u);
    case Func::Cos: return std::cos(u);
    case Func::Tan: return std::tan(u);
    case Func::Cot: return std::cos(u) / std::sin(u);
    case Func::Exp: return std::exp(u);
    case Func::Log: return u > 0 ? std::log(u) : kNaN;
    case Func::Sqrt: return std::sqrt(u);
    case Func::Pow: return std::pow(u, eval_node(*n.args[1], x));
    case Func::PowAbs: return std::pow(std::fabs(u), eval_node(*n.args[1], x));
  }
  return kNaN;
}

void print(const ExprNode& n, std::string& out) {
  auto bin = [&](const char* op) {
    out += '(';
    print(*n.args[0], out);
    out += op;
    print(*n.args[1], out);
    out += ')';
  };
  switch (n.kind) {
    case ExprKind::Var:
      out += 'x';
      return;
    case ExprKind::Num: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case ExprKind::Add: bin(" + "); return;
    case ExprKind::Sub: bin(" - "); return;
    case ExprKind::Mul: bin(" * "); return;
    case ExprKind::Div: bin(" / "); return;
    case ExprKind::Pow: bin(" ^ "); return;
    case ExprKind::Neg:
      out += "(-";
      print(*n.args[0], out);
      out += ')';
      return;
    case ExprKind::Call:
      out += func_name(n.func);
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ", ";
        print(*n.args[i], out);
      }
      out += ')';
      return;
  }
}

bool equal_nodes(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == ExprKind::Num && !(a.value == b.value && std::signbit(a.value) == std::signbit(b.value))) {
    return false;
  }
  if (a.kind == ExprKind::Call && a.func != b.func) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!equal_nodes(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

// x -> a*x + b when the subtree is affine in x with constant coefficients.
std::optional<std::pair<double, double>> affine(const ExprNode& n) {
  using P = std::pair<double, double>;
  switch (n.kind) {
    case ExprKind::Var: return P{1.0, 0.0};
    case ExprKind::Num: return P{0.0, n.value};
    case ExprKind::Neg: {
      auto a = affine(*n.args[0]);
      if (!a) return std::nullopt;
      return P{-a->first, -a->second};
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      auto l = affine(*n.args[0]);
      auto r = affine(*n.args[1]);
      if (!l || !r) return std::nullopt;
      double s = n.kind == ExprKind::Add ? 1.0 : -1.0;
      return P{l->first + s * r->first, l->second + s * r->second};
    }
    case ExprKind::Mul: {
      auto l = affine(*n.args[0]);
      auto r = affine(*n.args[1]);
      if (!l || !r) return std::nullopt;
      if (l->first == 0.0) return P{l->second * r->first, l->second * r->second};
      if (r->first == 0.0) return P{r->second * l->first, r->second * l->second};
      return std::nullopt;
    }
    case ExprKind::Div: {
      auto l = affine(*n.args[0]);
      auto r = affine(*n.args[1]);
      if (!l || !r || r->first != 0.0 || r->second == 0.0) return std::nullopt;
      return P{l->first / r->second, l->second / r->second};
    }
    default:
      return std::nullopt;
  }
}

void collect_lattices(const ExprNode& n, std::vector<PoleLattice>& out) {
  if (n.kind == ExprKind::Call && (n.func == Func::Tan || n.func == Func::Cot)) {
    auto a = affine(*n.args[0]);
    if (a && a->first != 0.0 && std::isfinite(a->first) && std::isfinite(a->second)) {
      // tan poles where a*x + b = pi/2 + k*pi, cot poles where a*x + b = k*pi.
      double target = n.func == Func::Tan ? std::numbers::pi / 2 : 0.0;
      out.push_back({(target - a->second) / a->first, std::numbers::pi / std::fabs(a->first)});
    }
  }
  for (const auto& c : n.args) collect_lattices(*c, out);
}

}  // namespace

Expr Expr::var() {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ExprKind::Var, 0.0, Func::Abs, {}}));
}

Expr Expr::num(double v) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ExprKind::Num, v, Func::Abs, {}}));
}

Expr Expr::unary(ExprKind kind, Expr a) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{kind, 0.0, Func::Abs, {a.root_}}));
}

Expr Expr::binary(ExprKind kind, Expr a, Expr b) {
  return Expr(
      std::make_shared<const ExprNode>(ExprNode{kind, 0.0, Func::Abs, {a.root_, b.root_}}));
}

Expr Expr::call(Func f, std::vector<Expr> args) {
  ExprNode n{ExprKind::Call, 0.0, f, {}};
  for (auto& a : args) n.args.push_back(a.root_);
  return Expr(std::make_shared<const ExprNode>(std::move(n)));
}

Expr parse(std::string_view text) { return Parser(text).run(); }

double eval(const Expr& e, double x) { return eval_node(e.root(), x); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) { return equal_nodes(a.root(), b.root()); }

std::string_view func_name(Func f) { return info(f).name; }

RealFunction to_function(const Expr& e, std::string description) {
  std::vector<PoleLattice> lattices;
  collect_lattices(e.root(), lattices);
  Domain d = Domain::all_reals();
  for (const auto& l : lattices) d = d.with_lattice(l);
  if (description.empty()) description = to_string(e);
  return RealFunction([e](double x) { return eval(e, x); }, std::move(d), std::move(description));
}

RealFunction parse_function(std::string_view text) {
  return to_function(parse(text), std::string(text));
}

}  // namespace fvlab
