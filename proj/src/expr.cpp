#include "kolmo/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace kolmo {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

// Recursive descent on the fixed grammar
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' unary)?          (right associative)
//   primary:= number | var | fn '(' args ')' | '(' expr ')'
// '^' binds tighter than unary minus: -x^2 parses as -(x^2).
class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Expr run() {
    Expr e;
    e.root_ = parse_expr(e);
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& src_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected ") + what, pos_);
  }

  int add(Expr& e, Expr::Node n) {
    e.nodes_.push_back(n);
    return static_cast<int>(e.nodes_.size()) - 1;
  }

  int parse_expr(Expr& e) {
    int lhs = parse_term(e);
    for (;;) {
      if (accept('+')) {
        int rhs = parse_term(e);
        lhs = add(e, {Expr::Op::Add, 0.0, -1, lhs, rhs});
      } else if (accept('-')) {
        int rhs = parse_term(e);
        lhs = add(e, {Expr::Op::Sub, 0.0, -1, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_term(Expr& e) {
    int lhs = parse_unary(e);
    for (;;) {
      if (accept('*')) {
        int rhs = parse_unary(e);
        lhs = add(e, {Expr::Op::Mul, 0.0, -1, lhs, rhs});
      } else if (accept('/')) {
        int rhs = parse_unary(e);
        lhs = add(e, {Expr::Op::Div, 0.0, -1, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_unary(Expr& e) {
    if (accept('-')) {
      int operand = parse_unary(e);
      return add(e, {Expr::Op::Neg, 0.0, -1, operand, -1});
    }
    return parse_power(e);
  }

  int parse_power(Expr& e) {
    int base = parse_primary(e);
    if (accept('^')) {
      int exp = parse_unary(e);
      return add(e, {Expr::Op::Pow, 0.0, -1, base, exp});
    }
    return base;
  }

  int parse_primary(Expr& e) {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(e);
    if (is_ident_start(c)) return parse_ident(e);
    if (c == '(') {
      ++pos_;
      int inner = parse_expr(e);
      expect(')', "')'");
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_number(Expr& e) {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += static_cast<size_t>(end - begin);
    return add(e, {Expr::Op::Number, v, -1, -1, -1});
  }

  int parse_ident(Expr& e) {
    size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    std::string name = src_.substr(start, pos_ - start);

    if (name == "x1") return add(e, {Expr::Op::Var, 0.0, 0, -1, -1});
    if (name == "x2") return add(e, {Expr::Op::Var, 0.0, 1, -1, -1});
    if (name == "x3") return add(e, {Expr::Op::Var, 0.0, 2, -1, -1});
    if (name == "y") return add(e, {Expr::Op::Var, 0.0, 3, -1, -1});

    Expr::Op op;
    int arity;
    if (name == "sin") {
      op = Expr::Op::Sin;
      arity = 1;
    } else if (name == "cos") {
      op = Expr::Op::Cos;
      arity = 1;
    } else if (name == "exp") {
      op = Expr::Op::Exp;
      arity = 1;
    } else if (name == "log") {
      op = Expr::Op::Log;
      arity = 1;
    } else if (name == "sqrt") {
      op = Expr::Op::Sqrt;
      arity = 1;
    } else if (name == "abs") {
      op = Expr::Op::Abs;
      arity = 1;
    } else if (name == "tanh") {
      op = Expr::Op::Tanh;
      arity = 1;
    } else if (name == "min") {
      op = Expr::Op::Min;
      arity = 2;
    } else if (name == "max") {
      op = Expr::Op::Max;
      arity = 2;
    } else {
      throw ParseError("unknown identifier '" + name + "'", start);
    }

    expect('(', "'(' after function name");
    int a = parse_expr(e);
    int b = -1;
    if (arity == 2) {
      if (!accept(',')) throw ParseError("function '" + name + "' takes 2 arguments", pos_);
      b = parse_expr(e);
    } else if (peek() == ',') {
      throw ParseError("function '" + name + "' takes 1 argument", pos_);
    }
    expect(')', "')'");
    return add(e, {op, 0.0, -1, a, b});
  }
};

Expr Expr::parse(const std::string& source) {
  if (source.empty()) throw ParseError("empty expression", 0);
  return Parser(source).run();
}

Expr Expr::constant(double v) {
  Expr e;
  e.nodes_.push_back({Op::Number, v, -1, -1, -1});
  e.root_ = 0;
  return e;
}

double Expr::eval(const Point& p) const {
  if (root_ < 0) throw EvalError("empty expression");
  return eval_node(root_, p);
}

double Expr::eval_node(int idx, const Point& p) const {
  const Node& n = nodes_[static_cast<size_t>(idx)];
  switch (n.op) {
    case Op::Number:
      return n.num;
    case Op::Var: {
      if (n.var == 3) {
        if (!p.has_y) throw EvalError("variable y not supplied");
        return p.y;
      }
      if (n.var >= static_cast<int>(p.x.size()))
        throw EvalError("variable x" + std::to_string(n.var + 1) + " not supplied");
      return p.x[static_cast<size_t>(n.var)];
    }
    case Op::Neg:
      return -eval_node(n.a, p);
    case Op::Add:
      return eval_node(n.a, p) + eval_node(n.b, p);
    case Op::Sub:
      return eval_node(n.a, p) - eval_node(n.b, p);
    case Op::Mul:
      return eval_node(n.a, p) * eval_node(n.b, p);
    case Op::Div: {
      double num = eval_node(n.a, p);
      double den = eval_node(n.b, p);
      if (den == 0.0) throw EvalError("division by zero");
      return num / den;
    }
    case Op::Pow:
      return std::pow(eval_node(n.a, p), eval_node(n.b, p));
    case Op::Sin:
      return std::sin(eval_node(n.a, p));
    case Op::Cos:
      return std::cos(eval_node(n.a, p));
    case Op::Exp:
      return std::exp(eval_node(n.a, p));
    case Op::Log: {
      double v = eval_node(n.a, p);
      if (v <= 0.0) throw EvalError("log of nonpositive argument");
      return std::log(v);
    }
    case Op::Sqrt: {
      double v = eval_node(n.a, p);
      if (v < 0.0) throw EvalError("sqrt of negative argument");
      return std::sqrt(v);
    }
    case Op::Abs:
      return std::fabs(eval_node(n.a, p));
    case Op::Tanh:
      return std::tanh(eval_node(n.a, p));
    case Op::Min: {
      double a = eval_node(n.a, p);
      double b = eval_node(n.b, p);
      return a < b ? a : b;
    }
    case Op::Max: {
      double a = eval_node(n.a, p);
      double b = eval_node(n.b, p);
      return a > b ? a : b;
    }
  }
  throw EvalError("corrupt expression node");
}

namespace {
const char* fn_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::Sin: return "sin";
    case Expr::Op::Cos: return "cos";
    case Expr::Op::Exp: return "exp";
    case Expr::Op::Log: return "log";
    case Expr::Op::Sqrt: return "sqrt";
    case Expr::Op::Abs: return "abs";
    case Expr::Op::Tanh: return "tanh";
    case Expr::Op::Min: return "min";
    case Expr::Op::Max: return "max";
    default: return "?";
  }
}
}  // namespace

void Expr::unparse_node(int idx, std::string& out) const {
  const Node& n = nodes_[static_cast<size_t>(idx)];
  switch (n.op) {
    case Op::Number: {
      char buf[40];
      snprintf(buf, sizeof(buf), "%.17g", n.num);
      out += buf;
      return;
    }
    case Op::Var:
      out += (n.var == 3) ? "y" : ("x" + std::to_string(n.var + 1));
      return;
    case Op::Neg:
      out += "(-";
      unparse_node(n.a, out);
      out += ')';
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow: {
      char sym = n.op == Op::Add   ? '+'
                 : n.op == Op::Sub ? '-'
                 : n.op == Op::Mul ? '*'
                 : n.op == Op::Div ? '/'
                                   : '^';
      out += '(';
      unparse_node(n.a, out);
      out += sym;
      unparse_node(n.b, out);
      out += ')';
      return;
    }
    default:
      out += fn_name(n.op);
      out += '(';
      unparse_node(n.a, out);
      if (n.b >= 0) {
        out += ',';
        unparse_node(n.b, out);
      }
      out += ')';
      return;
  }
}

std::string Expr::unparse() const {
  std::string out;
  if (root_ >= 0) unparse_node(root_, out);
  return out;
}

namespace {
bool node_equal(const Expr& x, int ix, const Expr& y, int iy) {
  if ((ix < 0) != (iy < 0)) return false;
  if (ix < 0) return true;
  const Expr::Node& a = x.nodes()[static_cast<size_t>(ix)];
  const Expr::Node& b = y.nodes()[static_cast<size_t>(iy)];
  if (a.op != b.op || a.var != b.var) return false;
  if (a.op == Expr::Op::Number && a.num != b.num) return false;
  return node_equal(x, a.a, y, b.a) && node_equal(x, a.b, y, b.b);
}
}  // namespace

bool Expr::operator==(const Expr& other) const {
  return node_equal(*this, root_, other, other.root_);
}

int Expr::max_var_slot() const {
  int m = -1;
  for (const Node& n : nodes_)
    if (n.op == Op::Var && n.var < 3 && n.var > m) m = n.var;
  return m;
}

bool Expr::references_y() const {
  for (const Node& n : nodes_)
    if (n.op == Op::Var && n.var == 3) return true;
  return false;
}

}  // namespace kolmo
