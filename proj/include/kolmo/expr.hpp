#ifndef KOLMO_EXPR_HPP
#define KOLMO_EXPR_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kolmo {

// Arithmetic expressions over the variables x1, x2, x3 and the lifted
// coordinate y. Parsed trees are immutable and evaluation is reentrant.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

class Expr {
 public:
  enum class Op : uint8_t {
    Number,
    Var,    // slot 0..2 = x1..x3, slot 3 = y
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Abs,
    Tanh,
    Min,
    Max,
  };

  struct Node {
    Op op;
    double num = 0.0;
    int var = -1;
    int a = -1;  // child indices into nodes()
    int b = -1;
  };

  Expr() = default;

  // Evaluation context: x supplies x1..x_dim; y only when has_y.
  struct Point {
    std::span<const double> x;
    double y = 0.0;
    bool has_y = false;
  };

  double eval(const Point& p) const;
  double eval(std::span<const double> x) const { return eval(Point{x, 0.0, false}); }
  double eval(std::span<const double> x, double y) const { return eval(Point{x, y, true}); }

  std::string unparse() const;

  bool operator==(const Expr& other) const;

  // Highest variable slot referenced (0-based), or -1 for constants.
  int max_var_slot() const;
  bool references_y() const;

  bool empty() const { return nodes_.empty(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }

  static Expr parse(const std::string& source);
  static Expr constant(double v);

 private:
  friend class Parser;
  std::vector<Node> nodes_;
  int root_ = -1;

  double eval_node(int idx, const Point& p) const;
  void unparse_node(int idx, std::string& out) const;
};

}  // namespace kolmo

#endif
