#ifndef KOLMO_FIELDS_HPP
#define KOLMO_FIELDS_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kolmo/expr.hpp"
#include "kolmo/grid.hpp"
#include "kolmo/linalg.hpp"

namespace kolmo {

class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};

// Multilinear interpolation of node values at p. With clamp, coordinates are
// projected onto the box first (flat extension); otherwise points outside the
// box throw.
double interpolate(const GridArray& data, const Point& p, bool clamp = false);

// Scalar coefficient field. Three backends:
//   - expression: an Expr over x1..x3 (and y for lifted fields),
//   - sampled: node values on a grid, evaluated by multilinear interpolation,
//   - callable: an arbitrary function of the point (used for composed and
//     extended fields).
// Fields are immutable after construction and reentrant.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(Expr e, int dim, bool lifted = false);
  ScalarField(GridArray data, bool clamp = false);
  ScalarField(std::function<double(const Point&)> fn, int dim);

  static ScalarField constant(double v, int dim);

  double eval(const Point& p) const;
  int dim() const { return dim_; }

  bool is_sampled() const { return backend_ == Backend::Sampled; }
  const GridArray& data() const;

 private:
  enum class Backend { Empty, Expression, Sampled, Callable };
  Backend backend_ = Backend::Empty;
  Expr expr_;
  bool lifted_ = false;
  std::shared_ptr<const GridArray> data_;
  bool clamp_ = false;
  std::function<double(const Point&)> fn_;
  int dim_ = 0;
};

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<ScalarField> comps);

  static VectorField zero(int dim);

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
  std::array<double, 4> eval(const Point& p) const;
  double eval_comp(int i, const Point& p) const { return comps_[static_cast<size_t>(i)].eval(p); }
  double norm(const Point& p) const;

 private:
  std::vector<ScalarField> comps_;
};

// Symmetric d x d field, upper triangle stored (row-major over i <= j).
class MatrixField {
 public:
  MatrixField() = default;
  MatrixField(int dim, std::vector<ScalarField> upper);

  static MatrixField identity(int dim);
  static MatrixField isotropic(ScalarField s, int dim);

  int dim() const { return dim_; }
  int num_upper() const { return dim_ * (dim_ + 1) / 2; }
  static int upper_index(int d, int i, int j);

  const ScalarField& comp(int i, int j) const;
  double eval_entry(int i, int j, const Point& p) const { return comp(i, j).eval(p); }
  SmallMat eval(const Point& p) const;

 private:
  int dim_ = 0;
  std::vector<ScalarField> upper_;
};

// Node-exact sampling (parallel over nodes; order independent).
GridArray sample(const ScalarField& f, const Grid& g);
std::vector<GridArray> sample(const VectorField& f, const Grid& g);
std::vector<GridArray> sample(const MatrixField& f, const Grid& g);

// Rebuild fields over sampled data.
ScalarField sampled_scalar(const ScalarField& f, const Grid& g, bool clamp = false);
VectorField sampled_vector(const VectorField& f, const Grid& g, bool clamp = false);
MatrixField sampled_matrix(const MatrixField& f, const Grid& g, bool clamp = false);

// d arrays of one-sided/centered second order finite differences of node data.
std::vector<GridArray> gradient_arrays(const GridArray& u);

}  // namespace kolmo

#endif
