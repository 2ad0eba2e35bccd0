#include "kolmo/fields.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "kolmo/parallel.hpp"

namespace kolmo {

double interpolate(const GridArray& data, const Point& p, bool clamp) {
  const Grid& g = data.grid;
  const int d = g.dim();
  MultiIndex base{};
  std::array<double, kMaxDim> frac{};
  for (int a = 0; a < d; ++a) {
    double t = (p[static_cast<size_t>(a)] - g.lo(a)) / g.h(a);
    if (clamp) {
      t = std::clamp(t, 0.0, static_cast<double>(g.n(a) - 1));
    } else if (t < -1e-12 || t > static_cast<double>(g.n(a) - 1) + 1e-12) {
      throw FieldError("interpolation point outside grid box on axis " +
                       std::to_string(a + 1));
    }
    t = std::clamp(t, 0.0, static_cast<double>(g.n(a) - 1));
    int64_t i = static_cast<int64_t>(t);
    i = std::min<int64_t>(i, g.n(a) - 2);
    base[static_cast<size_t>(a)] = i;
    frac[static_cast<size_t>(a)] = t - static_cast<double>(i);
  }
  double acc = 0.0;
  const int corners = 1 << d;
  for (int c = 0; c < corners; ++c) {
    MultiIndex mi = base;
    double w = 1.0;
    for (int a = 0; a < d; ++a) {
      if (c & (1 << a)) {
        mi[static_cast<size_t>(a)] += 1;
        w *= frac[static_cast<size_t>(a)];
      } else {
        w *= 1.0 - frac[static_cast<size_t>(a)];
      }
    }
    acc += w * data[g.index(mi)];
  }
  return acc;
}

ScalarField::ScalarField(Expr e, int dim, bool lifted)
    : backend_(Backend::Expression), expr_(std::move(e)), lifted_(lifted), dim_(dim) {
  int spatial = lifted ? dim - 1 : dim;
  if (spatial < 0 || spatial > 3) throw FieldError("expression field supports up to 3 spatial axes");
  if (expr_.max_var_slot() >= spatial)
    throw FieldError("expression references x" + std::to_string(expr_.max_var_slot() + 1) +
                     " beyond field dimension " + std::to_string(spatial));
  if (expr_.references_y() && !lifted)
    throw FieldError("expression references y but field is not lifted");
}

ScalarField::ScalarField(GridArray data, bool clamp)
    : backend_(Backend::Sampled),
      data_(std::make_shared<GridArray>(std::move(data))),
      clamp_(clamp),
      dim_(data_->grid.dim()) {}

ScalarField::ScalarField(std::function<double(const Point&)> fn, int dim)
    : backend_(Backend::Callable), fn_(std::move(fn)), dim_(dim) {}

ScalarField ScalarField::constant(double v, int dim) {
  return ScalarField(Expr::constant(v), dim);
}

double ScalarField::eval(const Point& p) const {
  switch (backend_) {
    case Backend::Expression: {
      if (lifted_) {
        int spatial = dim_ - 1;
        return expr_.eval(std::span<const double>(p.data(), static_cast<size_t>(spatial)),
                          p[static_cast<size_t>(spatial)]);
      }
      return expr_.eval(std::span<const double>(p.data(), static_cast<size_t>(dim_)));
    }
    case Backend::Sampled:
      return interpolate(*data_, p, clamp_);
    case Backend::Callable:
      return fn_(p);
    case Backend::Empty:
      break;
  }
  throw FieldError("evaluating empty field");
}

const GridArray& ScalarField::data() const {
  if (backend_ != Backend::Sampled) throw FieldError("field has no sampled data");
  return *data_;
}

VectorField::VectorField(std::vector<ScalarField> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw FieldError("vector field needs at least one component");
}

VectorField VectorField::zero(int dim) {
  std::vector<ScalarField> c;
  for (int i = 0; i < dim; ++i) c.push_back(ScalarField::constant(0.0, dim));
  return VectorField(std::move(c));
}

std::array<double, 4> VectorField::eval(const Point& p) const {
  std::array<double, 4> v{};
  for (int i = 0; i < dim(); ++i) v[static_cast<size_t>(i)] = comps_[static_cast<size_t>(i)].eval(p);
  return v;
}

double VectorField::norm(const Point& p) const {
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) {
    double v = comps_[static_cast<size_t>(i)].eval(p);
    s += v * v;
  }
  return std::sqrt(s);
}

MatrixField::MatrixField(int dim, std::vector<ScalarField> upper)
    : dim_(dim), upper_(std::move(upper)) {
  if (static_cast<int>(upper_.size()) != num_upper())
    throw FieldError("matrix field needs d(d+1)/2 upper-triangle components");
}

int MatrixField::upper_index(int d, int i, int j) {
  if (i > j) std::swap(i, j);
  // row-major over the upper triangle
  return i * d - i * (i - 1) / 2 + (j - i);
}

const ScalarField& MatrixField::comp(int i, int j) const {
  return upper_[static_cast<size_t>(upper_index(dim_, i, j))];
}

MatrixField MatrixField::identity(int dim) {
  std::vector<ScalarField> upper;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      upper.push_back(ScalarField::constant(i == j ? 1.0 : 0.0, dim));
  return MatrixField(dim, std::move(upper));
}

MatrixField MatrixField::isotropic(ScalarField s, int dim) {
  std::vector<ScalarField> upper;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      upper.push_back(i == j ? s : ScalarField::constant(0.0, dim));
  return MatrixField(dim, std::move(upper));
}

SmallMat MatrixField::eval(const Point& p) const {
  SmallMat m = SmallMat::zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      double v = comp(i, j).eval(p);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

GridArray sample(const ScalarField& f, const Grid& g) {
  GridArray out(g);
  std::atomic<int64_t> bad{-1};
  par::parallel_for(g.num_nodes(), [&](int64_t i) {
    try {
      out[i] = f.eval(g.node(i));
    } catch (const std::exception&) {
      int64_t expect = -1;
      bad.compare_exchange_strong(expect, i);
      out[i] = std::numeric_limits<double>::quiet_NaN();
    }
  });
  if (bad.load() >= 0) {
    int64_t i = bad.load();
    try {
      f.eval(g.node(i));
    } catch (const std::exception& e) {
      throw FieldError("field evaluation failed at node " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GridArray> sample(const VectorField& f, const Grid& g) {
  std::vector<GridArray> out;
  for (int i = 0; i < f.dim(); ++i) out.push_back(sample(f.comp(i), g));
  return out;
}

std::vector<GridArray> sample(const MatrixField& f, const Grid& g) {
  std::vector<GridArray> out;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i; j < f.dim(); ++j) out.push_back(sample(f.comp(i, j), g));
  return out;
}

ScalarField sampled_scalar(const ScalarField& f, const Grid& g, bool clamp) {
  return ScalarField(sample(f, g), clamp);
}

VectorField sampled_vector(const VectorField& f, const Grid& g, bool clamp) {
  std::vector<ScalarField> comps;
  for (int i = 0; i < f.dim(); ++i) comps.emplace_back(sample(f.comp(i), g), clamp);
  return VectorField(std::move(comps));
}

MatrixField sampled_matrix(const MatrixField& f, const Grid& g, bool clamp) {
  std::vector<ScalarField> upper;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i; j < f.dim(); ++j) upper.emplace_back(sample(f.comp(i, j), g), clamp);
  return MatrixField(f.dim(), std::move(upper));
}

std::vector<GridArray> gradient_arrays(const GridArray& u) {
  const Grid& g = u.grid;
  const int d = g.dim();
  std::vector<GridArray> grad(static_cast<size_t>(d), GridArray(g));
  for (int a = 0; a < d; ++a) {
    const double h = g.h(a);
    GridArray& out = grad[static_cast<size_t>(a)];
    par::parallel_for(g.num_nodes(), [&](int64_t idx) {
      MultiIndex mi = g.unindex(idx);
      int64_t i = mi[static_cast<size_t>(a)];
      MultiIndex mp = mi, mm = mi;
      if (i == 0) {
        // one-sided second order: (-3 f0 + 4 f1 - f2) / 2h
        mp[static_cast<size_t>(a)] = 1;
        mm[static_cast<size_t>(a)] = 2;
        out[idx] = (-3.0 * u[idx] + 4.0 * u[g.index(mp)] - u[g.index(mm)]) / (2.0 * h);
      } else if (i == g.n(a) - 1) {
        mp[static_cast<size_t>(a)] = i - 1;
        mm[static_cast<size_t>(a)] = i - 2;
        out[idx] = (3.0 * u[idx] - 4.0 * u[g.index(mp)] + u[g.index(mm)]) / (2.0 * h);
      } else {
        mp[static_cast<size_t>(a)] = i + 1;
        mm[static_cast<size_t>(a)] = i - 1;
        out[idx] = (u[g.index(mp)] - u[g.index(mm)]) / (2.0 * h);
      }
    });
  }
  return grad;
}

}  // namespace kolmo
