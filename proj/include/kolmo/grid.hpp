#ifndef KOLMO_GRID_HPP
#define KOLMO_GRID_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kolmo {

inline constexpr int kMaxDim = 4;  // 3 spatial axes + one lifted axis

using Point = std::array<double, kMaxDim>;
using MultiIndex = std::array<int64_t, kMaxDim>;

// Uniform Cartesian box discretization. Node i along axis a sits at
// lo[a] + i*h[a], i = 0..n[a]-1.
class Grid {
 public:
  Grid() = default;
  Grid(int dim, const std::vector<double>& lo, const std::vector<double>& hi,
       const std::vector<int64_t>& n, int64_t node_cap = 2'000'000);

  int dim() const { return dim_; }
  double lo(int axis) const { return lo_[static_cast<size_t>(axis)]; }
  double hi(int axis) const { return hi_[static_cast<size_t>(axis)]; }
  int64_t n(int axis) const { return n_[static_cast<size_t>(axis)]; }
  double h(int axis) const { return h_[static_cast<size_t>(axis)]; }
  int64_t num_nodes() const { return total_; }
  double max_spacing() const;
  double min_extent() const;

  // Row-major linearization, first axis slowest.
  int64_t index(const MultiIndex& mi) const {
    int64_t idx = 0;
    for (int a = 0; a < dim_; ++a) idx = idx * n_[static_cast<size_t>(a)] + mi[static_cast<size_t>(a)];
    return idx;
  }
  MultiIndex unindex(int64_t idx) const {
    MultiIndex mi{};
    for (int a = dim_ - 1; a >= 0; --a) {
      mi[static_cast<size_t>(a)] = idx % n_[static_cast<size_t>(a)];
      idx /= n_[static_cast<size_t>(a)];
    }
    return mi;
  }

  Point node(const MultiIndex& mi) const {
    Point p{};
    for (int a = 0; a < dim_; ++a)
      p[static_cast<size_t>(a)] = lo_[static_cast<size_t>(a)] + static_cast<double>(mi[static_cast<size_t>(a)]) * h_[static_cast<size_t>(a)];
    return p;
  }
  Point node(int64_t idx) const { return node(unindex(idx)); }

  bool contains(const Point& p, double tol = 0.0) const {
    for (int a = 0; a < dim_; ++a) {
      if (p[static_cast<size_t>(a)] < lo_[static_cast<size_t>(a)] - tol) return false;
      if (p[static_cast<size_t>(a)] > hi_[static_cast<size_t>(a)] + tol) return false;
    }
    return true;
  }

  bool is_boundary(const MultiIndex& mi) const {
    for (int a = 0; a < dim_; ++a) {
      if (mi[static_cast<size_t>(a)] == 0 || mi[static_cast<size_t>(a)] == n_[static_cast<size_t>(a)] - 1) return true;
    }
    return false;
  }

  // Trapezoid quadrature weight of a node (product of h or h/2 per axis).
  double quad_weight(const MultiIndex& mi) const {
    double w = 1.0;
    for (int a = 0; a < dim_; ++a) {
      double ha = h_[static_cast<size_t>(a)];
      w *= (mi[static_cast<size_t>(a)] == 0 || mi[static_cast<size_t>(a)] == n_[static_cast<size_t>(a)] - 1) ? 0.5 * ha : ha;
    }
    return w;
  }
  double quad_weight(int64_t idx) const { return quad_weight(unindex(idx)); }

  // Index of the node nearest to p (coordinates clamped into the box).
  int64_t nearest_node(const Point& p) const;

  bool same_layout(const Grid& other) const;

 private:
  int dim_ = 0;
  std::array<double, kMaxDim> lo_{}, hi_{}, h_{};
  std::array<int64_t, kMaxDim> n_{};
  int64_t total_ = 0;
};

// One real value per grid node, row-major.
struct GridArray {
  Grid grid;
  std::vector<double> values;

  GridArray() = default;
  explicit GridArray(const Grid& g, double fill = 0.0)
      : grid(g), values(static_cast<size_t>(g.num_nodes()), fill) {}

  double& operator[](int64_t i) { return values[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return values[static_cast<size_t>(i)]; }
  int64_t size() const { return static_cast<int64_t>(values.size()); }

  bool all_finite() const;
  double max_abs() const;
};

// Ball B(x0, R). Coefficient extensions act on B(x0, 4R) per the standing
// construction, see support_radius().
struct Ball {
  Point center{};
  double radius = 0.0;

  double support_radius() const { return 4.0 * radius; }
  double dist(const Point& p, int dim) const {
    double s = 0.0;
    for (int a = 0; a < dim; ++a) {
      double d = p[static_cast<size_t>(a)] - center[static_cast<size_t>(a)];
      s += d * d;
    }
    return std::sqrt(s);
  }
};

double dist(const Point& a, const Point& b, int dim);

// Trapezoid integral of node values over the whole box.
double integrate(const GridArray& f);

// Trapezoid integral restricted to nodes inside a ball of given radius.
double integrate_ball(const GridArray& f, const Point& center, double radius);

}  // namespace kolmo

#endif
