#include "kolmo/grid.hpp"

#include <algorithm>
#include <cmath>

#include "kolmo/parallel.hpp"

namespace kolmo {

Grid::Grid(int dim, const std::vector<double>& lo, const std::vector<double>& hi,
           const std::vector<int64_t>& n, int64_t node_cap) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("grid dim must be 1..4");
  if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim ||
      static_cast<int>(n.size()) != dim)
    throw std::invalid_argument("grid bounds/counts must have dim entries");
  dim_ = dim;
  total_ = 1;
  for (int a = 0; a < dim; ++a) {
    if (!(hi[static_cast<size_t>(a)] > lo[static_cast<size_t>(a)]))
      throw std::invalid_argument("grid box degenerate on axis " + std::to_string(a + 1));
    if (n[static_cast<size_t>(a)] < 3)
      throw std::invalid_argument("grid needs at least 3 nodes per axis");
    lo_[static_cast<size_t>(a)] = lo[static_cast<size_t>(a)];
    hi_[static_cast<size_t>(a)] = hi[static_cast<size_t>(a)];
    n_[static_cast<size_t>(a)] = n[static_cast<size_t>(a)];
    h_[static_cast<size_t>(a)] =
        (hi[static_cast<size_t>(a)] - lo[static_cast<size_t>(a)]) / static_cast<double>(n[static_cast<size_t>(a)] - 1);
    total_ *= n[static_cast<size_t>(a)];
  }
  if (total_ > node_cap)
    throw std::invalid_argument("grid node count " + std::to_string(total_) +
                                " exceeds cap " + std::to_string(node_cap));
}

double Grid::max_spacing() const {
  double m = 0.0;
  for (int a = 0; a < dim_; ++a) m = std::max(m, h_[static_cast<size_t>(a)]);
  return m;
}

double Grid::min_extent() const {
  double m = hi_[0] - lo_[0];
  for (int a = 1; a < dim_; ++a) m = std::min(m, hi_[static_cast<size_t>(a)] - lo_[static_cast<size_t>(a)]);
  return m;
}

int64_t Grid::nearest_node(const Point& p) const {
  MultiIndex mi{};
  for (int a = 0; a < dim_; ++a) {
    double t = (p[static_cast<size_t>(a)] - lo_[static_cast<size_t>(a)]) / h_[static_cast<size_t>(a)];
    int64_t i = static_cast<int64_t>(std::llround(t));
    i = std::clamp<int64_t>(i, 0, n_[static_cast<size_t>(a)] - 1);
    mi[static_cast<size_t>(a)] = i;
  }
  return index(mi);
}

bool Grid::same_layout(const Grid& other) const {
  if (dim_ != other.dim_) return false;
  for (int a = 0; a < dim_; ++a) {
    if (n_[static_cast<size_t>(a)] != other.n_[static_cast<size_t>(a)]) return false;
    if (lo_[static_cast<size_t>(a)] != other.lo_[static_cast<size_t>(a)]) return false;
    if (hi_[static_cast<size_t>(a)] != other.hi_[static_cast<size_t>(a)]) return false;
  }
  return true;
}

bool GridArray::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

double GridArray::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

double dist(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) {
    double d = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
    s += d * d;
  }
  return std::sqrt(s);
}

double integrate(const GridArray& f) {
  const Grid& g = f.grid;
  return par::block_sum(g.num_nodes(),
                        [&](int64_t i) { return f[i] * g.quad_weight(i); });
}

double integrate_ball(const GridArray& f, const Point& center, double radius) {
  const Grid& g = f.grid;
  return par::block_sum(g.num_nodes(), [&](int64_t i) {
    Point p = g.node(i);
    if (dist(p, center, g.dim()) > radius) return 0.0;
    return f[i] * g.quad_weight(i);
  });
}

}  // namespace kolmo
