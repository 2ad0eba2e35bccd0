#include "kolmo/fieldops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kolmo/parallel.hpp"

namespace kolmo {

namespace {

// C^2 quintic step: 0 at 0, 1 at 1, first and second derivatives vanish at
// both ends.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

struct Stencil {
  std::vector<int64_t> offsets;  // per-axis offset tuples, flattened
  std::vector<double> weights;   // unnormalized kernel weights
  std::array<int64_t, kMaxDim> reach{};
  int dim = 0;
};

Stencil build_kernel_stencil(const Grid& g, int k) {
  Stencil st;
  st.dim = g.dim();
  const double radius = 1.0 / static_cast<double>(k);
  std::array<int64_t, kMaxDim> reach{};
  for (int a = 0; a < g.dim(); ++a) {
    reach[static_cast<size_t>(a)] = static_cast<int64_t>(std::floor(radius / g.h(a)));
    if (reach[static_cast<size_t>(a)] < 1)
      throw FieldError("mollifier radius 1/" + std::to_string(k) +
                       " covers fewer than 3 nodes on axis " + std::to_string(a + 1));
  }
  st.reach = reach;
  std::array<int64_t, kMaxDim> span{};
  int64_t count = 1;
  for (int a = 0; a < g.dim(); ++a) {
    span[static_cast<size_t>(a)] = 2 * reach[static_cast<size_t>(a)] + 1;
    count *= span[static_cast<size_t>(a)];
  }
  st.offsets.resize(static_cast<size_t>(count) * static_cast<size_t>(g.dim()));
  st.weights.resize(static_cast<size_t>(count));
  for (int64_t c = 0; c < count; ++c) {
    int64_t rem = c;
    double r2 = 0.0;
    for (int a = g.dim() - 1; a >= 0; --a) {
      int64_t off = rem % span[static_cast<size_t>(a)] - reach[static_cast<size_t>(a)];
      rem /= span[static_cast<size_t>(a)];
      st.offsets[static_cast<size_t>(c * g.dim() + a)] = off;
      double dx = static_cast<double>(off) * g.h(a) / radius;
      r2 += dx * dx;
    }
    double w = 0.0;
    if (r2 < 1.0) {
      double t = 1.0 - r2;
      w = t * t * t;
    }
    st.weights[static_cast<size_t>(c)] = w;
  }
  return st;
}

}  // namespace

GridArray mollify(const GridArray& f, int k, MollifyInfo* info) {
  if (k < 1) throw FieldError("mollifier index k must be >= 1");
  const Grid& g = f.grid;
  Stencil st = build_kernel_stencil(g, k);
  const double radius = 1.0 / static_cast<double>(k);

  if (info) {
    info->kernel_radius = radius;
    info->min_stencil_nodes_per_axis = 2 * *std::min_element(st.reach.begin(), st.reach.begin() + g.dim()) + 1;
    info->resolution_warning = g.max_spacing() > radius / 4.0;
  }

  GridArray out(g);
  const int64_t count = static_cast<int64_t>(st.weights.size());
  par::parallel_for(g.num_nodes(), [&](int64_t idx) {
    MultiIndex mi = g.unindex(idx);
    double acc = 0.0;
    double wsum = 0.0;
    for (int64_t c = 0; c < count; ++c) {
      double w = st.weights[static_cast<size_t>(c)];
      if (w == 0.0) continue;
      MultiIndex mj = mi;
      bool inside = true;
      for (int a = 0; a < g.dim(); ++a) {
        int64_t j = mi[static_cast<size_t>(a)] + st.offsets[static_cast<size_t>(c * g.dim() + a)];
        if (j < 0 || j >= g.n(a)) {
          inside = false;
          break;
        }
        mj[static_cast<size_t>(a)] = j;
      }
      if (!inside) continue;
      acc += w * f[g.index(mj)];
      wsum += w;
    }
    out[idx] = acc / wsum;
  });
  return out;
}

ScalarField mollify(const ScalarField& f, const Grid& g, int k, MollifyInfo* info) {
  GridArray data = f.is_sampled() && f.data().grid.same_layout(g) ? f.data() : sample(f, g);
  return ScalarField(mollify(data, k, info));
}

VectorField mollify(const VectorField& f, const Grid& g, int k, MollifyInfo* info) {
  std::vector<ScalarField> comps;
  for (int i = 0; i < f.dim(); ++i) comps.push_back(mollify(f.comp(i), g, k, info));
  return VectorField(std::move(comps));
}

MatrixField mollify(const MatrixField& f, const Grid& g, int k, MollifyInfo* info) {
  std::vector<ScalarField> upper;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i; j < f.dim(); ++j) upper.push_back(mollify(f.comp(i, j), g, k, info));
  return MatrixField(f.dim(), std::move(upper));
}

MatrixField extend_diffusion(const MatrixField& A, const Ball& ball, double psi_inner,
                             double psi_outer) {
  if (psi_inner < ball.support_radius())
    throw FieldError("extend_diffusion: psi_inner must be >= 4R of the ball");
  if (!(psi_outer > psi_inner))
    throw FieldError("extend_diffusion: psi_outer must exceed psi_inner");
  const int d = A.dim();
  std::vector<ScalarField> upper;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const ScalarField& aij = A.comp(i, j);
      const double eye = (i == j) ? 1.0 : 0.0;
      auto fn = [aij, eye, ball, psi_inner, psi_outer, d](const Point& p) {
        double r = ball.dist(p, d);
        double psi = 1.0 - smooth_step((r - psi_inner) / (psi_outer - psi_inner));
        if (psi == 0.0) return eye;
        return psi * aij.eval(p) + (1.0 - psi) * eye;
      };
      upper.emplace_back(fn, d);
    }
  return MatrixField(d, std::move(upper));
}

VectorField extend_drift_zero(const VectorField& b, const Ball& ball) {
  const int d = b.dim();
  const double cut = ball.support_radius();
  std::vector<ScalarField> comps;
  for (int i = 0; i < d; ++i) {
    const ScalarField& bi = b.comp(i);
    auto fn = [bi, ball, cut, d](const Point& p) {
      return ball.dist(p, d) <= cut ? bi.eval(p) : 0.0;
    };
    comps.emplace_back(fn, d);
  }
  return VectorField(std::move(comps));
}

EllipticityBounds ellipticity_bounds(const MatrixField& A, const Grid& g) {
  auto arrays = sample(A, g);
  for (const GridArray& ga : arrays)
    if (!ga.all_finite()) throw FieldError("ellipticity_bounds: non-finite matrix entries");
  const int d = A.dim();
  auto entry = [&](int64_t node, int i, int j) {
    return arrays[static_cast<size_t>(MatrixField::upper_index(d, i, j))][node];
  };
  double high = par::block_max(
      g.num_nodes(),
      [&](int64_t node) {
        SmallMat m = SmallMat::zero(d);
        for (int i = 0; i < d; ++i)
          for (int j = i; j < d; ++j) m(i, j) = m(j, i) = entry(node, i, j);
        return sym_eigenvalues(m)[static_cast<size_t>(d - 1)];
      },
      -std::numeric_limits<double>::infinity());
  double neg_low = par::block_max(
      g.num_nodes(),
      [&](int64_t node) {
        SmallMat m = SmallMat::zero(d);
        for (int i = 0; i < d; ++i)
          for (int j = i; j < d; ++j) m(i, j) = m(j, i) = entry(node, i, j);
        return -sym_eigenvalues(m)[0];
      },
      -std::numeric_limits<double>::infinity());
  return EllipticityBounds{-neg_low, high};
}

}  // namespace kolmo
