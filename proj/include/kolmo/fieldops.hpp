#ifndef KOLMO_FIELDOPS_HPP
#define KOLMO_FIELDOPS_HPP

#include <string>

#include "kolmo/fields.hpp"

namespace kolmo {

struct MollifyInfo {
  double kernel_radius = 0.0;
  int64_t min_stencil_nodes_per_axis = 0;
  bool resolution_warning = false;  // spacing coarser than radius/4
};

// Discrete convolution with the normalized C^2 bump (1-|x|^2)^3 scaled to
// radius 1/k. Kernel weights are renormalized over the part of the stencil
// inside the box, so constants are preserved exactly everywhere.
GridArray mollify(const GridArray& f, int k, MollifyInfo* info = nullptr);
ScalarField mollify(const ScalarField& f, const Grid& g, int k, MollifyInfo* info = nullptr);
VectorField mollify(const VectorField& f, const Grid& g, int k, MollifyInfo* info = nullptr);
MatrixField mollify(const MatrixField& f, const Grid& g, int k, MollifyInfo* info = nullptr);

// psi*A + (1-psi)*I with the C^2 radial cutoff psi (1 inside psi_inner,
// 0 outside psi_outer, both measured from the ball center).
MatrixField extend_diffusion(const MatrixField& A, const Ball& ball, double psi_inner,
                             double psi_outer);

// b on B(x0, 4R), zero outside.
VectorField extend_drift_zero(const VectorField& b, const Ball& ball);

struct EllipticityBounds {
  double m_low = 0.0;   // min over nodes of the smallest eigenvalue
  double m_high = 0.0;  // max over nodes of the largest eigenvalue
};
EllipticityBounds ellipticity_bounds(const MatrixField& A, const Grid& g);

}  // namespace kolmo

#endif
