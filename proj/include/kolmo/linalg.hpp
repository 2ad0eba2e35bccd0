#ifndef KOLMO_LINALG_HPP
#define KOLMO_LINALG_HPP

#include <array>
#include <utility>

namespace kolmo {

// Dense d x d matrices with d <= 4, stored row-major in a fixed buffer.
// Small enough that closed forms / Jacobi sweeps beat any library call.
struct SmallMat {
  int d = 0;
  std::array<double, 16> a{};

  double& operator()(int i, int j) { return a[static_cast<size_t>(i * d + j)]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i * d + j)]; }

  static SmallMat identity(int d);
  static SmallMat zero(int d);

  SmallMat transpose() const;
  SmallMat mul(const SmallMat& other) const;
  std::array<double, 4> mul_vec(const std::array<double, 4>& v) const;
  double det() const;          // d <= 3 closed form, d = 4 by expansion
  SmallMat inverse() const;    // d <= 3
  bool is_symmetric(double tol) const;
};

// Eigenvalues of a symmetric matrix, ascending. Closed form for d <= 2,
// cyclic Jacobi for d >= 3.
std::array<double, 4> sym_eigenvalues(const SmallMat& m);

// Spectral norm (largest singular value) of a general small matrix,
// computed from the eigenvalues of M^T M.
double spectral_norm(const SmallMat& m);

// Lower Cholesky factor of an SPD matrix; throws std::runtime_error naming
// the offending pivot if the matrix is not positive definite.
SmallMat cholesky(const SmallMat& m);

// Least squares line fit y ~ a + b x; returns {a, b, stderr_of_b}.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double slope_stderr = 0.0;
};
LineFit fit_line(const double* x, const double* y, int n);

}  // namespace kolmo

#endif
