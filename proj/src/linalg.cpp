#include "kolmo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kolmo {

SmallMat SmallMat::identity(int d) {
  SmallMat m;
  m.d = d;
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

SmallMat SmallMat::zero(int d) {
  SmallMat m;
  m.d = d;
  return m;
}

SmallMat SmallMat::transpose() const {
  SmallMat t = zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SmallMat SmallMat::mul(const SmallMat& other) const {
  SmallMat r = zero(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      double v = (*this)(i, k);
      for (int j = 0; j < d; ++j) r(i, j) += v * other(k, j);
    }
  return r;
}

std::array<double, 4> SmallMat::mul_vec(const std::array<double, 4>& v) const {
  std::array<double, 4> r{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
  return r;
}

double SmallMat::det() const {
  const SmallMat& m = *this;
  switch (d) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    case 4: {
      double det = 0.0;
      for (int c = 0; c < 4; ++c) {
        SmallMat sub = SmallMat::zero(3);
        for (int i = 1; i < 4; ++i) {
          int jj = 0;
          for (int j = 0; j < 4; ++j) {
            if (j == c) continue;
            sub(i - 1, jj++) = m(i, j);
          }
        }
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * sub.det();
      }
      return det;
    }
    default:
      throw std::runtime_error("det: unsupported dimension");
  }
}

SmallMat SmallMat::inverse() const {
  const SmallMat& m = *this;
  double dt = det();
  if (dt == 0.0) throw std::runtime_error("singular matrix in inverse()");
  SmallMat r = zero(d);
  switch (d) {
    case 1:
      r(0, 0) = 1.0 / dt;
      return r;
    case 2:
      r(0, 0) = m(1, 1) / dt;
      r(0, 1) = -m(0, 1) / dt;
      r(1, 0) = -m(1, 0) / dt;
      r(1, 1) = m(0, 0) / dt;
      return r;
    case 3: {
      r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / dt;
      r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / dt;
      r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / dt;
      r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / dt;
      r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / dt;
      r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / dt;
      r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / dt;
      r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / dt;
      r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / dt;
      return r;
    }
    default:
      throw std::runtime_error("inverse: unsupported dimension");
  }
}

bool SmallMat::is_symmetric(double tol) const {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

std::array<double, 4> sym_eigenvalues(const SmallMat& m) {
  std::array<double, 4> ev{};
  if (m.d == 1) {
    ev[0] = m(0, 0);
    return ev;
  }
  if (m.d == 2) {
    double tr = m(0, 0) + m(1, 1);
    double diff = m(0, 0) - m(1, 1);
    double disc = std::sqrt(diff * diff / 4.0 + m(0, 1) * m(1, 0));
    ev[0] = tr / 2.0 - disc;
    ev[1] = tr / 2.0 + disc;
    return ev;
  }
  // Cyclic Jacobi for d = 3, 4.
  SmallMat a = m;
  const int d = a.d;
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < d; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  for (int i = 0; i < d; ++i) ev[static_cast<size_t>(i)] = a(i, i);
  std::sort(ev.begin(), ev.begin() + d);
  return ev;
}

double spectral_norm(const SmallMat& m) {
  SmallMat mtm = m.transpose().mul(m);
  auto ev = sym_eigenvalues(mtm);
  double top = ev[static_cast<size_t>(m.d - 1)];
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

SmallMat cholesky(const SmallMat& m) {
  SmallMat l = SmallMat::zero(m.d);
  for (int i = 0; i < m.d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0)
          throw std::runtime_error("cholesky: matrix not positive definite at pivot " +
                                   std::to_string(i));
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

LineFit fit_line(const double* x, const double* y, int n) {
  LineFit f;
  if (n < 2) throw std::invalid_argument("fit_line needs at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  if (n > 2) {
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = y[i] - f.intercept - f.slope * x[i];
      ss += r * r;
    }
    f.slope_stderr = std::sqrt(ss / (n - 2) * n / denom);
  }
  return f;
}

}  // namespace kolmo
