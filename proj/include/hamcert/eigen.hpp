#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hamcert/errors.hpp"

namespace hamcert {

// Dense row-major square matrix of doubles.
class DenseMatrix {
 public:
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}
  DenseMatrix(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(n) * n)
      throw InputError("matrix data size does not match order");
  }

  int order() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> data_;
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Largest eigenvalue of a real symmetric matrix by cyclic Jacobi rotations.
// Works on a private copy. Converged when every off-diagonal magnitude is
// below 1e-12, or after 100 sweeps.
inline double symmetric_eigen_max(DenseMatrix a) {
  const int n = a.order();
  if (n < 1) throw InputError("matrix order must be at least 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > kSymmetryTolerance)
        throw InputError("matrix is not symmetric");

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < kJacobiOffDiagonalTolerance) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen to annihilate a(p,q); t is the smaller root.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = akp - s * (akq + tau * akp);
          a(k, q) = a(q, k) = akq + s * (akp - tau * akq);
        }
      }
    }
  }

  double best = a(0, 0);
  for (int i = 1; i < n; ++i) best = std::max(best, a(i, i));
  return best;
}

}  // namespace hamcert
