#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "symtoep/matrix_window.hpp"

namespace symtoep {

/// Power iteration on A^* A from a seeded random start.
///
/// Returns the largest of the Rayleigh quotients ||A x_k|| / ||x_k|| seen in
/// `iterations` steps. Each one is at most ||A||, so the result is a lower
/// bound on the spectral norm; it is nondecreasing in `iterations` and
/// reproducible for a fixed seed. Works for any dense or sparse Eigen matrix
/// with complex<double> scalars.
template <typename MatrixType>
double power_norm(const MatrixType& a, int iterations, std::uint64_t seed) {
  using Vec = Eigen::VectorXcd;
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vec x(a.cols());
  for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = {gauss(rng), gauss(rng)};
  x.normalize();
  double best = 0.0;
  for (int it = 0; it < std::max(iterations, 1); ++it) {
    Vec y = a * x;
    double ny = y.norm();
    best = std::max(best, ny);
    if (ny == 0.0) break;
    Vec z = a.adjoint() * y;
    double nz = z.norm();
    if (nz == 0.0) break;
    x = z / nz;
  }
  return best;
}

/// Spectral-norm lower bound of an exact window matrix.
double norm_estimate(const MatrixWindow& m, int iterations, std::uint64_t seed);

}  // namespace symtoep
