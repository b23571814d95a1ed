// Seeded random instances for the gamma tests and acceptance run.
#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "symtoep/gamma.hpp"

namespace gamma_support {

using Eigen::MatrixXcd;

inline MatrixXcd random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = {g(rng), g(rng)};
  Eigen::HouseholderQR<MatrixXcd> qr(a);
  return qr.householderQ() * MatrixXcd::Identity(n, n);
}

// d commuting unitaries Q diag(e^{i theta}) Q^*.
inline std::vector<MatrixXcd> commuting_unitaries(std::mt19937_64& rng, int d, Eigen::Index n) {
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  MatrixXcd q = random_unitary(rng, n);
  std::vector<MatrixXcd> out;
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXcd diag(n);
    for (Eigen::Index s = 0; s < n; ++s) diag[s] = std::polar(1.0, ang(rng));
    out.push_back(q * diag.asDiagonal() * q.adjoint());
  }
  return out;
}

inline MatrixXcd random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = {g(rng), g(rng)};
  return a;
}

// Dimension of the S-Toeplitz solution space without the Kronecker form:
// apply the constraint map to every matrix unit E_ab and take the rank of
// the resulting columns.
inline long brute_force_dimension(const symtoep::GammaTuple& t, double tol) {
  const Eigen::Index n = t.n();
  const int d = t.d;
  MatrixXcd cols(d * n * n, n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      MatrixXcd e = MatrixXcd::Zero(n, n);
      e(a, b) = 1.0;
      Eigen::VectorXcd img(d * n * n);
      for (int i = 1; i <= d - 1; ++i) {
        MatrixXcd r = t.s(i).adjoint() * e * t.last() - e * t.s(d - i);
        img.segment((i - 1) * n * n, n * n) = Eigen::Map<Eigen::VectorXcd>(r.data(), n * n);
      }
      MatrixXcd r = t.last().adjoint() * e * t.last() - e;
      img.segment((d - 1) * n * n, n * n) = Eigen::Map<Eigen::VectorXcd>(r.data(), n * n);
      cols.col(a + b * n) = img;
    }
  Eigen::FullPivLU<MatrixXcd> lu(cols);
  lu.setThreshold(tol);
  return static_cast<long>(n * n - lu.rank());
}

}  // namespace gamma_support
