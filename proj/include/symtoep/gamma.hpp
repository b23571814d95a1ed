#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "symtoep/partition.hpp"
#include "symtoep/report.hpp"
#include "symtoep/symbol.hpp"

namespace symtoep {

using Complex = std::complex<double>;

/// d commuting square matrices ordered (S_1, ..., S_{d-1}, V).
struct GammaTuple {
  int d = 0;
  std::vector<Eigen::MatrixXcd> mats;
  double comm_tol = 1e-9;

  Eigen::Index n() const { return mats.empty() ? 0 : mats.front().rows(); }
  /// S_i for 1 <= i <= d-1.
  const Eigen::MatrixXcd& s(int i) const { return mats[static_cast<std::size_t>(i - 1)]; }
  const Eigen::MatrixXcd& last() const { return mats.back(); }
  /// Largest max-abs entry of a pairwise commutator.
  double max_commutator() const;
};

/// Throws DimensionError unless there are d square matrices of one size.
void validate(const GammaTuple& t);

struct MembershipVerdict {
  bool in_set = false;
  std::vector<Complex> roots;
  /// max |root| - 1 for the closed set, max ||root| - 1| for the boundary.
  double margin = 0.0;
};

/// Elementary symmetric values (s_1, ..., s_d) of z.
std::vector<Complex> symmetrize(std::span<const Complex> z);

/// Roots of z^d - s_1 z^{d-1} + ... + (-1)^d s_d, by companion-matrix
/// eigenvalues. Roots closer than 1e-5 are replaced by the mean of their
/// cluster, which is accurate even where the individual roots are not.
std::vector<Complex> symmetric_roots(std::span<const Complex> point);

MembershipVerdict point_in_gamma(std::span<const Complex> point, double tol);
MembershipVerdict point_in_bgamma(std::span<const Complex> point, double tol);

/// Max-abs entry of a matrix; all gamma residuals are measured this way.
double max_abs(const Eigen::MatrixXcd& m);

/// R_i = e_i(U_1, ..., U_d), U = U_1 ... U_d. PreconditionError unless the
/// inputs are unitary and pairwise commuting within tol.
GammaTuple synth_gamma_unitary(const std::vector<Eigen::MatrixXcd>& unitaries, double tol = 1e-9);

/// Commuting, normal, U unitary, R_{d-i} = R_i^* U, joint spectrum in the
/// boundary set. The joint eigenvalues come from a Schur form of a seeded
/// random combination; DegeneracyError if it fails to diagonalize the tuple.
Report check_gamma_unitary(const GammaTuple& t, double tol, std::uint64_t seed = 42);

/// V^* V = I and S_{d-i} = S_i^* V, plus a sampled von Neumann battery for
/// (gamma_1 S_1, ..., gamma_{d-1} S_{d-1}) with gamma_i = (d-i)/d: every
/// monomial of degree <= poly_degree must have norm at most its max over a
/// grid_size^{d-1} grid of the symmetrized (d-1)-torus. The battery is a
/// necessary condition only. If interior is set, the algebraic residuals are
/// read on the leading interior x interior block.
Report check_gamma_isometry(const GammaTuple& t, double tol, int poly_degree, int grid_size,
                            std::optional<Eigen::Index> interior = std::nullopt);

/// Orthonormal (Frobenius) basis of {X : S_i^* X V = X S_{d-i}, V^* X V = X}.
std::vector<Eigen::MatrixXcd> s_toeplitz_solve(const GammaTuple& t, double tol);

/// Orthonormal basis of the joint commutant of the tuple.
std::vector<Eigen::MatrixXcd> commutant_basis(const GammaTuple& t, double tol);

/// Minimal-extension checks in the Hardy model on a window reaching below the
/// analytic part: the Laurent coordinates commute, the analytic compression
/// of Laurent(phi) is Toeplitz(phi), and every window index is a diagonal
/// down-shift of an analytic one.
Report minimal_extension_verify(const Symbol& phi, const Window& window);

}  // namespace symtoep
