#pragma once

#include <cstdint>
#include <vector>

#include "symtoep/matrix_window.hpp"
#include "symtoep/operator.hpp"
#include "symtoep/report.hpp"
#include "symtoep/symbol.hpp"

namespace symtoep {

/// Settings for floating-point norm estimates.
struct NormOptions {
  int iterations = 3000;
  std::uint64_t seed = 42;
};

/// Residual operators of the Brown-Halmos system relative to a tuple
/// (S_1, ..., S_{d-1}, V):
///   S_i^* T V - T S_{d-i}   for i = 1..d-1,   and   V^* T V - T.
std::vector<Operator> brown_halmos_operators(const std::vector<Operator>& tuple, const Operator& t);

/// (T_{s_1}, ..., T_{s_{d-1}}, T_p) on H2.
std::vector<Operator> coordinate_toeplitz_tuple(int d);

/// The d Brown-Halmos residuals of t, assembled exactly on an analytic
/// window. DomainError if the window has non-analytic members.
std::vector<MatrixWindow> bh_residuals(const Operator& t, const Window& window);

/// Recovers the symbol of a Toeplitz operator whose symbol is supported on
/// orbit representatives of height <= degree_bound.
///
/// First checks the Brown-Halmos residuals on an analytic window (throws
/// NotToeplitzError if any is nonzero), then solves the exact linear system
/// entry(q, p) = sum_sigma sgn(sigma) alpha(q_sigma - p) over probe pairs
/// q = (r+d, ..., r+1), p = q - m (and diagonal translates of them).
/// Throws NotToeplitzError on an inconsistent system and UnderdeterminedError
/// when the probes do not determine every coefficient.
Symbol recover_symbol(const Operator& t, int degree_bound);

/// T_phi T_psi - T_{phi psi} + H_{conj phi}^* H_psi on an analytic window.
MatrixWindow product_defect(const Symbol& phi, const Symbol& psi, const Window& window);

/// Compares is_analytic(phi) with the commutators [T_phi, T_p] and
/// [T_phi, T_{s_i}]. Requires window.max_top() >= height(phi) + d
/// (MarginError otherwise).
Report classify_analytic(const Symbol& phi, const Window& window);

/// Concrete dilation check for each window w (min_bottom <= 0): the Laurent
/// matrix on w compresses exactly to the Toeplitz matrix on the analytic
/// part, and ||T_w|| <= ||L_w|| (1e-9). Norms are recorded in order
/// (toeplitz_0, laurent_0, toeplitz_1, ...), together with monotone growth of
/// both sequences and the sampled sup norm of phi.
Report lift_verify(const Symbol& phi, const std::vector<Window>& windows, const NormOptions& opts = {},
                   int sup_grid = 256);

}  // namespace symtoep
