#pragma once

#include <vector>

#include "symtoep/matrix_window.hpp"
#include "symtoep/operator.hpp"
#include "symtoep/report.hpp"

namespace symtoep {

/// Non-analytic members (last entry <= -1) of the window with these bounds.
/// DomainError unless min_bottom < 0.
Window dual_window(int d, int max_top, int min_bottom);

/// <DT_phi e_p, e_q> for non-analytic q, p; DomainError on analytic indices.
Scalar dual_entry(const Symbol& phi, const Partition& q, const Partition& p);

/// (DT_{conj s_1}, ..., DT_{conj s_{d-1}}, DT_{conj p}).
std::vector<Operator> conjugate_coordinate_tuple(int d);

/// Brown-Halmos residuals of t relative to the conjugate coordinate tuple,
/// assembled exactly on the non-analytic part of the window.
std::vector<MatrixWindow> dual_bh_residuals(const Operator& t, const Window& window);

/// Splits Laurent(phi) on a window straddling the analytic split into the
/// blocks "T", "H", "H*", "DT" and compares each exactly with Toeplitz(phi),
/// Hankel(phi), Hankel(conj phi)^* and DualToeplitz(phi). MarginError unless
/// min_bottom <= -max(height, 1) and max_top >= d - 1 + max(height, 1).
Report block_decomposition_check(const Symbol& phi, const Window& full_window);

}  // namespace symtoep
