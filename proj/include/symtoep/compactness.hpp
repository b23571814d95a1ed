#pragma once

#include <vector>

#include "symtoep/hardy.hpp"
#include "symtoep/matrix_window.hpp"
#include "symtoep/operator.hpp"
#include "symtoep/report.hpp"

namespace symtoep {

/// The shifts (Y_1, ..., Y_{d-1}, T_p) used by the compactness maps.
std::vector<Operator> compactness_shifts(int d);

struct EtaReport {
  int j = 0;
  /// Power-iteration lower bound on the norm of block_matrix.
  double block_norm = 0.0;
  /// d x d blocks, block (a, b) = Z_a^{*j} T Z_b^j on the window.
  MatrixWindow block_matrix;
  bool exact_blocks = true;
};

/// eta_j(T) on an analytic window, with every block assembled exactly.
EtaReport eta(const Operator& t, int j, const Window& window, const NormOptions& opts = {});

/// p = (k + (d-2)l, k + (d-3)l, ..., k, 0) for k = 1..l.
std::vector<Partition> el_projection(int d, int l);

/// E_l = P_E (I - Y_1^l Y_1^{*l}) ... (I - Y_{d-1}^l Y_{d-1}^{*l}) with
/// P_E = I - T_p T_p^*, the projection onto the joint kernel of the
/// Y_j^{*l} inside the coefficient space.
Operator el_operator(int d, int l);
/// F_l = sum_{r < l} T_p^r E_l T_p^{*r}.
Operator fl_operator(int d, int l);

/// Window matrix of T - (T F_l + F_l T - F_l T F_l) = (I - F_l) T (I - F_l).
MatrixWindow finite_rank_truncation(const Operator& t, int l, const Window& window);

struct DecayReport {
  /// Exact residual T_{s_i}^* T T_p - T T_{s_{d-i}} on the window.
  MatrixWindow bh_residual;
  /// ||T_p^{*n} [T, T_{s_i}] T_p^n|| on the window for n = 0..n_max.
  std::vector<double> norms;
  /// Whether each conjugated commutator is exactly zero on the window.
  std::vector<bool> exact_zero;
};

DecayReport commutator_decay(const Operator& t, int i, int n_max, const Window& window, const NormOptions& opts = {});

/// Checks the three asymptotic-Toeplitz conditions for T = Toeplitz(phi) + k
/// given in split form, with B := Toeplitz(phi):
///   commutator_decay_i : ||T_p^{*n}[T, T_{s_i}]T_p^n|| at n = j_max <= tol
///   weak_limit         : B satisfies Brown-Halmos exactly and the window
///                        matrices of T_p^{*n} T T_p^n agree exactly with B for
///                        n = j_max and j_max + 1
///   eta_decay          : ||eta_j(T - B)|| at j = j_max <= tol (all j <= j_max
///                        recorded as norms)
Report asymptotic_classify(const Symbol& phi, const Operator& k, int j_max, const Window& window,
                           const NormOptions& opts = {}, double tol = 1e-9);

}  // namespace symtoep
