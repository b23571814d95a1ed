#include "symtoep/compactness.hpp"

#include "symtoep/error.hpp"
#include "symtoep/norm.hpp"

namespace symtoep {

std::vector<Operator> compactness_shifts(int d) {
  std::vector<Operator> z;
  for (int a = 1; a <= d - 1; ++a) z.push_back(Operator::shift_y(d, a));
  z.push_back(Operator::toeplitz(Symbol::elementary(d, d)));
  return z;
}

EtaReport eta(const Operator& t, int j, const Window& window, const NormOptions& opts) {
  if (j < 1) throw DomainError("eta: j must be >= 1");
  if (!window.all_analytic()) throw DomainError("eta: window must be analytic");
  auto z = compactness_shifts(t.d());
  std::vector<std::vector<Operator>> blocks;
  for (const auto& za : z) {
    auto& row = blocks.emplace_back();
    for (const auto& zb : z) row.push_back(Operator::product({power(za, j).adjoint(), t, power(zb, j)}));
  }
  EtaReport r;
  r.j = j;
  r.block_matrix = assemble_blocks(blocks, window, window);
  r.block_norm = r.block_matrix.is_zero() ? 0.0 : norm_estimate(r.block_matrix, opts.iterations, opts.seed);
  r.exact_blocks = r.block_matrix.exact;
  return r;
}

std::vector<Partition> el_projection(int d, int l) {
  if (l < 1) throw DomainError("el_projection: l must be >= 1");
  if (d < 2) throw DimensionError("el_projection: d must be >= 2");
  std::vector<Partition> out;
  for (int k = 1; k <= l; ++k) {
    Tuple p(static_cast<std::size_t>(d));
    for (int idx = 0; idx < d - 1; ++idx) p[static_cast<std::size_t>(idx)] = k + (d - 2 - idx) * l;
    p.back() = 0;
    out.emplace_back(std::move(p));
  }
  return out;
}

Operator el_operator(int d, int l) {
  if (l < 1) throw DomainError("el_operator: l must be >= 1");
  Operator id = Operator::identity(d);
  Operator tp = Operator::toeplitz(Symbol::elementary(d, d));
  std::vector<Operator> factors{id - tp * tp.adjoint()};
  for (int j = 1; j <= d - 1; ++j) {
    Operator yl = power(Operator::shift_y(d, j), l);
    factors.push_back(id - yl * yl.adjoint());
  }
  return Operator::product(std::move(factors));
}

Operator fl_operator(int d, int l) {
  Operator e = el_operator(d, l);
  Operator tp = Operator::toeplitz(Symbol::elementary(d, d));
  std::vector<Operator> terms;
  for (int r = 0; r < l; ++r) {
    Operator tr = power(tp, r);
    terms.push_back(Operator::product({tr, e, tr.adjoint()}));
  }
  return Operator::sum(std::move(terms));
}

MatrixWindow finite_rank_truncation(const Operator& t, int l, const Window& window) {
  if (!window.all_analytic()) throw DomainError("finite_rank_truncation: window must be analytic");
  Operator f = fl_operator(t.d(), l);
  Operator tilde = t * f + f * t - Operator::product({f, t, f});
  return assemble(t - tilde, window);
}

DecayReport commutator_decay(const Operator& t, int i, int n_max, const Window& window, const NormOptions& opts) {
  const int d = t.d();
  if (i < 1 || i > d - 1) throw DomainError("commutator_decay: i must lie in 1..d-1");
  if (!window.all_analytic()) throw DomainError("commutator_decay: window must be analytic");
  auto tuple = coordinate_toeplitz_tuple(d);
  DecayReport r;
  r.bh_residual = assemble(brown_halmos_operators(tuple, t)[static_cast<std::size_t>(i - 1)], window);
  Operator c = commutator(t, tuple[static_cast<std::size_t>(i - 1)]);
  const Operator& tp = tuple.back();
  for (int n = 0; n <= n_max; ++n) {
    Operator tn = power(tp, n);
    MatrixWindow m = assemble(Operator::product({tn.adjoint(), c, tn}), window);
    r.exact_zero.push_back(m.is_zero());
    r.norms.push_back(m.is_zero() ? 0.0 : norm_estimate(m, opts.iterations, opts.seed));
  }
  return r;
}

Report asymptotic_classify(const Symbol& phi, const Operator& k, int j_max, const Window& window,
                           const NormOptions& opts, double tol) {
  const int d = phi.d();
  if (k.d() != d) throw DimensionError("asymptotic_classify: dimension mismatch");
  if (j_max < 1) throw DomainError("asymptotic_classify: j_max must be >= 1");
  Report r;
  r.check = "asymptotic";
  Operator b = Operator::toeplitz(phi);
  Operator t = b + k;

  for (int i = 1; i <= d - 1; ++i) {
    auto dec = commutator_decay(t, i, j_max, window, opts);
    std::string name = "commutator_decay_s" + std::to_string(i);
    for (double n : dec.norms) r.norms.push_back(n);
    r.add(tol_check(name, dec.norms.back(), tol, "n = " + std::to_string(j_max)));
  }

  bool bh_zero = true;
  for (const auto& res : bh_residuals(b, window)) bh_zero = bh_zero && res.is_zero();
  Operator tp = Operator::toeplitz(Symbol::elementary(d, d));
  MatrixWindow b_w = assemble(b, window);
  bool stable = true;
  for (int n : {j_max, j_max + 1}) {
    Operator tn = power(tp, n);
    MatrixWindow conj = assemble(Operator::product({tn.adjoint(), t, tn}), window);
    auto diff = subtract(conj, b_w);
    if (!diff.is_zero()) {
      stable = false;
      if (auto w = first_nonzero(diff, "weak_limit")) r.witnesses.push_back(*w);
    }
  }
  r.add(CheckResult{"weak_limit", bh_zero && stable, true, bh_zero && stable ? 0.0 : 1.0, 0.0,
                    bh_zero ? "limit compared against Toeplitz part" : "Toeplitz part fails Brown-Halmos"});

  double last = 0.0;
  for (int j = 1; j <= j_max; ++j) {
    auto e = eta(k, j, window, opts);
    r.values["eta_" + std::to_string(j)] = e.block_norm;
    last = e.block_norm;
  }
  r.add(tol_check("eta_decay", last, tol, "j = " + std::to_string(j_max)));
  return r;
}

}  // namespace symtoep
