#include "symtoep/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "symtoep/error.hpp"
#include "symtoep/matrix_window.hpp"
#include "symtoep/operator.hpp"

namespace symtoep {

namespace {

using Eigen::MatrixXcd;

constexpr double kClusterTol = 1e-5;

MatrixXcd commutator(const MatrixXcd& a, const MatrixXcd& b) { return a * b - b * a; }

// Null space of a stacked constraint matrix, as n x n matrices.
std::vector<MatrixXcd> null_space(const MatrixXcd& k, Eigen::Index n, double tol) {
  std::vector<MatrixXcd> out;
  if (n == 0) return out;
  Eigen::JacobiSVD<MatrixXcd> svd(k, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  const Eigen::Index cols = k.cols();
  for (Eigen::Index c = 0; c < cols; ++c) {
    double s = c < sv.size() ? sv[c] : 0.0;
    if (s > tol * scale) continue;
    Eigen::VectorXcd v = svd.matrixV().col(c);
    out.push_back(Eigen::Map<MatrixXcd>(v.data(), n, n));
  }
  return out;
}

}  // namespace

double max_abs(const MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double GammaTuple::max_commutator() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < mats.size(); ++a)
    for (std::size_t b = a + 1; b < mats.size(); ++b) worst = std::max(worst, max_abs(commutator(mats[a], mats[b])));
  return worst;
}

void validate(const GammaTuple& t) {
  if (t.d < 2 || static_cast<int>(t.mats.size()) != t.d) throw DimensionError("gamma tuple must hold d >= 2 matrices");
  for (const auto& m : t.mats)
    if (m.rows() != m.cols() || m.rows() != t.n()) throw DimensionError("gamma tuple matrices must be square, one size");
}

std::vector<Complex> symmetrize(std::span<const Complex> z) {
  const std::size_t d = z.size();
  // e[k] after processing z_0..z_j is the k-th elementary symmetric value
  std::vector<Complex> e(d + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += z[j] * e[k - 1];
  return {e.begin() + 1, e.end()};
}

std::vector<Complex> symmetric_roots(std::span<const Complex> point) {
  const auto d = static_cast<Eigen::Index>(point.size());
  if (d == 0) return {};
  // companion matrix of z^d + c_{d-1} z^{d-1} + ... + c_0, c_{d-k} = (-1)^k s_k
  MatrixXcd comp = MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 1; r < d; ++r) comp(r, r - 1) = 1.0;
  for (Eigen::Index k = 1; k <= d; ++k) {
    Complex c = (k % 2 == 0 ? 1.0 : -1.0) * point[static_cast<std::size_t>(k - 1)];
    comp(0, k - 1) = -c;
  }
  Eigen::ComplexEigenSolver<MatrixXcd> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);

  // single-linkage clusters, each replaced by its centroid
  std::vector<int> label(roots.size());
  std::iota(label.begin(), label.end(), 0);
  std::function<int(int)> find = [&](int x) { return label[x] == x ? x : label[x] = find(label[x]); };
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (std::abs(roots[a] - roots[b]) < kClusterTol) label[find(static_cast<int>(a))] = find(static_cast<int>(b));
  std::vector<Complex> out(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a) {
    Complex sum = 0.0;
    int count = 0;
    for (std::size_t b = 0; b < roots.size(); ++b)
      if (find(static_cast<int>(b)) == find(static_cast<int>(a))) {
        sum += roots[b];
        ++count;
      }
    out[a] = sum / static_cast<double>(count);
  }
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return std::abs(x) != std::abs(y) ? std::abs(x) > std::abs(y) : std::arg(x) < std::arg(y);
  });
  return out;
}

MembershipVerdict point_in_gamma(std::span<const Complex> point, double tol) {
  MembershipVerdict v;
  v.roots = symmetric_roots(point);
  double worst = 0.0;
  for (auto r : v.roots) worst = std::max(worst, std::abs(r));
  v.margin = worst - 1.0;
  v.in_set = v.margin <= tol;
  return v;
}

MembershipVerdict point_in_bgamma(std::span<const Complex> point, double tol) {
  MembershipVerdict v;
  v.roots = symmetric_roots(point);
  double worst = 0.0;
  for (auto r : v.roots) worst = std::max(worst, std::abs(std::abs(r) - 1.0));
  v.margin = worst;
  v.in_set = v.margin <= tol;
  return v;
}

GammaTuple synth_gamma_unitary(const std::vector<MatrixXcd>& unitaries, double tol) {
  const int d = static_cast<int>(unitaries.size());
  if (d < 2) throw DimensionError("synth_gamma_unitary: need d >= 2 unitaries");
  const Eigen::Index n = unitaries.front().rows();
  for (const auto& u : unitaries) {
    if (u.rows() != n || u.cols() != n) throw DimensionError("synth_gamma_unitary: matrices must be square, one size");
    if (max_abs(u.adjoint() * u - MatrixXcd::Identity(n, n)) > tol)
      throw PreconditionError("synth_gamma_unitary: input is not unitary");
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (max_abs(commutator(unitaries[static_cast<std::size_t>(a)], unitaries[static_cast<std::size_t>(b)])) > tol)
        throw PreconditionError("synth_gamma_unitary: inputs do not commute");
  // same recurrence as symmetrize, with matrices
  std::vector<MatrixXcd> e(static_cast<std::size_t>(d) + 1, MatrixXcd::Zero(n, n));
  e[0] = MatrixXcd::Identity(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k >= 1; --k)
      e[static_cast<std::size_t>(k)] += unitaries[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - 1)];
  GammaTuple t;
  t.d = d;
  t.comm_tol = tol;
  t.mats.assign(e.begin() + 1, e.end());
  return t;
}

Report check_gamma_unitary(const GammaTuple& t, double tol, std::uint64_t seed) {
  validate(t);
  const int d = t.d;
  const Eigen::Index n = t.n();
  Report r;
  r.check = "gamma-unitary";
  double comm = t.max_commutator();
  r.add(tol_check("commuting", comm, std::max(tol, t.comm_tol)));
  bool normal = true;
  for (int k = 0; k < d; ++k) {
    const auto& a = t.mats[static_cast<std::size_t>(k)];
    double res = max_abs(a * a.adjoint() - a.adjoint() * a);
    auto c = tol_check("normal[" + std::to_string(k + 1) + "]", res, tol);
    normal = normal && c.passed;
    r.add(c);
  }
  const auto& u = t.last();
  r.add(tol_check("unitary", max_abs(u.adjoint() * u - MatrixXcd::Identity(n, n)), tol));
  for (int i = 1; i <= d - 1; ++i) {
    r.add(tol_check("relation[" + std::to_string(i) + "]", max_abs(t.s(d - i) - t.s(i).adjoint() * u), tol,
                    "R_{d-i} = R_i^* U"));
  }
  if (!normal || !r.get("commuting").passed) {
    r.info["joint_spectrum"] = "skipped: tuple is not commuting and normal";
    r.add(CheckResult{"joint_spectrum", false, true, 1.0, 0.0, "skipped"});
    return r;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  MatrixXcd comb = MatrixXcd::Zero(n, n);
  for (const auto& a : t.mats) comb += Complex{gauss(rng), gauss(rng)} * a;
  Eigen::ComplexSchur<MatrixXcd> schur(comb);
  const MatrixXcd& q = schur.matrixU();
  double scale = 1.0;
  for (const auto& a : t.mats) scale = std::max(scale, max_abs(a));
  double worst_margin = 0.0;
  std::vector<std::vector<Complex>> joint(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(d)));
  for (int k = 0; k < d; ++k) {
    MatrixXcd diag = q.adjoint() * t.mats[static_cast<std::size_t>(k)] * q;
    MatrixXcd off = diag;
    off.diagonal().setZero();
    if (max_abs(off) > std::max(tol, 1e-8) * scale)
      throw DegeneracyError("check_gamma_unitary: joint diagonalization failed (off-diagonal " +
                            std::to_string(max_abs(off)) + "); retry with another seed");
    for (Eigen::Index s = 0; s < n; ++s) joint[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] = diag(s, s);
  }
  bool inside = true;
  for (const auto& pt : joint) {
    auto v = point_in_bgamma(pt, tol);
    inside = inside && v.in_set;
    worst_margin = std::max(worst_margin, v.margin);
  }
  r.values["joint_spectrum_margin"] = worst_margin;
  r.add(CheckResult{"joint_spectrum", inside, false, worst_margin, tol, "eigenvalue tuples in the boundary set"});
  return r;
}

Report check_gamma_isometry(const GammaTuple& t, double tol, int poly_degree, int grid_size,
                            std::optional<Eigen::Index> interior) {
  validate(t);
  if (poly_degree < 1) throw DomainError("check_gamma_isometry: polyDegree must be >= 1");
  if (grid_size < 8) throw DomainError("check_gamma_isometry: gridSize must be >= 8");
  const int d = t.d;
  const Eigen::Index n = t.n();
  const Eigen::Index k = std::min(n, interior.value_or(n));
  Report r;
  r.check = "gamma-isometry";
  r.info["battery"] = "necessary only";
  const auto& v = t.last();
  auto lead = [k](const MatrixXcd& m) -> MatrixXcd { return m.topLeftCorner(k, k); };
  r.add(tol_check("isometry", max_abs(lead(v.adjoint() * v - MatrixXcd::Identity(n, n))), tol, "V^* V = I"));
  for (int i = 1; i <= d - 1; ++i)
    r.add(tol_check("relation[" + std::to_string(i) + "]", max_abs(lead(t.s(d - i) - t.s(i).adjoint() * v)), tol,
                    "S_{d-i} = S_i^* V"));

  // (gamma_i S_i), i = 1..d-1
  const int m = d - 1;
  std::vector<MatrixXcd> scaled;
  for (int i = 1; i <= m; ++i) scaled.push_back(static_cast<double>(d - i) / d * t.s(i));
  // grid of the symmetrized m-torus
  std::vector<std::vector<Complex>> grid;
  {
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    const double step = 2.0 * M_PI / grid_size;
    while (true) {
      std::vector<Complex> w;
      for (int a : idx) w.push_back(std::polar(1.0, step * a));
      grid.push_back(symmetrize(w));
      int pos = 0;
      while (pos < m && ++idx[static_cast<std::size_t>(pos)] == grid_size) idx[static_cast<std::size_t>(pos++)] = 0;
      if (pos == m) break;
    }
  }
  // every exponent vector of total degree 1..poly_degree
  std::vector<int> alpha(static_cast<std::size_t>(m), 0);
  double worst = -1e300;
  std::string worst_name;
  std::function<void(int, int)> walk = [&](int pos, int left) {
    if (pos == m) {
      int deg = std::accumulate(alpha.begin(), alpha.end(), 0);
      if (deg == 0) return;
      MatrixXcd f = MatrixXcd::Identity(n, n);
      for (int a = 0; a < m; ++a)
        for (int e = 0; e < alpha[static_cast<std::size_t>(a)]; ++e) f = f * scaled[static_cast<std::size_t>(a)];
      double norm = n == 0 ? 0.0 : Eigen::JacobiSVD<MatrixXcd>(f).singularValues()(0);
      double sup = 0.0;
      for (const auto& pt : grid) {
        Complex val = 1.0;
        for (int a = 0; a < m; ++a)
          for (int e = 0; e < alpha[static_cast<std::size_t>(a)]; ++e) val *= pt[static_cast<std::size_t>(a)];
        sup = std::max(sup, std::abs(val));
      }
      if (norm - sup > worst) {
        worst = norm - sup;
        worst_name = to_string(Tuple(alpha.begin(), alpha.end()));
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      alpha[static_cast<std::size_t>(pos)] = e;
      walk(pos + 1, left - e);
    }
    alpha[static_cast<std::size_t>(pos)] = 0;
  };
  walk(0, poly_degree);
  r.values["battery_excess"] = worst;
  r.add(tol_check("contraction_battery", worst, tol, "necessary only; worst monomial " + worst_name));
  return r;
}

std::vector<MatrixXcd> s_toeplitz_solve(const GammaTuple& t, double tol) {
  validate(t);
  const int d = t.d;
  const Eigen::Index n = t.n();
  const Eigen::Index n2 = n * n;
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const auto& v = t.last();
  MatrixXcd k(d * n2, n2);
  // vec(A X B) = (B^T kron A) vec(X)
  for (int i = 1; i <= d - 1; ++i)
    k.middleRows((i - 1) * n2, n2) = Eigen::kroneckerProduct(v.transpose(), t.s(i).adjoint()).eval() -
                                     Eigen::kroneckerProduct(t.s(d - i).transpose(), id).eval();
  k.middleRows((d - 1) * n2, n2) =
      Eigen::kroneckerProduct(v.transpose(), v.adjoint()).eval() - MatrixXcd::Identity(n2, n2);
  return null_space(k, n, tol);
}

std::vector<MatrixXcd> commutant_basis(const GammaTuple& t, double tol) {
  validate(t);
  const Eigen::Index n = t.n();
  const Eigen::Index n2 = n * n;
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  MatrixXcd k(static_cast<Eigen::Index>(t.mats.size()) * n2, n2);
  for (std::size_t a = 0; a < t.mats.size(); ++a)
    k.middleRows(static_cast<Eigen::Index>(a) * n2, n2) = Eigen::kroneckerProduct(id, t.mats[a]).eval() -
                                                          Eigen::kroneckerProduct(t.mats[a].transpose(), id).eval();
  return null_space(k, n, tol);
}

Report minimal_extension_verify(const Symbol& phi, const Window& window) {
  const int d = phi.d();
  if (window.d() != d) throw DimensionError("minimal_extension_verify: window dimension mismatch");
  if (window.min_bottom() >= 0) throw DomainError("minimal_extension_verify: window must contain non-analytic indices");
  Report r;
  r.check = "minimal-extension";
  std::vector<Operator> coords;
  for (int i = 1; i <= d; ++i) coords.push_back(Operator::laurent(Symbol::elementary(d, i)));
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a + 1; b < coords.size(); ++b)
      r.add(exact_zero_check(r, "commute[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]",
                             assemble(commutator(coords[a], coords[b]), window)));

  Window analytic = window.restricted(Space::Analytic);
  MatrixWindow lw = assemble(Operator::laurent(phi), window);
  MatrixWindow compressed;
  compressed.rows = compressed.cols = analytic;
  for (const auto& [ij, val] : lw.entries) {
    const Partition& q = lw.row_index(ij.first);
    const Partition& p = lw.col_index(ij.second);
    if (q.is_analytic() && p.is_analytic()) compressed.entries[{*analytic.index_of(q), *analytic.index_of(p)}] = val;
  }
  r.add(exact_zero_check(r, "compression", subtract(compressed, assemble(Operator::toeplitz(phi), analytic))));

  // e_p = L_{conj p}^r e_base with base = p - (p_d, ...) analytic, r = -p_d
  Operator down = Operator::laurent(conjugate(Symbol::elementary(d, d)));
  std::size_t reached = 0;
  for (const auto& p : window.members()) {
    if (p.is_analytic()) {
      ++reached;
      continue;
    }
    auto [q, base] = regrade(p);
    SparseVector img = power(down, -q).apply(basis_vector(base));
    if (base.is_analytic() && img == basis_vector(p)) ++reached;
  }
  r.values["reached"] = static_cast<double>(reached);
  r.values["window_size"] = static_cast<double>(window.size());
  r.add(CheckResult{"reachability", reached == window.size(), true, reached == window.size() ? 0.0 : 1.0, 0.0,
                    std::to_string(reached) + "/" + std::to_string(window.size()) + " indices reached"});
  return r;
}

}  // namespace symtoep
