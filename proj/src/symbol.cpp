#include "symtoep/symbol.hpp"

#include <cmath>
#include <numbers>

#include "symtoep/error.hpp"

namespace symtoep {

Symbol::Symbol(int d) : d_(d) {
  if (d < 1) throw DimensionError("symbol dimension must be positive");
}

Symbol::Symbol(int d, Terms terms) : Symbol(d) {
  for (auto& [m, c] : terms) {
    if (m.d() != d) throw DimensionError("orbit representative " + to_string(m.entries()) + " has wrong length");
    accumulate(m, c);
  }
}

Symbol Symbol::unit(int d) {
  Symbol s(d);
  s.accumulate(OrbitRep(Tuple(static_cast<std::size_t>(d), 0)), 1);
  return s;
}

Symbol Symbol::elementary(int d, int i) {
  if (i < 1 || i > d)
    throw DomainError("elementary symmetric index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  Symbol s(d);
  s.accumulate(OrbitRep(ones_prefix(d, i)), 1);
  return s;
}

Scalar Symbol::coefficient(const OrbitRep& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Symbol::coefficient_at(std::span<const int> lattice_point) const {
  return coefficient(OrbitRep::of(Tuple(lattice_point.begin(), lattice_point.end())));
}

void Symbol::accumulate(const OrbitRep& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Symbol::height() const {
  int h = 0;
  for (const auto& [m, c] : terms_) h = std::max(h, m.height());
  return h;
}

Symbol conjugate(const Symbol& phi) {
  Symbol out(phi.d());
  for (const auto& [m, c] : phi.terms()) {
    Tuple t(m.entries().rbegin(), m.entries().rend());
    for (int& e : t) e = -e;
    out.accumulate(OrbitRep(std::move(t)), c.conj());
  }
  return out;
}

Symbol multiply(const Symbol& phi, const Symbol& psi) {
  if (phi.d() != psi.d()) throw DimensionError("multiply: symbols of different dimension");
  const int d = phi.d();
  Symbol out(d);
  // The product is symmetric, so its orbit coefficient equals the coefficient
  // of the representative lattice point itself: collect only the pairs
  // (x, y) whose sum x + y is already weakly decreasing.
  for (const auto& [m1, a] : phi.terms()) {
    auto xs = orbit_permutations(m1);
    for (const auto& [m2, b] : psi.terms()) {
      Scalar ab = a * b;
      for (const auto& x : xs) {
        for (const auto& y : orbit_permutations(m2)) {
          Tuple s(static_cast<std::size_t>(d));
          bool sorted = true;
          for (int k = 0; k < d; ++k) {
            s[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] + y[static_cast<std::size_t>(k)];
            if (k > 0 && s[static_cast<std::size_t>(k - 1)] < s[static_cast<std::size_t>(k)]) {
              sorted = false;
              break;
            }
          }
          if (sorted) out.accumulate(OrbitRep(std::move(s)), ab);
        }
      }
    }
  }
  return out;
}

Symbol combine(const Scalar& a, const Symbol& phi, const Scalar& b, const Symbol& psi) {
  if (phi.d() != psi.d()) throw DimensionError("combine: symbols of different dimension");
  Symbol out(phi.d());
  for (const auto& [m, c] : phi.terms()) out.accumulate(m, a * c);
  for (const auto& [m, c] : psi.terms()) out.accumulate(m, b * c);
  return out;
}

std::complex<double> evaluate(const Symbol& phi, std::span<const std::complex<double>> z) {
  if (static_cast<int>(z.size()) != phi.d()) throw DimensionError("evaluate: point has wrong length");
  for (const auto& zk : z)
    if (std::abs(std::abs(zk) - 1.0) > 1e-12) throw DomainError("evaluate: point is off the torus");
  std::complex<double> total = 0;
  for (const auto& [m, c] : phi.terms()) {
    std::complex<double> orbit_sum = 0;
    for (const auto& x : orbit_permutations(m)) {
      std::complex<double> mono = 1;
      for (std::size_t k = 0; k < x.size(); ++k) {
        // z^{-n} = conj(z)^n on the torus
        const std::complex<double> base = x[k] >= 0 ? z[k] : std::conj(z[k]);
        for (int e = std::abs(x[k]); e > 0; --e) mono *= base;
      }
      orbit_sum += mono;
    }
    total += c.to_complex() * orbit_sum;
  }
  return total;
}

double sup_norm_sampled(const Symbol& phi, int grid_size) {
  if (grid_size < 2) throw DomainError("sup_norm_sampled: grid size must be >= 2");
  if (phi.empty()) return 0.0;
  const int d = phi.d();
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k)
    roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / grid_size);
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  double best = 0.0;
  while (true) {
    for (int k = 0; k < d; ++k) z[static_cast<std::size_t>(k)] = roots[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    best = std::max(best, std::abs(evaluate(phi, z)));
    int k = d - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == grid_size) idx[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return best;
}

bool is_analytic(const Symbol& phi) {
  for (const auto& [m, c] : phi.terms())
    if (m[m.d() - 1] < 0) return false;
  return true;
}

}  // namespace symtoep
