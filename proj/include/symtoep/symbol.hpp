#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "symtoep/partition.hpp"
#include "symtoep/scalar.hpp"

namespace symtoep {

/// Finite symmetric Laurent polynomial on the d-torus.
///
/// The coefficient stored at an orbit representative m is the common
/// coefficient of every lattice point in the orbit of m, so the symbol
/// s_1 = z_1 + z_2 is {(1,0): 1}. Zero coefficients are never stored, hence
/// two symbols are equal iff their maps are equal.
class Symbol {
 public:
  using Terms = std::map<OrbitRep, Scalar>;

  Symbol() = default;
  explicit Symbol(int d);
  Symbol(int d, Terms terms);

  static Symbol zero(int d) { return Symbol(d); }
  static Symbol unit(int d);
  /// Elementary symmetric function s_i, 1 <= i <= d. s_d is the coordinate p.
  static Symbol elementary(int d, int i);

  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the orbit of m (zero when absent).
  Scalar coefficient(const OrbitRep& m) const;
  /// Coefficient of an arbitrary lattice point (looked up via its orbit).
  Scalar coefficient_at(std::span<const int> lattice_point) const;

  /// Adds c to the orbit coefficient of m, pruning a resulting zero.
  void accumulate(const OrbitRep& m, const Scalar& c);

  /// max height over the support; 0 for constants and the zero symbol.
  int height() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  int d_ = 0;
  Terms terms_;
};

/// Pointwise complex conjugate on the torus.
Symbol conjugate(const Symbol& phi);
/// Exact product; same d required.
Symbol multiply(const Symbol& phi, const Symbol& psi);
/// a*phi + b*psi.
Symbol combine(const Scalar& a, const Symbol& phi, const Scalar& b, const Symbol& psi);

inline Symbol operator*(const Symbol& a, const Symbol& b) { return multiply(a, b); }
inline Symbol operator+(const Symbol& a, const Symbol& b) { return combine(1, a, 1, b); }
inline Symbol operator-(const Symbol& a, const Symbol& b) { return combine(1, a, -1, b); }
inline Symbol operator*(const Scalar& c, const Symbol& a) { return combine(c, a, 0, Symbol::zero(a.d())); }

/// Value of phi at a torus point; throws DomainError if some |z_k| != 1
/// beyond 1e-12.
std::complex<double> evaluate(const Symbol& phi, std::span<const std::complex<double>> z);

/// max |phi| over the uniform grid_size^d grid on the torus. A lower bound
/// on the sup norm.
double sup_norm_sampled(const Symbol& phi, int grid_size);

/// True iff every support representative has nonnegative last entry.
bool is_analytic(const Symbol& phi);

}  // namespace symtoep
