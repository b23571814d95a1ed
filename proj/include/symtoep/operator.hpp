#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symtoep/partition.hpp"
#include "symtoep/scalar.hpp"
#include "symtoep/symbol.hpp"

namespace symtoep {

/// Finitely supported vector in the orthonormal basis {e_p}.
using SparseVector = std::map<Partition, Scalar>;

void accumulate(SparseVector& v, const Partition& p, const Scalar& c);
SparseVector basis_vector(const Partition& p);
/// Drops the coordinates outside s.
SparseVector project(const SparseVector& v, Space s);

struct RankOneTerm {
  Partition row;
  Partition col;
  Scalar coef;
};

enum class OperatorKind {
  Toeplitz,
  Laurent,
  Hankel,
  DualToeplitz,
  ShiftY,
  FiniteRank,
  Sum,
  Product,
  Adjoint,
  Scaled,
};

/// Lazily evaluated operator on the antisymmetric basis.
///
/// Every operator knows how to map a finitely supported vector to a finitely
/// supported vector exactly, both forwards and through its adjoint. Products
/// are never formed from truncated matrices: a product column is the exact
/// image of the column of the right factor, so matrix entries of compound
/// expressions carry no truncation error.
///
/// Index conventions, with Pr the drop of basis terms whose last entry is
/// negative:
///   Toeplitz(phi)     = Pr M_phi            on analytic indices
///   Laurent(phi)      = M_phi               on all indices
///   Hankel(phi)       = (I - Pr) M_phi      analytic -> non-analytic
///   DualToeplitz(phi) = (I - Pr) M_phi      on non-analytic indices
///   ShiftY(j)         : e_p -> e_{p + f_j}  on analytic indices
class Operator {
 public:
  Operator() = default;

  static Operator toeplitz(Symbol phi);
  static Operator laurent(Symbol phi);
  static Operator hankel(Symbol phi);
  static Operator dual_toeplitz(Symbol phi);
  /// 1 <= j <= d-1.
  static Operator shift_y(int d, int j);
  /// sum of coef * e_row e_col^*; the index space defaults to everything.
  static Operator finite_rank(int d, std::vector<RankOneTerm> terms, Space space = Space::All);
  static Operator sum(std::vector<Operator> terms);
  /// factors[0] * factors[1] * ... (rightmost acts first).
  static Operator product(std::vector<Operator> factors);
  static Operator scaled(Scalar c, Operator op);
  /// Identity of H2, i.e. Toeplitz(1).
  static Operator identity(int d) { return toeplitz(Symbol::unit(d)); }

  OperatorKind kind() const;
  int d() const;
  /// Index set of columns and rows.
  Space domain() const;
  Space codomain() const;
  /// Symbol of the four symbol-driven kinds, nullptr otherwise.
  const Symbol* symbol() const;
  std::string describe() const;

  Operator adjoint() const;

  /// Exact image. Throws DomainError on a coordinate outside domain().
  SparseVector apply(const SparseVector& v) const;
  /// Exact image under the adjoint.
  SparseVector apply_adjoint(const SparseVector& v) const;

  SparseVector column(const Partition& p) const { return apply(basis_vector(p)); }
  /// <Op e_p, e_q>; DomainError if p or q lies outside the operator's spaces.
  Scalar entry(const Partition& q, const Partition& p) const;

  struct Node;

 private:
  explicit Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Scalar& c, const Operator& a);
Operator power(const Operator& a, int k);
/// ab - ba
Operator commutator(const Operator& a, const Operator& b);

/// entry() for the symbol-driven kinds, written out as the closed form
/// sum over sigma of sgn(sigma) * alpha(q_sigma - p). Checks the same index
/// sets as Operator::entry.
Scalar closed_form_entry(const Symbol& phi, const Partition& q, const Partition& p);

}  // namespace symtoep
