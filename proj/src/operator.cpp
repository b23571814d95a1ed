#include "symtoep/operator.hpp"

#include <algorithm>
#include <numeric>
#include <variant>

#include "symtoep/error.hpp"

namespace symtoep {

void accumulate(SparseVector& v, const Partition& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

SparseVector basis_vector(const Partition& p) { return SparseVector{{p, Scalar(1)}}; }

SparseVector project(const SparseVector& v, Space s) {
  SparseVector out;
  for (const auto& [p, c] : v)
    if (p.in(s)) out.emplace(p, c);
  return out;
}

namespace {

const char* space_name(Space s) {
  switch (s) {
    case Space::Analytic: return "analytic";
    case Space::NonAnalytic: return "non-analytic";
    case Space::All: return "all";
  }
  return "?";
}

void require_in(const Partition& p, Space s, const char* what) {
  if (!p.in(s))
    throw DomainError(std::string(what) + ": index " + to_string(p) + " is outside the " + space_name(s) + " index set");
}

/// Symbol expanded to its lattice points, so M_phi needs no re-expansion.
struct Expanded {
  Symbol phi;
  std::vector<std::pair<Tuple, Scalar>> lattice;

  explicit Expanded(Symbol s) : phi(std::move(s)) {
    for (const auto& [m, c] : phi.terms())
      for (auto& x : orbit_permutations(m)) lattice.emplace_back(std::move(x), c);
  }
};

SparseVector multiply_by(const Expanded& sym, const SparseVector& v) {
  SparseVector out;
  const int d = sym.phi.d();
  Tuple t(static_cast<std::size_t>(d));
  for (const auto& [p, c] : v) {
    if (p.d() != d) throw DimensionError("index " + to_string(p) + " has wrong length");
    for (const auto& [x, a] : sym.lattice) {
      for (int k = 0; k < d; ++k) t[static_cast<std::size_t>(k)] = p[k] + x[static_cast<std::size_t>(k)];
      auto sp = antisymmetrize(t, d);
      if (sp.sign == 0) continue;
      Scalar term = a * c;
      if (sp.sign < 0) term = -term;
      accumulate(out, *sp.partition, term);
    }
  }
  return out;
}

struct SymbolNode {
  OperatorKind kind;
  Expanded sym;
  Expanded conj_sym;
};

struct ShiftNode {
  int j;
};

struct RankNode {
  std::vector<RankOneTerm> terms;
  Space space;
};

struct ListNode {
  std::vector<Operator> ops;
};

struct AdjointNode {
  Operator op;
};

struct ScaledNode {
  Scalar c;
  Operator op;
};

}  // namespace

struct Operator::Node {
  OperatorKind kind;
  int d;
  Space domain;
  Space codomain;
  std::variant<SymbolNode, ShiftNode, RankNode, ListNode, AdjointNode, ScaledNode> body;
};

namespace {

// Intersection of two index sets; All is neutral.
Space meet(Space a, Space b, const char* ctx) {
  if (a == Space::All) return b;
  if (b == Space::All || a == b) return a;
  throw DomainError(std::string(ctx) + ": operators act on disjoint index sets");
}

}  // namespace

Operator Operator::toeplitz(Symbol phi) {
  auto c = conjugate(phi);
  int d = phi.d();
  return Operator(std::make_shared<Node>(Node{OperatorKind::Toeplitz, d, Space::Analytic, Space::Analytic,
                                              SymbolNode{OperatorKind::Toeplitz, Expanded(std::move(phi)), Expanded(std::move(c))}}));
}

Operator Operator::laurent(Symbol phi) {
  auto c = conjugate(phi);
  int d = phi.d();
  return Operator(std::make_shared<Node>(Node{OperatorKind::Laurent, d, Space::All, Space::All,
                                              SymbolNode{OperatorKind::Laurent, Expanded(std::move(phi)), Expanded(std::move(c))}}));
}

Operator Operator::hankel(Symbol phi) {
  auto c = conjugate(phi);
  int d = phi.d();
  return Operator(std::make_shared<Node>(Node{OperatorKind::Hankel, d, Space::Analytic, Space::NonAnalytic,
                                              SymbolNode{OperatorKind::Hankel, Expanded(std::move(phi)), Expanded(std::move(c))}}));
}

Operator Operator::dual_toeplitz(Symbol phi) {
  auto c = conjugate(phi);
  int d = phi.d();
  return Operator(std::make_shared<Node>(Node{OperatorKind::DualToeplitz, d, Space::NonAnalytic, Space::NonAnalytic,
                                              SymbolNode{OperatorKind::DualToeplitz, Expanded(std::move(phi)), Expanded(std::move(c))}}));
}

Operator Operator::shift_y(int d, int j) {
  if (d < 2) throw DimensionError("ShiftY needs d >= 2");
  if (j < 1 || j > d - 1) throw DomainError("ShiftY index j must lie in 1..d-1, got " + std::to_string(j));
  return Operator(std::make_shared<Node>(Node{OperatorKind::ShiftY, d, Space::Analytic, Space::Analytic, ShiftNode{j}}));
}

Operator Operator::finite_rank(int d, std::vector<RankOneTerm> terms, Space space) {
  for (const auto& t : terms) {
    if (t.row.d() != d || t.col.d() != d) throw DimensionError("finite-rank term has wrong length");
    require_in(t.row, space, "finite_rank");
    require_in(t.col, space, "finite_rank");
  }
  return Operator(std::make_shared<Node>(Node{OperatorKind::FiniteRank, d, space, space, RankNode{std::move(terms), space}}));
}

Operator Operator::sum(std::vector<Operator> terms) {
  if (terms.empty()) throw DomainError("sum of no operators");
  int d = terms.front().d();
  Space dom = Space::All, cod = Space::All;
  for (const auto& t : terms) {
    if (t.d() != d) throw DimensionError("sum: operators of different dimension");
    dom = meet(dom, t.domain(), "sum");
    cod = meet(cod, t.codomain(), "sum");
  }
  return Operator(std::make_shared<Node>(Node{OperatorKind::Sum, d, dom, cod, ListNode{std::move(terms)}}));
}

Operator Operator::product(std::vector<Operator> factors) {
  if (factors.empty()) throw DomainError("product of no operators");
  int d = factors.front().d();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].d() != d) throw DimensionError("product: operators of different dimension");
    if (k + 1 < factors.size()) meet(factors[k].domain(), factors[k + 1].codomain(), "product");
  }
  Space dom = Space::All;
  for (auto it = factors.rbegin(); it != factors.rend() && dom == Space::All; ++it) dom = it->domain();
  Space cod = Space::All;
  for (auto it = factors.begin(); it != factors.end() && cod == Space::All; ++it) cod = it->codomain();
  return Operator(std::make_shared<Node>(Node{OperatorKind::Product, d, dom, cod, ListNode{std::move(factors)}}));
}

Operator Operator::scaled(Scalar c, Operator op) {
  int d = op.d();
  Space dom = op.domain(), cod = op.codomain();
  return Operator(std::make_shared<Node>(Node{OperatorKind::Scaled, d, dom, cod, ScaledNode{std::move(c), std::move(op)}}));
}

OperatorKind Operator::kind() const { return node_->kind; }
int Operator::d() const { return node_->d; }
Space Operator::domain() const { return node_->domain; }
Space Operator::codomain() const { return node_->codomain; }

const Symbol* Operator::symbol() const {
  if (auto* s = std::get_if<SymbolNode>(&node_->body)) return &s->sym.phi;
  return nullptr;
}

Operator Operator::adjoint() const {
  const Node& n = *node_;
  switch (n.kind) {
    case OperatorKind::Toeplitz: return toeplitz(std::get<SymbolNode>(n.body).conj_sym.phi);
    case OperatorKind::Laurent: return laurent(std::get<SymbolNode>(n.body).conj_sym.phi);
    case OperatorKind::DualToeplitz: return dual_toeplitz(std::get<SymbolNode>(n.body).conj_sym.phi);
    case OperatorKind::Adjoint: return std::get<AdjointNode>(n.body).op;
    default:
      return Operator(std::make_shared<Node>(Node{OperatorKind::Adjoint, n.d, n.codomain, n.domain, AdjointNode{*this}}));
  }
}

std::string Operator::describe() const {
  const Node& n = *node_;
  auto list = [](const std::vector<Operator>& ops, const char* sep) {
    std::string s = "(";
    for (std::size_t k = 0; k < ops.size(); ++k) s += (k ? sep : "") + ops[k].describe();
    return s + ")";
  };
  switch (n.kind) {
    case OperatorKind::Toeplitz: return "Toeplitz";
    case OperatorKind::Laurent: return "Laurent";
    case OperatorKind::Hankel: return "Hankel";
    case OperatorKind::DualToeplitz: return "DualToeplitz";
    case OperatorKind::ShiftY: return "ShiftY" + std::to_string(std::get<ShiftNode>(n.body).j);
    case OperatorKind::FiniteRank: return "FiniteRank[" + std::to_string(std::get<RankNode>(n.body).terms.size()) + "]";
    case OperatorKind::Sum: return list(std::get<ListNode>(n.body).ops, " + ");
    case OperatorKind::Product: return list(std::get<ListNode>(n.body).ops, " * ");
    case OperatorKind::Adjoint: return std::get<AdjointNode>(n.body).op.describe() + "^*";
    case OperatorKind::Scaled: return to_string(std::get<ScaledNode>(n.body).c) + "*" + std::get<ScaledNode>(n.body).op.describe();
  }
  return "?";
}

namespace {

SparseVector apply_node(const Operator::Node& n, const SparseVector& v, bool adjoint);

SparseVector apply_op(const Operator& op, const SparseVector& v, bool adjoint) {
  return adjoint ? op.apply_adjoint(v) : op.apply(v);
}

SparseVector apply_symbol(const SymbolNode& s, const SparseVector& v, bool adjoint) {
  // Adjoints: T_phi^* = T_conj(phi), M_phi^* = M_conj(phi), DT_phi^* = DT_conj(phi),
  // and H_phi^* = Pr M_conj(phi) restricted to the non-analytic side.
  const Expanded& sym = adjoint ? s.conj_sym : s.sym;
  SparseVector image = multiply_by(sym, v);
  switch (s.kind) {
    case OperatorKind::Toeplitz: return project(image, Space::Analytic);
    case OperatorKind::Laurent: return image;
    case OperatorKind::Hankel: return project(image, adjoint ? Space::Analytic : Space::NonAnalytic);
    case OperatorKind::DualToeplitz: return project(image, Space::NonAnalytic);
    default: return image;
  }
}

SparseVector apply_shift(int d, int j, const SparseVector& v, bool adjoint) {
  SparseVector out;
  for (const auto& [p, c] : v) {
    Tuple t = p.entries();
    for (int k = 0; k < j; ++k) t[static_cast<std::size_t>(k)] += adjoint ? -1 : 1;
    // Y_j^* e_p = e_{p - f_j} when that is still a strict partition, else 0
    auto sp = antisymmetrize(t, d);
    if (sp.sign == 1 && sp.partition->entries() == t) accumulate(out, *sp.partition, c);
  }
  return out;
}

SparseVector apply_rank(const RankNode& r, const SparseVector& v, bool adjoint) {
  SparseVector out;
  for (const auto& term : r.terms) {
    const Partition& from = adjoint ? term.row : term.col;
    const Partition& to = adjoint ? term.col : term.row;
    auto it = v.find(from);
    if (it == v.end()) continue;
    accumulate(out, to, (adjoint ? term.coef.conj() : term.coef) * it->second);
  }
  return out;
}

SparseVector apply_node(const Operator::Node& n, const SparseVector& v, bool adjoint) {
  Space in = adjoint ? n.codomain : n.domain;
  if (n.kind != OperatorKind::Sum && n.kind != OperatorKind::Product && n.kind != OperatorKind::Scaled &&
      n.kind != OperatorKind::Adjoint)
    for (const auto& [p, c] : v) require_in(p, in, "apply");
  switch (n.kind) {
    case OperatorKind::Toeplitz:
    case OperatorKind::Laurent:
    case OperatorKind::Hankel:
    case OperatorKind::DualToeplitz: return apply_symbol(std::get<SymbolNode>(n.body), v, adjoint);
    case OperatorKind::ShiftY: return apply_shift(n.d, std::get<ShiftNode>(n.body).j, v, adjoint);
    case OperatorKind::FiniteRank: return apply_rank(std::get<RankNode>(n.body), v, adjoint);
    case OperatorKind::Sum: {
      SparseVector out;
      for (const auto& op : std::get<ListNode>(n.body).ops)
        for (const auto& [p, c] : apply_op(op, v, adjoint)) accumulate(out, p, c);
      return out;
    }
    case OperatorKind::Product: {
      const auto& ops = std::get<ListNode>(n.body).ops;
      SparseVector cur = v;
      if (adjoint) {
        for (const auto& op : ops) cur = op.apply_adjoint(cur);
      } else {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) cur = it->apply(cur);
      }
      return cur;
    }
    case OperatorKind::Adjoint: return apply_op(std::get<AdjointNode>(n.body).op, v, !adjoint);
    case OperatorKind::Scaled: {
      const auto& s = std::get<ScaledNode>(n.body);
      Scalar c = adjoint ? s.c.conj() : s.c;
      SparseVector out = apply_op(s.op, v, adjoint);
      if (c.is_zero()) return {};
      for (auto& [p, x] : out) x *= c;
      return out;
    }
  }
  return {};
}

}  // namespace

SparseVector Operator::apply(const SparseVector& v) const { return apply_node(*node_, v, false); }
SparseVector Operator::apply_adjoint(const SparseVector& v) const { return apply_node(*node_, v, true); }

Scalar closed_form_entry(const Symbol& phi, const Partition& q, const Partition& p) {
  const int d = phi.d();
  if (q.d() != d || p.d() != d) throw DimensionError("closed_form_entry: index has wrong length");
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total;
  Tuple diff(static_cast<std::size_t>(d));
  do {
    int inversions = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    for (int k = 0; k < d; ++k) diff[static_cast<std::size_t>(k)] = q[perm[static_cast<std::size_t>(k)]] - p[k];
    Scalar a = phi.coefficient_at(diff);
    if (a.is_zero()) continue;
    if (inversions % 2) total -= a;
    else total += a;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Scalar Operator::entry(const Partition& q, const Partition& p) const {
  require_in(p, domain(), "entry (column)");
  require_in(q, codomain(), "entry (row)");
  if (const auto* s = std::get_if<SymbolNode>(&node_->body)) return closed_form_entry(s->sym.phi, q, p);
  if (const auto* sh = std::get_if<ShiftNode>(&node_->body)) {
    Tuple t = p.entries();
    for (int k = 0; k < sh->j; ++k) t[static_cast<std::size_t>(k)] += 1;
    return t == q.entries() ? Scalar(1) : Scalar();
  }
  SparseVector col = column(p);
  auto it = col.find(q);
  return it == col.end() ? Scalar() : it->second;
}

Operator operator*(const Operator& a, const Operator& b) { return Operator::product({a, b}); }
Operator operator+(const Operator& a, const Operator& b) { return Operator::sum({a, b}); }
Operator operator-(const Operator& a, const Operator& b) { return Operator::sum({a, Operator::scaled(-1, b)}); }
Operator operator*(const Scalar& c, const Operator& a) { return Operator::scaled(c, a); }

Operator power(const Operator& a, int k) {
  if (k < 0) throw DomainError("negative operator power");
  if (k == 0) {
    if (a.domain() == Space::NonAnalytic) return Operator::dual_toeplitz(Symbol::unit(a.d()));
    if (a.domain() == Space::Analytic) return Operator::identity(a.d());
    return Operator::laurent(Symbol::unit(a.d()));
  }
  return Operator::product(std::vector<Operator>(static_cast<std::size_t>(k), a));
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace symtoep
