#include <doctest.h>

#include "battery.hpp"
#include "oracles.hpp"
#include "symtoep/error.hpp"
#include "symtoep/hardy.hpp"
#include "symtoep/norm.hpp"

using namespace symtoep;

namespace {

Symbol s(int d, int i) { return Symbol::elementary(d, i); }
Symbol cs(int d, int i) { return conjugate(Symbol::elementary(d, i)); }

bool all_zero(const std::vector<MatrixWindow>& ms) {
  for (const auto& m : ms)
    if (!m.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("basis normalization: <a_p, a_q> = d! delta") {
  for (int d : {2, 3}) {
    Window w = Window::enumerate(d, 4, -2);
    long fact = d == 2 ? 2 : 6;
    for (const auto& p : w.members())
      for (const auto& q : w.members()) {
        Scalar ip = oracle::inner(oracle::antisym(p.entries()), oracle::antisym(q.entries()));
        CHECK(ip == Scalar(p == q ? fact : 0));
      }
  }
}

TEST_CASE("entries agree with polynomial expansion") {
  for (int d : {2, 3}) {
    auto syms = battery::symbols(d);
    Window w = Window::enumerate(d, d == 2 ? 4 : 4, d == 2 ? -2 : -1);
    for (std::size_t k = 0; k < syms.size(); k += (d == 2 ? 3 : 4)) {
      const auto& phi = syms[k].phi;
      Operator lau = Operator::laurent(phi);
      for (const auto& p : w.members())
        for (const auto& q : w.members()) {
          Scalar want = oracle::entry(phi, q.entries(), p.entries());
          CHECK_MESSAGE(closed_form_entry(phi, q, p) == want, syms[k].name);
          CHECK(lau.entry(q, p) == want);
          CHECK(lau.column(p)[q] == want);
        }
    }
  }
}

TEST_CASE("entry examples") {
  CHECK(Operator::toeplitz(s(2, 1)).entry({2, 0}, {1, 0}) == Scalar(1));
  CHECK(Operator::toeplitz(s(2, 2)).entry({2, 1}, {1, 0}) == Scalar(1));
  CHECK(Operator::hankel(cs(2, 2)).entry({0, -1}, {1, 0}) == Scalar(1));
  CHECK(Operator::toeplitz(s(2, 1)).entry({2, 1}, {1, 0}) == Scalar(0));
  CHECK_THROWS_AS(Operator::toeplitz(s(2, 1)).entry({2, 1}, {0, -1}), DomainError);
  CHECK_THROWS_AS(Operator::hankel(s(2, 1)).entry({2, 1}, {1, 0}), DomainError);
  CHECK(Operator::shift_y(2, 1).entry({2, 0}, {1, 0}) == Scalar(1));
  CHECK(Operator::shift_y(3, 2).entry({3, 2, 0}, {2, 1, 0}) == Scalar(1));
  CHECK(Operator::shift_y(3, 2).entry({3, 1, 0}, {2, 1, 0}) == Scalar(0));
}

TEST_CASE("apply examples") {
  SparseVector e10 = basis_vector({1, 0});
  CHECK(Operator::laurent(s(2, 1)).apply(e10) == basis_vector({2, 0}));
  CHECK(Operator::toeplitz(s(2, 1) + cs(2, 1)).apply(e10) == basis_vector({2, 0}));
  CHECK(Operator::shift_y(2, 1).apply(e10) == basis_vector({2, 0}));
}

TEST_CASE("constant-function embedding") {
  for (int d : {2, 3}) {
    Tuple delta(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) delta[static_cast<std::size_t>(k)] = d - 1 - k;
    for (const auto& [name, phi] : battery::symbols(d)) {
      SparseVector got = Operator::toeplitz(phi).apply(basis_vector(Partition(delta)));
      // phi * a_delta, read back in the a_q basis through the leading monomials
      SparseVector want;
      for (const auto& [m, c] : oracle::mul(oracle::expand(phi), oracle::antisym(delta))) {
        if (!std::is_sorted(m.begin(), m.end(), std::greater<>()) || std::adjacent_find(m.begin(), m.end()) != m.end())
          continue;
        if (m.back() >= 0) want[Partition(m)] = c;
      }
      CHECK_MESSAGE(got == want, name);
    }
  }
}

TEST_CASE("assemble examples") {
  Window w = Window::enumerate(2, 2, 0);
  MatrixWindow m = assemble(Operator::toeplitz(s(2, 1)), w);
  CHECK(m.n_rows() == 3);
  REQUIRE(m.entries.size() == 2);
  for (const auto& [ij, v] : m.entries) CHECK(v == Scalar(1));
  CHECK(assemble(Operator::toeplitz(Symbol::zero(2)), w).is_zero());
  MatrixWindow r = assemble(Operator::finite_rank(2, {{{1, 0}, {1, 0}, Scalar(1)}}), w);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.at(0, 0) == Scalar(1));
  CHECK_THROWS_AS(assemble(Operator::toeplitz(s(2, 1)), Window::enumerate(2, 2, -1)), DomainError);
}

TEST_CASE("adjoint symmetry") {
  Window w = Window::enumerate(2, 6, 0);
  for (const auto& [name, phi] : battery::symbols(2)) {
    Operator t = Operator::toeplitz(phi), tc = Operator::toeplitz(conjugate(phi));
    for (const auto& p : w.members())
      for (const auto& q : w.members()) CHECK(t.entry(q, p) == tc.entry(p, q).conj());
  }
}

TEST_CASE("Laurent coordinate identity L_{s_j}^* L_p = L_{s_{d-j}}") {
  for (int d : {2, 3}) {
    Window w = Window::enumerate(d, 5, -3);
    Operator lp = Operator::laurent(s(d, d));
    for (int j = 1; j <= d - 1; ++j) {
      MatrixWindow lhs = assemble(Operator::laurent(s(d, j)).adjoint() * lp, w);
      CHECK(subtract(lhs, assemble(Operator::laurent(s(d, d - j)), w)).is_zero());
    }
  }
}

TEST_CASE("Brown-Halmos residuals") {
  for (int d : {2, 3}) {
    Window w = Window::enumerate(d, d == 2 ? 7 : 5, 0);
    for (const auto& [name, phi] : battery::symbols(d)) CHECK_MESSAGE(all_zero(bh_residuals(Operator::toeplitz(phi), w)), name);
  }
  Window w = Window::enumerate(2, 5, 0);
  auto shift = bh_residuals(Operator::shift_y(2, 1), w);
  CHECK(shift.back().is_zero());
  CHECK(!shift.front().is_zero());
  CHECK(Operator::shift_y(2, 1).d() == 2);
  CHECK(shift.front().at(*w.index_of({2, 1}), *w.index_of({1, 0})) == Scalar(1));

  auto rank = bh_residuals(Operator::finite_rank(2, {{{1, 0}, {1, 0}, Scalar(1)}}, Space::Analytic), w);
  CHECK(rank.back().at(0, 0) == Scalar(-1));
  CHECK_THROWS_AS(bh_residuals(Operator::toeplitz(s(2, 1)), Window::enumerate(2, 3, -1)), DomainError);
}

TEST_CASE("Y_j commutes with no T_{s_i}") {
  for (int d : {2, 3}) {
    Window w = Window::enumerate(d, d + 3, 0);
    for (int j = 1; j <= d - 1; ++j) {
      Operator y = Operator::shift_y(d, j);
      CHECK(bh_residuals(y, w).back().is_zero());
      for (int i = 1; i <= d - 1; ++i) CHECK(!assemble(commutator(y, Operator::toeplitz(s(d, i))), w).is_zero());
    }
  }
}

TEST_CASE("recover_symbol") {
  Symbol phi = Scalar(2) * Symbol::unit(2) + s(2, 1);
  Symbol got = recover_symbol(Operator::toeplitz(phi), 1);
  CHECK(got == phi);
  CHECK(got.coefficient(OrbitRep{0, 0}) == Scalar(2));
  CHECK(recover_symbol(Operator::toeplitz(Symbol::zero(2)), 1).empty());
  CHECK(recover_symbol(Operator::toeplitz(cs(2, 2)), 1) == Symbol(2, {{OrbitRep{-1, -1}, Scalar(1)}}));
  for (int d : {2, 3})
    for (const auto& [name, f] : battery::symbols(d))
      CHECK_MESSAGE(recover_symbol(Operator::toeplitz(f), f.height()) == f, name);
  CHECK_THROWS_AS(recover_symbol(Operator::shift_y(2, 1), 1), NotToeplitzError);
  // symbol outside the bound
  CHECK_THROWS_AS(recover_symbol(Operator::toeplitz(s(2, 1) * s(2, 1) * s(2, 1)), 1), NotToeplitzError);
}

TEST_CASE("product defect") {
  Window w = Window::enumerate(2, 6, 0);
  auto syms = battery::symbols(2);
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b) CHECK(product_defect(syms[a].phi, syms[b].phi, w).is_zero());
  CHECK(product_defect(Symbol::unit(2), Symbol::unit(2), w).is_zero());
  // without the Hankel term the defect of (s_1, conj s_1) is visible
  Symbol phi = s(2, 1), psi = cs(2, 1);
  MatrixWindow partial = assemble(Operator::toeplitz(phi) * Operator::toeplitz(psi) - Operator::toeplitz(phi * psi), w);
  CHECK(partial.at(0, 0) == Scalar(-1));
  // analytic pair: T_phi T_psi = T_{phi psi}
  CHECK(assemble(Operator::toeplitz(s(2, 2)) * Operator::toeplitz(phi) - Operator::toeplitz(s(2, 2) * phi), w).is_zero());
}

TEST_CASE("classify_analytic") {
  Window w = Window::enumerate(2, 6, 0);
  Report a = classify_analytic(s(2, 1), w);
  CHECK(a.verdict);
  CHECK(a.info.at("is_analytic") == "true");
  CHECK(a.get("commutator_p").note == "zero");

  Symbol phi = s(2, 1) + cs(2, 1);
  Report b = classify_analytic(phi, w);
  CHECK(b.verdict);
  CHECK(b.info.at("is_analytic") == "false");
  CHECK(b.get("commutator_p").note == "nonzero");
  CHECK(!b.witnesses.empty());
  Operator tp = Operator::toeplitz(s(2, 2)), tf = Operator::toeplitz(phi);
  SparseVector diff = commutator(tf, tp).column({1, 0});
  CHECK(diff == basis_vector({2, 0}));

  CHECK(classify_analytic(Symbol::unit(2), w).verdict);
  CHECK_THROWS_AS(classify_analytic(s(2, 1) * s(2, 1) * s(2, 1), Window::enumerate(2, 4, 0)), MarginError);
  for (int d : {2, 3})
    for (const auto& [name, f] : battery::symbols(d)) {
      Report r = classify_analytic(f, Window::enumerate(d, f.height() + d + 1, 0));
      CHECK_MESSAGE(r.verdict, name);
      CHECK((r.info.at("is_analytic") == "true") == is_analytic(f));
    }
}

TEST_CASE("norm_estimate") {
  MatrixWindow id = assemble(Operator::identity(2), Window::enumerate(2, 3, 0));
  REQUIRE(id.n_rows() == 6);
  CHECK(norm_estimate(id, 50, 42) == doctest::Approx(1.0).epsilon(1e-9));
  Window w2 = Window::enumerate(2, 2, 0);
  CHECK(norm_estimate(assemble(Operator::toeplitz(s(2, 1)), w2), 200, 42) == doctest::Approx(1.0).epsilon(1e-6));
  MatrixWindow big = assemble(Operator::toeplitz(s(2, 1)), Window::enumerate(2, 20, 0));
  double lo = norm_estimate(big, 10, 7), hi = norm_estimate(big, 3000, 7);
  CHECK(lo <= hi);
  CHECK(hi >= 1.9);
  CHECK(norm_estimate(big, 3000, 7) == hi);
  CHECK_THROWS_AS(norm_estimate(big, 0, 7), DomainError);
}

TEST_CASE("lift_verify") {
  std::vector<Window> ws{Window::enumerate(2, 4, -4), Window::enumerate(2, 8, -8), Window::enumerate(2, 16, -16)};
  Report r = lift_verify(s(2, 1), ws);
  CHECK(r.verdict);
  REQUIRE(r.norms.size() == 6);
  CHECK(r.norms[0] < r.norms[4]);
  CHECK(r.values.at("sup_sampled") == doctest::Approx(2.0).epsilon(1e-3));

  Report u = lift_verify(Symbol::unit(2), {Window::enumerate(2, 4, 0)});
  CHECK(u.verdict);
  for (double n : u.norms) CHECK(n == doctest::Approx(1.0).epsilon(1e-12));

  Report p = lift_verify(s(2, 2), {Window::enumerate(2, 6, 0)});
  CHECK(p.norms[0] == doctest::Approx(1.0).epsilon(1e-9));
}
