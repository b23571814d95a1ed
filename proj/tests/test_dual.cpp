#include <doctest.h>

#include "battery.hpp"
#include "symtoep/dual.hpp"
#include "symtoep/error.hpp"

using namespace symtoep;

namespace {

Symbol cs(int d, int i) { return conjugate(Symbol::elementary(d, i)); }

bool all_zero(const std::vector<MatrixWindow>& ms) {
  for (const auto& m : ms)
    if (!m.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("dual_window") {
  Window w = dual_window(2, 3, -3);
  CHECK(!w.empty());
  for (const auto& p : w.members()) CHECK(p.bottom() <= -1);
  CHECK_THROWS_AS(dual_window(2, 3, 0), DomainError);
}

TEST_CASE("dual_entry") {
  CHECK(dual_entry(cs(2, 2), {-1, -2}, {0, -1}) == Scalar(1));
  CHECK(dual_entry(Symbol::unit(2), {0, -1}, {0, -1}) == Scalar(1));
  CHECK_THROWS_AS(dual_entry(Symbol::elementary(2, 2), {1, 0}, {0, -1}), DomainError);
  Window w = dual_window(3, 3, -4);
  for (const auto& [name, phi] : battery::symbols(3)) {
    Operator lau = Operator::laurent(phi);
    for (const auto& p : w.members())
      for (const auto& q : w.members()) CHECK(dual_entry(phi, q, p) == lau.entry(q, p));
  }
}

TEST_CASE("dual Brown-Halmos residuals") {
  for (int d : {2, 3}) {
    Window w = dual_window(d, 3, d == 2 ? -6 : -4);
    for (const auto& [name, phi] : battery::symbols(d))
      CHECK_MESSAGE(all_zero(dual_bh_residuals(Operator::dual_toeplitz(phi), w)), name);
  }
  Window w = dual_window(2, 2, -5);
  Operator k = Operator::finite_rank(2, {{{0, -1}, {0, -1}, Scalar(1)}}, Space::NonAnalytic);
  auto res = dual_bh_residuals(k, w);
  CHECK(!res.back().is_zero());
  CHECK(res.back().at(*w.index_of({0, -1}), *w.index_of({0, -1})) == Scalar(-1));
}

TEST_CASE("conjugate coordinate identity DT_{conj s_j}^* DT_{conj p} = DT_{conj s_{d-j}}") {
  for (int d : {2, 3}) {
    Window w = dual_window(d, 2, -5);
    auto tuple = conjugate_coordinate_tuple(d);
    for (int j = 1; j <= d - 1; ++j) {
      MatrixWindow lhs = assemble(tuple[static_cast<std::size_t>(j - 1)].adjoint() * tuple.back(), w);
      CHECK(subtract(lhs, assemble(tuple[static_cast<std::size_t>(d - j - 1)], w)).is_zero());
    }
  }
}

TEST_CASE("block decomposition") {
  Report a = block_decomposition_check(Symbol::elementary(2, 1), Window::enumerate(2, 4, -3));
  CHECK(a.verdict);
  Report b = block_decomposition_check(cs(2, 2), Window::enumerate(2, 4, -3));
  CHECK(b.verdict);
  CHECK(b.values.at("nonzeros_H") > 0);
  Report u = block_decomposition_check(Symbol::unit(2), Window::enumerate(2, 3, -2));
  CHECK(u.verdict);
  CHECK(u.values.at("nonzeros_H") == 0);
  CHECK(u.values.at("nonzeros_H*") == 0);
  for (int d : {2, 3})
    for (const auto& [name, phi] : battery::symbols(d)) {
      int m = phi.height() + 2;
      CHECK_MESSAGE(block_decomposition_check(phi, Window::enumerate(d, d - 1 + m, -m)).verdict, name);
    }
  CHECK_THROWS_AS(block_decomposition_check(Symbol::elementary(2, 1), Window::enumerate(2, 4, 0)), MarginError);
}
