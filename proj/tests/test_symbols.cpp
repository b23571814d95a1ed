#include <doctest.h>

#include <random>

#include "battery.hpp"
#include "oracles.hpp"
#include "symtoep/error.hpp"
#include "symtoep/symbol.hpp"

using namespace symtoep;

namespace {

using C = std::complex<double>;

Symbol random_symbol(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> expo(-2, 2), coef(-3, 3), count(1, 4);
  Symbol phi(d);
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Tuple m(static_cast<std::size_t>(d));
    for (auto& x : m) x = expo(rng);
    phi.accumulate(OrbitRep::of(m), Scalar(mpq_class(coef(rng), 2), mpq_class(coef(rng), 3)));
  }
  return phi;
}

std::vector<C> random_torus(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  std::vector<C> z;
  for (int k = 0; k < d; ++k) z.push_back(std::polar(1.0, ang(rng)));
  return z;
}

// Direct sum over the expanded lattice points.
C brute_eval(const Symbol& phi, const std::vector<C>& z) {
  C sum = 0.0;
  for (const auto& [m, c] : oracle::expand(phi)) {
    C term = c.to_complex();
    for (std::size_t k = 0; k < m.size(); ++k) term *= std::pow(z[k], m[k]);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("elementary symbols") {
  CHECK(Symbol::elementary(2, 1) == Symbol(2, {{OrbitRep{1, 0}, Scalar(1)}}));
  CHECK(Symbol::elementary(2, 2) == Symbol(2, {{OrbitRep{1, 1}, Scalar(1)}}));
  CHECK(Symbol::elementary(3, 2) == Symbol(3, {{OrbitRep{1, 1, 0}, Scalar(1)}}));
  CHECK_THROWS_AS(Symbol::elementary(2, 0), DomainError);
  CHECK_THROWS_AS(Symbol::elementary(2, 3), DomainError);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Symbol::elementary(2, 1)) == Symbol(2, {{OrbitRep{0, -1}, Scalar(1)}}));
  CHECK(conjugate(Symbol::elementary(2, 2)) == Symbol(2, {{OrbitRep{-1, -1}, Scalar(1)}}));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    Symbol phi = random_symbol(rng, 2 + k % 2);
    CHECK(conjugate(conjugate(phi)) == phi);
    auto z = random_torus(rng, phi.d());
    CHECK(std::abs(evaluate(conjugate(phi), z) - std::conj(evaluate(phi, z))) < 1e-9);
  }
}

TEST_CASE("multiply") {
  Symbol s1 = Symbol::elementary(2, 1);
  CHECK(s1 * s1 == Symbol(2, {{OrbitRep{2, 0}, Scalar(1)}, {OrbitRep{1, 1}, Scalar(2)}}));
  CHECK(s1 * Symbol::unit(2) == s1);
  CHECK(s1 * conjugate(s1) == Symbol(2, {{OrbitRep{0, 0}, Scalar(2)}, {OrbitRep{1, -1}, Scalar(1)}}));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    int d = 2 + k % 2;
    Symbol a = random_symbol(rng, d), b = random_symbol(rng, d), c = random_symbol(rng, d);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    // against brute-force polynomial multiplication
    Symbol want(d);
    for (const auto& [m, x] : oracle::mul(oracle::expand(a), oracle::expand(b)))
      if (std::is_sorted(m.begin(), m.end(), std::greater<>())) want.accumulate(OrbitRep(m), x);
    CHECK(a * b == want);
  }
  CHECK_THROWS_AS(s1 * Symbol::unit(3), DimensionError);
}

TEST_CASE("pointwise product identity") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    int d = 2 + k % 2;
    Symbol a = random_symbol(rng, d), b = random_symbol(rng, d);
    auto z = random_torus(rng, d);
    CHECK(std::abs(evaluate(a * b, z) - evaluate(a, z) * evaluate(b, z)) < 1e-9);
    CHECK(std::abs(evaluate(a, z) - brute_eval(a, z)) < 1e-9);
  }
}

TEST_CASE("combine") {
  Symbol s1 = Symbol::elementary(2, 1);
  CHECK(combine(1, s1, 1, conjugate(s1)) == Symbol(2, {{OrbitRep{1, 0}, Scalar(1)}, {OrbitRep{0, -1}, Scalar(1)}}));
  CHECK(combine(1, s1, -1, s1).empty());
  CHECK(combine(2, Symbol::unit(2), 1, s1) == Symbol(2, {{OrbitRep{0, 0}, Scalar(2)}, {OrbitRep{1, 0}, Scalar(1)}}));
}

TEST_CASE("evaluate") {
  std::vector<C> ones{1.0, 1.0};
  CHECK(std::abs(evaluate(Symbol::elementary(2, 1), ones) - C(2.0)) < 1e-12);
  std::vector<C> pm{1.0, -1.0};
  CHECK(std::abs(evaluate(Symbol::elementary(2, 2), pm) - C(-1.0)) < 1e-12);
  Symbol s1 = Symbol::elementary(2, 1);
  std::vector<C> one_i{1.0, C(0.0, 1.0)};
  CHECK(std::abs(evaluate(s1 * conjugate(s1), one_i) - C(2.0)) < 1e-12);
  std::vector<C> off{1.0, 0.5};
  CHECK_THROWS_AS(evaluate(s1, off), DomainError);
  std::vector<C> short_z{1.0};
  CHECK_THROWS_AS(evaluate(s1, short_z), DimensionError);
}

TEST_CASE("sup_norm_sampled") {
  CHECK(sup_norm_sampled(Symbol::elementary(2, 1), 64) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(sup_norm_sampled(Symbol::zero(2), 16) == 0.0);
  CHECK(sup_norm_sampled(Symbol::unit(2), 16) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sup_norm_sampled(Symbol::unit(2), 1), DomainError);
  // nested grids only add points
  for (const auto& [name, phi] : battery::symbols(2)) {
    double prev = 0.0;
    for (int g : {4, 8, 16, 32}) {
      double v = sup_norm_sampled(phi, g);
      CHECK_MESSAGE(v >= prev - 1e-12, name);
      prev = v;
    }
  }
}

TEST_CASE("is_analytic") {
  CHECK(is_analytic(Symbol::elementary(2, 1)));
  CHECK(!is_analytic(conjugate(Symbol::elementary(2, 1))));
  CHECK(is_analytic(Symbol::zero(2)));
  auto syms = battery::symbols(3);
  for (const auto& a : syms)
    for (const auto& b : syms)
      if (is_analytic(a.phi) && is_analytic(b.phi)) CHECK(is_analytic(a.phi * b.phi));
}

TEST_CASE("rational parsing") {
  CHECK(Scalar::parse_rational("3/6") == mpq_class(1, 2));
  CHECK(Scalar::parse_rational("-0.25") == mpq_class(-1, 4));
  CHECK(Scalar::parse_rational("7") == mpq_class(7));
  CHECK_THROWS_AS(Scalar::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse_rational("abc"), ParseError);
  CHECK(to_string(Scalar(mpq_class(-1, 2))) == "-1/2");
}
