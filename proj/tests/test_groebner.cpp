#include <doctest.h>

#include <random>

#include "sstrig/groebner.hpp"

using namespace sstrig;

namespace {

MPoly rand_poly(const Field* F, int n, int nterms, int maxdeg, std::mt19937& rng) {
  std::vector<Term> t;
  std::uniform_int_distribution<std::uint32_t> cd(1, F->q() - 1);
  for (int i = 0; i < nterms; ++i) {
    Mono m;
    int budget = std::uniform_int_distribution<int>(0, maxdeg)(rng);
    for (int k = 0; k < budget; ++k) {
      int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      m.e[v]++;
      m.deg++;
    }
    t.push_back({m, Fe{cd(rng)}});
  }
  return MPoly::from_terms(F, n, t);
}

std::vector<std::vector<Fe>> brute_force(const PolyList& sys, const Field* F, int n) {
  std::vector<std::vector<Fe>> out;
  std::vector<Fe> pt(n, Fe{0});
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= F->q();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      pt[i] = Fe{static_cast<std::uint32_t>(r % F->q())};
      r /= F->q();
    }
    bool ok = true;
    for (const auto& g : sys)
      if (evaluate(g, pt).v) {
        ok = false;
        break;
      }
    if (ok) out.push_back(pt);
  }
  return out;
}

}  // namespace

TEST_CASE("trivial bases") {
  auto K = Field::make(7, 1);
  auto x = MPoly::variable(K.get(), 2, 0), y = MPoly::variable(K.get(), 2, 1);
  auto G = groebner_basis({x, y});
  REQUIRE(G.size() == 2);
  CHECK(G[0] == y);
  CHECK(G[1] == x);
  auto one = MPoly::constant(K.get(), 2, Fe{1});
  CHECK(is_unit_ideal(groebner_basis({x, one})));
  CHECK(normal_form(x * y + x, {x}).is_zero());
  CHECK(normal_form(one, {x, y}) == one);
}

TEST_CASE("bases satisfy the S-pair criterion") {
  std::mt19937 rng(41);
  auto K = Field::make(7, 1);
  for (int i = 0; i < 60; ++i) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    PolyList gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rand_poly(K.get(), n, 3, 3, rng));
    auto G = groebner_basis(gens);
    CHECK(is_groebner(G));
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
    // membership of random combinations
    MPoly comb(K.get(), n);
    for (const auto& g : gens) comb = comb + rand_poly(K.get(), n, 2, 2, rng) * g;
    CHECK(normal_form(comb, G).is_zero());
  }
}

TEST_CASE("solve_over_fq small examples") {
  auto K = Field::make(11, 1);
  auto a = MPoly::variable(K.get(), 1, 0);
  auto one = MPoly::constant(K.get(), 1, Fe{1});
  auto s = solve_over_fq({a * a - one}, K.get());
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0][0] == Fe{1});
  CHECK(s.points[1][0] == Fe{10});
  auto pin = solve_over_fq({a - MPoly::constant(K.get(), 1, Fe{7})}, K.get());
  REQUIRE(pin.points.size() == 1);
  CHECK(pin.points[0][0] == Fe{7});
  CHECK(solve_over_fq({a * a - MPoly::constant(K.get(), 1, Fe{2})}, K.get()).points.empty());
}

TEST_CASE("solve_over_fq agrees with exhaustive scan over F_7^3") {
  std::mt19937 rng(43);
  auto K = Field::make(7, 1);
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    PolyList sys;
    for (int k = 0; k < m; ++k) sys.push_back(rand_poly(K.get(), n, 3, 3, rng));
    auto got = solve_over_fq(sys, K.get());
    CHECK(got.complete);
    CHECK(got.points == brute_force(sys, K.get(), n));
  }
}

TEST_CASE("solving over an extension field") {
  auto K = Field::make(11, 1);
  auto E = K->adjoin_sqrt(Fe{2});
  auto a = MPoly::variable(K.get(), 1, 0);
  auto two = MPoly::constant(K.get(), 1, Fe{2});
  auto s = solve_over_fq({a * a - two}, E.get());
  CHECK(s.points.size() == 2);
}

TEST_CASE("radical membership") {
  auto K = Field::make(11, 1);
  auto x = MPoly::variable(K.get(), 2, 0), y = MPoly::variable(K.get(), 2, 1);
  CHECK(radical_vanishes(x, {x * x}));
  CHECK_FALSE(radical_vanishes(x, {y}));
  // Jacobian ideal of xy + x^5 + y^5 in the chart z = 1
  auto f = parse_poly(K.get(), "x*y + x^5 + y^5", {"x", "y"});
  PolyList J = {f, derivative(f, 0), derivative(f, 1)};
  CHECK(radical_vanishes(x, J));
  CHECK(radical_vanishes(y, J));
}

TEST_CASE("variety size over the closure") {
  auto K = Field::make(11, 1);
  std::vector<std::string> nm = {"x", "y"};
  // x^2 - 2 has two conjugate roots, doubled multiplicity must not count twice
  CHECK(variety_size({parse_poly(K.get(), "(x^2-2)^2", nm), parse_poly(K.get(), "y", nm)}) == 2);
  CHECK(variety_size({parse_poly(K.get(), "x^3 - 1", nm), parse_poly(K.get(), "y^2 - x", nm)}) == 6);
  CHECK(variety_size({parse_poly(K.get(), "x^11 - x", nm), parse_poly(K.get(), "y^11", nm)}) == 11);
  CHECK(variety_size({parse_poly(K.get(), "x - 1", nm), parse_poly(K.get(), "x - 2", nm)}) == 0);
  CHECK_FALSE(variety_size({parse_poly(K.get(), "x*y", nm)}).has_value());
  UPoly a = {Fe{1}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{0}, Fe{1}};  // x^11 + 1 = (x+1)^11
  CHECK(upoly_squarefree(*K, a) == UPoly{Fe{1}, Fe{1}});
}

TEST_CASE("budget exhaustion is reported") {
  auto K = Field::make(7, 1);
  std::mt19937 rng(47);
  PolyList gens;
  for (int k = 0; k < 4; ++k) gens.push_back(rand_poly(K.get(), 4, 5, 4, rng));
  GbBudget tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(gens, tiny), BudgetExceeded);
}
