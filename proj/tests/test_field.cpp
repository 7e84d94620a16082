#include <doctest.h>

#include <random>
#include <set>

#include "sstrig/field.hpp"

using namespace sstrig;

namespace {

std::set<std::uint32_t> squares_mod(std::uint32_t p) {
  std::set<std::uint32_t> s;
  for (std::uint32_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

std::set<std::uint32_t> cubes_mod(std::uint32_t p) {
  std::set<std::uint32_t> s;
  for (std::uint32_t x = 1; x < p; ++x) s.insert(x * x * x % p);
  return s;
}

}  // namespace

TEST_CASE("prime field primitive elements") {
  CHECK(Field::make(11, 1)->zeta() == Fe{2});
  CHECK(Field::make(13, 1)->zeta() == Fe{2});
  CHECK(Field::make(7, 1)->zeta() == Fe{3});
}

TEST_CASE("F_49 with modulus t^2 - 6") {
  auto F = Field::make(7, 2);
  CHECK(F->mod_m1() == Fe{0});
  CHECK(F->mod_m0() == Fe{1});  // -6 mod 7
  Fe t = F->gen();
  CHECK(F->mul(t, t) == F->from_int(6));
  Fe z = F->parse("-3 - t");
  CHECK(F->zeta() == z);
  // order by exhaustive power scan
  Fe x = z;
  int k = 1;
  while (x != F->one()) {
    x = F->mul(x, z);
    ++k;
  }
  CHECK(k == 48);
  CHECK(F->str(z) == "4+6*t");
  CHECK(F->parse(F->str(z)) == z);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::prime(9), FieldError);
  CHECK_THROWS_AS(Field::prime(3), FieldError);
  CHECK_THROWS_AS(Field::quadratic(7, 0, 6), FieldError);  // t^2 + 6 = t^2 - 1
  CHECK_NOTHROW(Field::quadratic(7, 0, 1));
  auto F = Field::make(11, 1);
  CHECK_THROWS_AS(F->adjoin_sqrt(Fe{4}), FieldError);
  CHECK_THROWS_AS(F->inv(Fe{0}), FieldError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(5);
  std::vector<FieldPtr> fields = {Field::make(7, 1), Field::make(11, 1), Field::make(7, 2), Field::make(11, 2),
                                  Field::make(7, 2)->adjoin_sqrt(Field::make(7, 2)->zeta())};
  for (auto& F : fields) {
    std::uniform_int_distribution<std::uint32_t> d(0, F->q() - 1);
    for (int i = 0; i < 500; ++i) {
      Fe x{d(rng)}, y{d(rng)}, z{d(rng)};
      CHECK(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
      CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
      CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
      CHECK(F->add(x, F->neg(x)) == F->zero());
      if (x.v) CHECK(F->mul(x, F->inv(x)) == F->one());
      CHECK(F->parse(F->str(x)) == x);
    }
    Fe z = F->zeta();
    CHECK(F->pow(z, F->q() - 1) == F->one());
    for (auto r : prime_factors(F->q() - 1)) CHECK(F->pow(z, (F->q() - 1) / r) != F->one());
  }
}

TEST_CASE("subfield embedding and conjugation") {
  auto K = Field::make(11, 1);
  auto E = K->adjoin_sqrt(Fe{2});
  for (std::uint32_t a = 0; a < 11; ++a)
    for (std::uint32_t b = 0; b < 11; ++b) {
      CHECK(E->add(Fe{a}, Fe{b}) == K->add(Fe{a}, Fe{b}));
      CHECK(E->mul(Fe{a}, Fe{b}) == K->mul(Fe{a}, Fe{b}));
    }
  Fe s = E->gen();
  CHECK(E->conj(s) == E->neg(s));
  CHECK(E->frobenius(s) == E->neg(s));
  CHECK(E->contains(*K));
  CHECK_FALSE(K->contains(*E));
}

TEST_CASE("nonsquare") {
  CHECK(nonsquare(*Field::make(11, 1)) == Fe{2});
  CHECK(nonsquare(*Field::make(13, 1)) == Fe{2});
  auto F7 = Field::make(7, 1);
  CHECK(nonsquare(*F7) == Fe{3});
  auto sq = squares_mod(7);
  CHECK(sq == std::set<std::uint32_t>{1, 2, 4});
  auto F49 = Field::make(7, 2);
  CHECK(nonsquare(*F49) == F49->zeta());
  for (auto F : {F7, Field::make(11, 1), Field::make(13, 1), F49})
    CHECK(F->pow(nonsquare(*F), (F->q() - 1) / 2) == F->neg(F->one()));
}

TEST_CASE("cube class representatives") {
  auto F11 = Field::make(11, 1);
  CHECK(cube_class_reps(*F11) == std::vector<Fe>{Fe{1}});
  auto F13 = Field::make(13, 1);
  auto reps = cube_class_reps(*F13);
  CHECK(reps == std::vector<Fe>{Fe{1}, Fe{2}, Fe{4}});
  auto cubes = cubes_mod(13);
  for (std::uint32_t u = 1; u < 13; ++u) {
    int hits = 0;
    for (Fe r : reps) {
      std::uint32_t quotient = F13->div(Fe{u}, r).v;
      hits += cubes.count(quotient);
    }
    CHECK(hits == 1);
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK(cubes.count(F13->div(reps[i], reps[j]).v) == 0);
  auto F49 = Field::make(7, 2);
  auto r49 = cube_class_reps(*F49);
  REQUIRE(r49.size() == 3);
  CHECK(r49[1] == F49->zeta());
}

TEST_CASE("non-split b representatives") {
  CHECK(nonsplit_b_reps(*Field::make(11, 1)) == std::vector<Fe>{Fe{0}, Fe{6}, Fe{10}});
  CHECK(nonsplit_b_reps(*Field::make(13, 1)) == std::vector<Fe>{Fe{0}});
  CHECK(nonsplit_b_reps(*Field::make(7, 2)) == std::vector<Fe>{Fe{0}});
}

TEST_CASE("non-split b representatives meet every orbit once") {
  // Orbits of K^x (E^x)^3 on E^x, by closure under multiplication.
  for (std::uint32_t p : {5u, 11u, 17u, 23u, 29u}) {
    auto K = Field::make(p, 1);
    Fe eps = nonsquare(*K);
    auto E = K->adjoin_sqrt(eps);
    std::vector<Fe> gens;
    for (std::uint32_t a = 1; a < p; ++a) gens.push_back(Fe{a});
    for (std::uint32_t i = 1; i < E->q(); ++i) gens.push_back(E->pow(Fe{i}, 3));
    std::vector<int> orbit(E->q(), -1);
    int norbits = 0;
    std::vector<int> sizes;
    for (std::uint32_t i = 1; i < E->q(); ++i) {
      if (orbit[i] >= 0) continue;
      std::vector<std::uint32_t> stack{i};
      orbit[i] = norbits;
      int size = 0;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        ++size;
        for (Fe g : gens) {
          auto y = E->mul(Fe{x}, g).v;
          if (orbit[y] < 0) {
            orbit[y] = norbits;
            stack.push_back(y);
          }
        }
      }
      sizes.push_back(size);
      ++norbits;
    }
    auto reps = nonsplit_b_reps(*K);
    INFO("p = " << p);
    CHECK(norbits == 3);
    CHECK(int(reps.size()) == norbits);
    for (int s : sizes) CHECK(s == sizes[0]);
    std::set<int> hit;
    for (Fe b : reps) hit.insert(orbit[E->from_coords(K->one(), b).v]);
    CHECK(int(hit.size()) == norbits);
  }
}

TEST_CASE("sqrt of eps") {
  auto F11 = Field::make(11, 1);
  auto r = sqrt_eps(F11, Fe{2});
  CHECK(r.ext->mul(r.root, r.root) == Fe{2});
  CHECK(r.ext->mul(r.ext->inv(r.root), r.root) == r.ext->one());
  auto F7 = Field::make(7, 1);
  auto r7 = sqrt_eps(F7, Fe{6});
  CHECK(r7.ext->same(*Field::make(7, 2)));
  CHECK(r7.root == r7.ext->gen());
  CHECK(r7.ext->str(r7.root) == "t");
  CHECK_THROWS_AS(sqrt_eps(F11, Fe{3}), FieldError);
}
