#include <doctest.h>

#include <random>

#include "sstrig/mpoly.hpp"

using namespace sstrig;

namespace {

MPoly random_poly(const Field* F, int nvars, int nterms, int maxexp, std::mt19937& rng) {
  std::uniform_int_distribution<int> ed(0, maxexp);
  std::uniform_int_distribution<std::uint32_t> cd(1, F->q() - 1);
  std::vector<Term> t;
  for (int i = 0; i < nterms; ++i) {
    Mono m;
    for (int v = 0; v < nvars; ++v) {
      m.e[v] = static_cast<std::uint16_t>(ed(rng));
      m.deg += m.e[v];
    }
    t.push_back({m, Fe{cd(rng)}});
  }
  return MPoly::from_terms(F, nvars, t);
}

MPoly random_form(const Field* F, int degree, int nterms, std::mt19937& rng) {
  std::uniform_int_distribution<int> ed(0, degree);
  std::uniform_int_distribution<std::uint32_t> cd(1, F->q() - 1);
  std::vector<Term> t;
  for (int i = 0; i < nterms; ++i) {
    int a = ed(rng);
    int b = std::uniform_int_distribution<int>(0, degree - a)(rng);
    t.push_back({Mono::of({a, b, degree - a - b}), Fe{cd(rng)}});
  }
  return MPoly::from_terms(F, 3, t);
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto F = Field::make(11, 1);
  auto x = MPoly::variable(F.get(), 3, 0), y = MPoly::variable(F.get(), 3, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x + MPoly(F.get(), 3) == x);
  CHECK(pow(x + y, 2) == x * x + scale(x * y, Fe{2}) + y * y);
  CHECK(pow(x, 0).is_one());
  CHECK(pow(x + y, 1) == x + y);
  CHECK((x - x).is_zero());
  CHECK(x.coeff(Mono::var(0)) == Fe{1});
  CHECK((x + y).coeff(Mono::var(2)) == Fe{0});
  auto z4 = MPoly::variable(F.get(), 4, 0);
  CHECK_THROWS_AS(x + z4, PolyError);
}

TEST_CASE("grevlex order") {
  // x > y > z, and x^5 > xyz^3 in degree 5.
  CHECK(grevlex_greater(Mono::var(0), Mono::var(1)));
  CHECK(grevlex_greater(Mono::var(1), Mono::var(2)));
  CHECK(grevlex_greater(Mono::of({5, 0, 0}), Mono::of({1, 1, 3})));
  CHECK(grevlex_greater(Mono::of({0, 0, 2}), Mono::of({1, 0, 0})));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 4);
  for (int i = 0; i < 2000; ++i) {
    Mono a, b, c;
    for (int v = 0; v < 5; ++v) {
      a.e[v] = d(rng), b.e[v] = d(rng), c.e[v] = d(rng);
      a.deg += a.e[v], b.deg += b.e[v], c.deg += c.e[v];
    }
    int ab = grevlex_cmp(a, b);
    CHECK(ab == -grevlex_cmp(b, a));
    if (ab != 0) CHECK(grevlex_cmp(mono_mul(a, c), mono_mul(b, c)) == ab);
    else CHECK(a == b);
    if (ab > 0 && grevlex_cmp(b, c) > 0) CHECK(grevlex_cmp(a, c) > 0);
  }
}

TEST_CASE("power matches naive product") {
  std::mt19937 rng(11);
  auto F = Field::make(11, 1);
  auto F49 = Field::make(7, 2);
  for (int i = 0; i < 200; ++i) {
    const Field* K = i % 2 ? F.get() : F49.get();
    int nt = std::uniform_int_distribution<int>(1, 8)(rng);
    unsigned e = std::uniform_int_distribution<unsigned>(0, 12)(rng);
    auto f = random_poly(K, 3, nt, 3, rng);
    CHECK(pow(f, e) == pow_naive(f, e));
  }
}

TEST_CASE("tenth power of the split family") {
  auto F = Field::make(11, 1);
  auto f = parse_form(F.get(), "x*y*z^3 + x^5 + y^5");
  auto h = pow(f, 10);
  auto naive = pow_naive(f, 10);
  CHECK(h == naive);
  CHECK(h.is_homogeneous(50));
  const int tr[5][3] = {{3, 1, 1}, {1, 3, 1}, {2, 2, 1}, {2, 1, 2}, {1, 2, 2}};
  for (auto& l : tr)
    for (auto& m : tr) {
      Mono t = Mono::of({11 * l[0] - m[0], 11 * l[1] - m[1], 11 * l[2] - m[2]});
      CHECK(t.deg == 50);
      CHECK(h.coeff(t) == naive.coeff(t));
    }
  // every z-exponent in the expansion is a multiple of 3
  for (const auto& t : h.terms()) CHECK(t.m.e[2] % 3 == 0);
  CHECK(h.coeff(Mono::of({30, 10, 10})) == Fe{0});
}

TEST_CASE("linear substitution to XY") {
  auto K = Field::make(11, 1);
  auto E = K->adjoin_sqrt(Fe{2});
  Fe s = E->gen();
  auto X = MPoly::variable(E.get(), 3, 0), Y = MPoly::variable(E.get(), 3, 1), Z = MPoly::variable(E.get(), 3, 2);
  Fe half = E->inv(E->from_int(2));
  Fe c = E->inv(E->mul(E->from_int(-2), s));
  std::vector<MPoly> img = {scale(X + Y, half), scale(X - Y, c), Z};
  auto f = parse_form(K.get(), "x^2 - 2*y^2");
  CHECK(substitute_linear(f, img) == X * Y);
  auto id = std::vector<MPoly>{MPoly::variable(K.get(), 3, 0), MPoly::variable(K.get(), 3, 1),
                               MPoly::variable(K.get(), 3, 2)};
  auto g = parse_form(K.get(), "x*y*z^3 + 3*x^5 + y^5 + 7*x^2*y*z^2");
  CHECK(substitute_linear(g, id) == g);
  CHECK_THROWS_AS(substitute_linear(g, {X * X, Y, Z}), PolyError);
}

TEST_CASE("substitution is a ring map and keeps homogeneity") {
  std::mt19937 rng(17);
  auto K = Field::make(11, 1);
  auto E = K->adjoin_sqrt(Fe{2});
  for (int i = 0; i < 50; ++i) {
    auto f = random_form(K.get(), 3, 4, rng), g = random_form(K.get(), 2, 3, rng);
    std::vector<MPoly> img;
    for (int v = 0; v < 3; ++v) img.push_back(embed(random_form(K.get(), 1, 3, rng), E.get()));
    auto sf = substitute_linear(f, img), sg = substitute_linear(g, img);
    CHECK(substitute_linear(f * g, img) == sf * sg);
    CHECK(substitute_linear(f + embed(f, K.get()), img) == sf + sf);
    CHECK(sf.is_homogeneous(3));
    CHECK(pow(f, 4).is_homogeneous(12));
  }
}

TEST_CASE("translation z -> z + ax + by clears the x^2yz^2 and xy^2z^2 terms") {
  std::mt19937 rng(23);
  auto K = Field::make(11, 1);
  const Field* F = K.get();
  for (int i = 0; i < 20; ++i) {
    auto tail = random_form(F, 5, 6, rng);
    // drop z^3-and-higher parts from the random tail to keep the shape
    std::vector<Term> keep;
    for (auto& t : tail.terms())
      if (t.m.e[2] <= 2) keep.push_back(t);
    auto f = parse_form(F, "x*y*z^3") + MPoly::from_terms(F, 3, keep);
    Fe d = f.coeff(Mono::of({2, 1, 2})), e = f.coeff(Mono::of({1, 2, 2}));
    Fe third = F->inv(F->from_int(3));
    Fe a = F->neg(F->mul(d, third)), b = F->neg(F->mul(e, third));
    auto x = MPoly::variable(F, 3, 0), y = MPoly::variable(F, 3, 1), z = MPoly::variable(F, 3, 2);
    auto g = substitute_linear(f, {x, y, z + scale(x, a) + scale(y, b)});
    CHECK(g.coeff(Mono::of({2, 1, 2})) == Fe{0});
    CHECK(g.coeff(Mono::of({1, 2, 2})) == Fe{0});
    CHECK(g.coeff(Mono::of({1, 1, 3})) == Fe{1});
  }
}

TEST_CASE("freshman's dream") {
  std::mt19937 rng(29);
  for (auto K : {Field::make(7, 1), Field::make(7, 2), Field::make(11, 1)}) {
    for (int i = 0; i < 10; ++i) {
      auto f = random_poly(K.get(), 3, 3, 2, rng), g = random_poly(K.get(), 3, 3, 2, rng);
      unsigned p = K->p();
      CHECK(pow(f + g, p) == pow(f, p) + pow(g, p));
    }
  }
}

TEST_CASE("text grammar round trip") {
  std::mt19937 rng(31);
  auto K = Field::make(11, 1);
  auto F49 = Field::make(7, 2);
  auto E = K->adjoin_sqrt(Fe{2});
  auto names = default_var_names(14);
  CHECK(names[3] == "a1");
  CHECK(names[13] == "a11");
  for (auto F : {K, F49, E}) {
    for (int i = 0; i < 50; ++i) {
      auto f = random_poly(F.get(), 14, 6, 2, rng);
      CHECK(parse_poly(F.get(), to_string(f, names), names) == f);
    }
  }
  auto f = parse_form(K.get(), " ( x + y ) ^ 2 - 2 * x*y ");
  CHECK(f == parse_form(K.get(), "x^2+y^2"));
  CHECK(parse_form(F49.get(), "(3 + t)*x") == scale(MPoly::variable(F49.get(), 3, 0), F49->parse("3+t")));
  CHECK(parse_form(K.get(), "x/2") == scale(MPoly::variable(K.get(), 3, 0), Fe{6}));
  CHECK_THROWS_AS(parse_form(K.get(), "x + w"), PolyError);
  CHECK_THROWS_AS(parse_form(K.get(), "x + "), PolyError);
  CHECK_THROWS_AS(parse_form(K.get(), "x / y"), PolyError);
}

TEST_CASE("derivative, evaluation, specialization, remap") {
  auto K = Field::make(11, 1);
  auto f = parse_form(K.get(), "x*y*z^3 + x^5 + y^5");
  CHECK(derivative(f, 0) == parse_form(K.get(), "y*z^3 + 5*x^4"));
  std::vector<Fe> pt = {Fe{1}, Fe{2}, Fe{3}};
  CHECK(evaluate(f, pt) == K->from_int(1 * 2 * 27 + 1 + 32));
  auto g = specialize(f, 2, Fe{1});
  CHECK(g == parse_form(K.get(), "x*y + x^5 + y^5"));
  auto r = remap(parse_form(K.get(), "x*z^2"), {1, -1, 0}, 2);
  CHECK(to_string(r, {"u", "v"}) == "u^2*v");
  CHECK_THROWS_AS(remap(f, {0, -1, 1}, 2), PolyError);
  auto parts = split_prefix(f, 1);
  CHECK(parts.size() == 3);
  CHECK(prefix_coeff(f, 1, Mono::var(0, 5)).is_one());
}
