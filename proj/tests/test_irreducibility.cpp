#include <doctest.h>

#include <random>

#include "sstrig/irreducibility.hpp"

using namespace sstrig;

namespace {

MPoly random_form(const Field* K, int d, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> cd(0, K->q() - 1);
  std::vector<Term> t;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) t.push_back({Mono::of({i, j, d - i - j}), Fe{cd(rng)}});
  MPoly f = MPoly::from_terms(K, 3, t);
  if (f.is_zero()) f = MPoly::monomial(K, 3, Mono::var(1, d), K->one());
  return f;
}

}  // namespace

TEST_CASE("reference verdicts") {
  auto K = Field::prime(11);
  const Field* k = K.get();
  CHECK(is_absolutely_irreducible(parse_form(k, "x*y*z^3 + x^5 + y^5")));
  CHECK_FALSE(is_absolutely_irreducible(parse_form(k, "(x + y)*(x^4 + z^4)")));
  CHECK_FALSE(is_absolutely_irreducible(parse_form(k, "x^5")));
  CHECK_FALSE(is_absolutely_irreducible(parse_form(k, "y^5")));
  CHECK_FALSE(is_absolutely_irreducible(parse_form(k, "(x^2 + y*z)*(y^3 + x*z^2 + z^3)")));
}

TEST_CASE("scope matters for binary forms") {
  // x^5 - 2 y^5 splits into five lines defined over F_{11^5} only.
  auto K = Field::prime(11);
  MPoly F = parse_form(K.get(), "x^5 - 2*y^5");
  CHECK_FALSE(is_absolutely_irreducible(F));
  CHECK(is_irreducible(F, IrredScope::extension(1)));
  CHECK(is_irreducible(F, IrredScope::extension(2)));
  CHECK_FALSE(is_irreducible(F, IrredScope::extension(5)));
  CHECK_FALSE(has_factor(F, kQuadraticCubic, IrredScope::extension(1)));
  CHECK(has_factor(F, kLinearQuartic, IrredScope::closure()));
}

TEST_CASE("leading normalization") {
  auto K = Field::prime(11);
  const Field* k = K.get();
  MPoly F = parse_form(k, "y*z^4 + y^5 + x*y^4 + x^2*z^3");
  MPoly N = normalize_leading(F);
  CHECK(N.coeff(Mono::var(0, 5)) == k->one());
  CHECK(N.total_degree() == 5);
  CHECK(is_absolutely_irreducible(F) == is_absolutely_irreducible(N));
  // (1:0:0) is a zero of F, so the scan moves on; (0:1:0) is not.
  MPoly G = parse_form(k, "y^5 + x*y^3*z");
  CHECK(normalize_leading(G) == parse_form(k, "x^5 + y*x^3*z"));
}

TEST_CASE("constructed products are reducible") {
  std::mt19937 rng(41);
  auto K = Field::prime(11);
  const Field* k = K.get();
  for (int t = 0; t < 60; ++t) {
    int low = t % 2 ? 1 : 2;
    MPoly a = random_form(k, low, rng), b = random_form(k, 5 - low, rng);
    MPoly F = a * b;
    CHECK_FALSE(is_absolutely_irreducible(F));
    CHECK_FALSE(is_irreducible(F, IrredScope::extension(1)));
  }
}

TEST_CASE("closure verdict implies every finite scope, and scaling is harmless") {
  std::mt19937 rng(43);
  for (std::uint32_t q : {7u, 11u, 13u}) {
    auto K = Field::prime(q);
    const Field* k = K.get();
    std::uniform_int_distribution<std::uint32_t> ud(1, q - 1);
    for (int t = 0; t < 8; ++t) {
      MPoly F = random_form(k, 5, rng);
      bool c = is_absolutely_irreducible(F);
      bool s1 = is_irreducible(F, IrredScope::extension(1));
      bool s2 = is_irreducible(F, IrredScope::extension(2));
      if (c) {
        CHECK(s1);
        CHECK(s2);
      }
      CHECK(s1 == s2);  // odd degree: a conjugate pair of factors cannot occur
      CHECK(is_absolutely_irreducible(scale(F, Fe{ud(rng)})) == c);
    }
  }
}

TEST_CASE("quintics over F_49") {
  auto K = Field::from_order(49);
  const Field* k = K.get();
  CHECK(is_absolutely_irreducible(parse_form(k, "x*y*z^3 + x^5 + y^5")));
  MPoly l = parse_form(k, "x + t*y + z");
  MPoly c = parse_form(k, "x^4 + t*y^4 + z^4 + x*y*z^2");
  CHECK_FALSE(is_absolutely_irreducible(l * c));
}
