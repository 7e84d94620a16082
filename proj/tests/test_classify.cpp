#include <doctest.h>

#include <algorithm>

#include "sstrig/classify.hpp"
#include "sstrig/hasse_witt.hpp"

using namespace sstrig;

namespace {

const char* kF[] = {"x*y*z^3 + x^5 + y^5", "x*y*z^3 + 2*x^5 + y^5", "x*y*z^3 + 3*x^5 + y^5",
                    "(x^2 - 2*y^2)*z^3 + x^5 + 9*x^3*y^2 + 9*x*y^4"};

ProjMatrix mat(const Field* K, std::array<int, 6> v) {
  ProjMatrix M;
  M.K = K;
  M.m = {K->from_int(v[0]), K->from_int(v[1]), K->zero(), K->from_int(v[2]),
         K->from_int(v[3]), K->zero(), K->from_int(v[4]), K->from_int(v[5]), K->one()};
  return M;
}

bool witnesses(const ProjMatrix& M, const MPoly& F, const MPoly& G) {
  const Field* E = M.K;
  MPoly a = M.act(F), b = G.field() == E ? G : embed(G, E);
  if (a.is_zero()) return false;
  Fe c = b.coeff(a.lead().m);
  if (!c.v) return false;
  return a == scale(b, E->mul(a.lead().c, E->inv(c)));
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> product(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  for (int i = 0; i < n * m; ++i)
    for (int j = 0; j < n * m; ++j) t[i][j] = a[i / m][j / m] * m + b[i % m][j % m];
  return t;
}

std::vector<std::vector<int>> dihedral_table(int n) {
  // r^i s^e <-> i + n e; s r = r^-1 s.
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int i = x % n, e = x / n, j = y % n, f = y / n;
      int k = e ? (i - j + n) % n : (i + j) % n;
      t[x][y] = k + n * (e ^ f);
    }
  return t;
}

}  // namespace

TEST_CASE("projective matrices") {
  auto K = Field::prime(11);
  const Field* k = K.get();
  ProjMatrix a = mat(k, {0, 1, 1, 0, 0, 0}), b = mat(k, {3, 0, 0, 4, 0, 0});
  CHECK(a.order() == 2);
  CHECK(b.order() == 5);
  ProjMatrix g = mat(k, {2, 5, 7, 2, 3, 9});
  CHECK((g * g.inverse()).is_identity());
  CHECK((g.inverse() * g).is_identity());
  CHECK(g.frobenius(11) == g);
  MPoly F = parse_form(k, kF[0]);
  CHECK((g * b).act(F) == b.act(g.act(F)));
}

TEST_CASE("automorphism groups over F_11") {
  auto K = Field::prime(11);
  const Field* k = K.get();
  const std::size_t orders[] = {10, 5, 5, 2};
  const char* names[] = {"D5", "C5", "C5", "C2"};
  for (int i = 0; i < 4; ++i) {
    MPoly F = parse_form(k, kF[i]);
    auto A = automorphism_group(F, Over::Base);
    CHECK(A.order() == orders[i]);
    CHECK(A.name() == names[i]);
    CHECK(30 % A.order() == 0);
    for (const auto& g : A.elements) CHECK(witnesses(g, F, F));
    for (const auto& p : A.permutations) CHECK(p.size() == A.order());
  }
  auto A1 = automorphism_group(parse_form(k, kF[0]), Over::Base);
  CHECK(std::binary_search(A1.elements.begin(), A1.elements.end(), mat(k, {0, 1, 1, 0, 0, 0})));
  CHECK(std::binary_search(A1.elements.begin(), A1.elements.end(), mat(k, {3, 0, 0, 4, 0, 0})));
}

TEST_CASE("automorphism group over the closure and sigma classes") {
  auto K = Field::prime(11);
  auto A = automorphism_group(parse_form(K.get(), kF[0]), Over::Closure);
  CHECK(A.complete);
  CHECK(A.order() == 30);
  CHECK(A.name() == "C3 x D5");
  CHECK(A.field->q() == 121);
  // The listed generators of order 5 and 2 over F_11 lie in the group.
  const Field* E = A.field.get();
  CHECK(std::binary_search(A.elements.begin(), A.elements.end(), mat(K.get(), {4, 0, 0, 3, 0, 0}).over(E)));
  CHECK(std::binary_search(A.elements.begin(), A.elements.end(), mat(K.get(), {0, 4, 3, 0, 0, 0}).over(E)));

  auto S = sigma_classes(A, 11);
  REQUIRE(S.classes.size() == 4);
  std::vector<std::size_t> stab;
  std::size_t total = 0;
  for (const auto& c : S.classes) {
    stab.push_back(c.stabilizer.size());
    total += c.members.size();
    for (const auto& g : c.stabilizer) CHECK(g.inverse() * c.rep * g.frobenius(11) == c.rep);
  }
  std::sort(stab.begin(), stab.end());
  CHECK(stab == std::vector<std::size_t>{2, 5, 5, 10});
  CHECK(total == 30);
}

TEST_CASE("sigma classes of the trivial group") {
  auto K = Field::prime(11);
  AutGroup G;
  G.field = K;
  G.elements = {ProjMatrix::identity(K.get())};
  auto S = sigma_classes(G, 11);
  REQUIRE(S.classes.size() == 1);
  CHECK(S.classes[0].stabilizer.size() == 1);
}

TEST_CASE("isomorphism decisions and witnesses") {
  auto K = Field::prime(11);
  const Field* k = K.get();
  MPoly F1 = parse_form(k, kF[0]), F2 = parse_form(k, kF[1]), F3 = parse_form(k, kF[2]);
  CHECK_FALSE(are_isomorphic(F2, F3, Over::Base).isomorphic);
  auto c = are_isomorphic(F2, F3, Over::Closure);
  CHECK(c.isomorphic);
  if (c.witness) CHECK(witnesses(*c.witness, F2, F3));
  else CHECK(c.witness_unresolved);

  auto self = are_isomorphic(F1, F1, Over::Base);
  REQUIRE(self.witness);
  CHECK(witnesses(*self.witness, F1, F1));

  // Swapping x and y, then composing and inverting witnesses.
  MPoly G = parse_form(k, "x*y*z^3 + x^5 + 2*y^5");
  MPoly H = parse_form(k, "x*y*z^3 + 4*x^5 + 3*y^5");
  auto fg = are_isomorphic(F2, G, Over::Base), gh = are_isomorphic(G, H, Over::Base);
  REQUIRE(fg.witness);
  CHECK(witnesses(*fg.witness, F2, G));
  if (gh.isomorphic) {
    REQUIRE(gh.witness);
    CHECK(witnesses(*fg.witness * *gh.witness, F2, H));
    CHECK(are_isomorphic(F2, H, Over::Base).isomorphic);
  } else {
    CHECK_FALSE(are_isomorphic(F2, H, Over::Base).isomorphic);
  }
  CHECK(witnesses(fg.witness->inverse(), G, F2));
  CHECK(count_points(F2, 2) == count_points(G, 2));
  CHECK(hw_split_cusp(F2).rank() == hw_split_cusp(G).rank());
}

TEST_CASE("point counts") {
  auto K = Field::prime(11);
  const std::uint64_t want[] = {232, 122, 122, 232};
  for (int i = 0; i < 4; ++i) CHECK(count_points(parse_form(K.get(), kF[i]), 2) == want[i]);
  CHECK(232 == 11 * 11 + 1 + 2 * 5 * 11);
  // Over F_11 itself the non-split node has no rational branch.
  MPoly F4 = parse_form(K.get(), kF[3]);
  std::uint64_t on_curve = 0;
  for (std::uint32_t a = 0; a < 11; ++a)
    for (std::uint32_t b = 0; b < 11; ++b) on_curve += evaluate(F4, std::vector<Fe>{Fe{a}, Fe{b}, Fe{1}}).v == 0;
  for (std::uint32_t a = 0; a < 11; ++a) on_curve += evaluate(F4, std::vector<Fe>{Fe{a}, Fe{1}, Fe{0}}).v == 0;
  on_curve += evaluate(F4, std::vector<Fe>{Fe{1}, Fe{0}, Fe{0}}).v == 0;
  CHECK(count_points(F4, 1) == on_curve - 1);
  auto K13 = Field::prime(13);
  MPoly cusp = parse_form(K13.get(), "x^2*z^3 + y^3*z^2 + x^5 + y^5");
  CHECK(count_points(cusp, 1) > 0);
}

TEST_CASE("group recognition") {
  CHECK(recognize_group(cyclic_table(12)).name == "C12");
  CHECK(recognize_group(product(cyclic_table(2), cyclic_table(6))).name == "C2 x C6");
  CHECK(recognize_group(product(cyclic_table(3), dihedral_table(5))).name == "C3 x D5");
  CHECK(recognize_group(product(cyclic_table(5), dihedral_table(3))).name == "C5 x D3");
  CHECK(recognize_group(dihedral_table(15)).name == "D15");
  CHECK(recognize_group(dihedral_table(4)).name == "D4");
  CHECK(recognize_group(cyclic_table(1)).name == "C1");
  auto g = recognize_group(dihedral_table(5));
  CHECK(g.name == "D5");
  CHECK(g.center == 1);
  CHECK_FALSE(g.abelian);
}

TEST_CASE("classes of the reference forms") {
  auto K = Field::prime(11);
  std::vector<MPoly> forms;
  for (const char* s : kF) forms.push_back(parse_form(K.get(), s));
  forms.push_back(parse_form(K.get(), "x*y*z^3 + x^5 + 2*y^5"));
  forms.push_back(parse_form(K.get(), "(x^2 - 2*y^2)*z^3 + 2*x^5 + 7*x^3*y^2 + 7*x*y^4"));
  auto cl = isomorphism_classes(forms, Over::Base);
  REQUIRE(cl.size() == 4);
  for (const auto& c : cl)
    for (std::size_t j = 0; j < c.members.size(); ++j) {
      REQUIRE(c.witnesses[j].witness);
      CHECK(witnesses(*c.witnesses[j].witness, forms[c.rep], forms[c.members[j]]));
    }
  CHECK(isomorphism_classes(forms, Over::Closure).size() == 1);
}
