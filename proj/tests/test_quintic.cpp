#include <doctest.h>

#include <random>
#include <set>

#include "sstrig/catalog.hpp"
#include "sstrig/quintic.hpp"

using namespace sstrig;

namespace {

MPoly random_quintic(const Field* K, std::mt19937& rng, int density, bool no_z45, bool no_x45) {
  std::vector<Term> t;
  std::uniform_int_distribution<std::uint32_t> cd(0, K->q() - 1);
  std::uniform_int_distribution<int> keep(0, 99);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j) {
      int k = 5 - i - j;
      if (no_z45 && k >= 4) continue;
      if (no_x45 && i >= 4) continue;
      if (keep(rng) >= density) continue;
      t.push_back({Mono::of({i, j, k}), Fe{cd(rng)}});
    }
  return MPoly::from_terms(K, 3, t);
}

bool same_point(const Field& K, const ProjPoint& a, const ProjPoint& b) {
  // a and b proportional
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (K.mul(a[i], b[j]) != K.mul(a[j], b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("classify_singularity on the reference quintics") {
  auto F11 = Field::prime(11);
  auto F7 = Field::prime(7);
  auto r1 = classify_singularity(parse_form(F11.get(), "x*y*z^3 + x^5 + y^5"));
  CHECK(r1.status == SingStatus::UniqueDouble);
  CHECK(r1.kind == SingKind::SplitNode);
  CHECK(r1.genus5_ok);
  CHECK(r1.point == ProjPoint{Fe{0}, Fe{0}, Fe{1}});

  auto r2 = classify_singularity(parse_form(F7.get(), "x^2*z^3 + y^5"));
  CHECK(r2.status == SingStatus::MultipleOrWorse);

  MPoly fermat = parse_form(F11.get(), "x^5 + y^5 + z^5");
  CHECK(classify_singularity(fermat).status == SingStatus::Smooth);
  auto F121 = Field::make(11, 2);
  CHECK(rational_singular_points(embed(fermat, F121.get())).empty());

  auto r3 = classify_singularity(parse_form(F11.get(), "(x^2 - 2*y^2)*z^3 + x^5 + 9*x^3*y^2 + 9*x*y^4"));
  CHECK(r3.status == SingStatus::UniqueDouble);
  CHECK(r3.kind == SingKind::NonSplitNode);

  auto r4 = classify_singularity(parse_form(F11.get(), "x^2*z^3 + y^3*z^2 + x^5 + y^5"));
  CHECK(r4.status == SingStatus::UniqueDouble);
  CHECK(r4.kind == SingKind::Cusp);
  CHECK(r4.genus5_ok);

  auto r5 = classify_singularity(parse_form(F11.get(), "x^2*z^3 + x^3*z^2 + x*y^4 + y^5"));
  if (r5.status == SingStatus::UniqueDouble) {
    CHECK(r5.kind == SingKind::Cusp);
    CHECK_FALSE(r5.genus5_ok);
  }

  // The node moved away from the origin is still found.
  MPoly moved = linear_change(parse_form(F11.get(), "x*y*z^3 + x^5 + y^5"),
                              {Fe{1}, Fe{0}, Fe{10}, Fe{0}, Fe{1}, Fe{8}, Fe{0}, Fe{0}, Fe{1}});
  auto r6 = classify_singularity(moved);
  CHECK(r6.status == SingStatus::UniqueDouble);
  CHECK(r6.kind == SingKind::SplitNode);
  CHECK(evaluate(derivative(moved, 0), r6.point).v == 0);
}

TEST_CASE("node_split_type") {
  auto F11 = Field::prime(11);
  CHECK(node_split_type(parse_form(F11.get(), "x*y")) == NodeType::Split);
  CHECK(node_split_type(parse_form(F11.get(), "x^2 - 2*y^2")) == NodeType::NonSplit);
  CHECK(node_split_type(parse_form(F11.get(), "x^2")) == NodeType::Degenerate);
  CHECK(node_split_type(parse_form(F11.get(), "x^2 - 3*y^2")) == NodeType::Split);
}

TEST_CASE("singularity certificate agrees with point search over F_7 and F_49") {
  auto F7 = Field::prime(7);
  auto F49 = Field::make(7, 2);
  std::mt19937 rng(11);
  int unique = 0, multiple = 0, smooth = 0;
  for (int trial = 0; trial < 90; ++trial) {
    const bool anchored = trial % 3 != 0;
    MPoly F = random_quintic(F7.get(), rng, anchored ? 40 + (trial % 2) * 30 : 90, anchored, trial % 5 == 0);
    if (F.is_zero() || !F.is_homogeneous(5)) continue;
    auto rep = classify_singularity(F);
    auto small = rational_singular_points(F);
    auto big = rational_singular_points(embed(F, F49.get()));
    CHECK(big.size() >= small.size());
    switch (rep.status) {
      case SingStatus::Smooth:
        ++smooth;
        CHECK(big.empty());
        break;
      case SingStatus::UniqueDouble:
        ++unique;
        REQUIRE(big.size() == 1);
        CHECK(same_point(*F49, big[0], rep.point));
        break;
      case SingStatus::MultipleOrWorse:
        ++multiple;
        break;
    }
    if (big.size() >= 2) CHECK(rep.status == SingStatus::MultipleOrWorse);
  }
  CHECK(unique > 5);
  CHECK(multiple > 5);
  CHECK(smooth > 5);
}

TEST_CASE("node kind is invariant under GL2 changes of x, y") {
  auto F11 = Field::prime(11);
  const Field& K = *F11;
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> cd(0, 10);
  const char* models[] = {"x*y*z^3 + x^3*z^2 + 3*x^5 + 2*x*y^4 + y^5 + x^2*y^3",
                          "(x^2 - 2*y^2)*z^3 + x^4*z + x^5 + 4*x^2*y^3 + y^5",
                          "x^2*z^3 + y^3*z^2 + x^4*z + x^5 + 7*y^5 + x*y^4"};
  for (const char* text : models) {
    MPoly F = parse_form(F11.get(), text);
    auto base = classify_singularity(F);
    REQUIRE(base.status == SingStatus::UniqueDouble);
    for (int t = 0; t < 10; ++t) {
      Fe a = Fe{cd(rng)}, b = Fe{cd(rng)}, c = Fe{cd(rng)}, d = Fe{cd(rng)};
      if (K.sub(K.mul(a, d), K.mul(b, c)).v == 0) continue;
      MPoly G = linear_change(F, {a, b, Fe{0}, c, d, Fe{0}, Fe{0}, Fe{0}, Fe{1}});
      auto rep = classify_singularity(G);
      CHECK(rep.status == SingStatus::UniqueDouble);
      CHECK(rep.kind == base.kind);
      CHECK(node_split_type(z3_part(G)) == node_split_type(z3_part(F)));
    }
  }
}

TEST_CASE("QuinticModel validation") {
  auto F11 = Field::prime(11);
  auto m = QuinticModel::make(F11, CaseKind::SplitNode2, parse_form(F11.get(), "x*y*z^3 + x^5 + y^5"));
  CHECK(m.kind == CaseKind::SplitNode2);
  CHECK_THROWS_AS(QuinticModel::make(F11, CaseKind::SplitNode2, parse_form(F11.get(), "x*y*z^3 + x^4")), ModelError);
  CHECK_THROWS_AS(QuinticModel::make(F11, CaseKind::Cusp, parse_form(F11.get(), "x^2*z^3 + y^5")), ModelError);
  CHECK_THROWS_AS(QuinticModel::make(F11, CaseKind::NonSplitNode3, parse_form(F11.get(), "(x^2-2*y^2)*z^3 + y^5"),
                                     Fe{3}),
                  ModelError);
  CHECK_NOTHROW(QuinticModel::make(F11, CaseKind::NonSplitNode3, parse_form(F11.get(), "(x^2-2*y^2)*z^3 + y^5"), Fe{2}));
  CHECK_THROWS_AS(QuinticModel::make(F11, CaseKind::SplitNode1, parse_form(F11.get(), "x*y*z^3 + z^5")), ModelError);
}

TEST_CASE("TupleSet indexing") {
  TupleSet a = TupleSet::explicit_set(11, {{Fe{0}, Fe{0}}, {Fe{1}, Fe{0}}, {Fe{1}, Fe{2}}}) * TupleSet::full(11, 2);
  CHECK(a.arity() == 4);
  CHECK(a.size() == 3 * 121);
  std::set<std::vector<Fe>> seen;
  for (std::uint64_t i = 0; i < a.size(); ++i) seen.insert(a.at(i));
  CHECK(seen.size() == a.size());
  CHECK(a.at(0) == std::vector<Fe>{Fe{0}, Fe{0}, Fe{0}, Fe{0}});
  CHECK(a.at(a.size() - 1) == std::vector<Fe>{Fe{1}, Fe{2}, Fe{10}, Fe{10}});
  TupleSet u = TupleSet::units(13, 1);
  CHECK(u.size() == 12);
  CHECK(u.at(0)[0] == Fe{1});
  CHECK(TupleSet::single().size() == 1);
  CHECK(TupleSet::single().at(0).empty());
}

TEST_CASE("case catalogs") {
  auto F11 = Field::prime(11);
  auto F13 = Field::prime(13);
  auto F49 = Field::from_order(49);

  auto c11 = case_catalog(F11);
  CHECK(c11.size() == 6);
  std::set<std::uint32_t> b;
  for (const auto& c : c11)
    if (c.tag == "nonsplit1")
      for (Fe x : c.fixed[2].choices) b.insert(x.v);
  CHECK(b == std::set<std::uint32_t>{0, 6, 10});
  for (const auto& c : c11)
    if (c.tag == "split2") {
      CHECK(c.a2_labels() == std::vector<int>{1, 2, 3, 4});
      CHECK(c.A2.size() == 5 * 121);
      CHECK(c.i.size() == 7);
    }

  auto c13 = case_catalog(F13);
  CHECK(c13.size() == 6);
  const CaseConfig& s1 = c13[0];
  CHECK(s1.tag == "split1");
  CHECK(s1.a1_labels() == std::vector<int>{1});
  CHECK(s1.A1.size() == 13);
  CHECK(s1.i == std::vector<int>{6, 7, 8, 9, 10, 11});
  CHECK(s1.a2_labels() == std::vector<int>{2, 3, 4, 5});
  CHECK(s1.A2.size() == 13u * 13 * 13 * 13);
  CHECK(s1.variant_count() == 3);
  const CaseConfig& n3 = c13[4];
  CHECK(n3.tag == "nonsplit3");
  CHECK(n3.labels() == std::vector<int>{6, 7, 8, 9, 10, 11});
  CHECK(n3.a2_labels() == std::vector<int>{6});
  CHECK(n3.A2.size() == 13);

  auto c49 = case_catalog(F49);
  CHECK(c49.size() == 5);
  const CaseConfig& cu = c49.back();
  CHECK(cu.tag == "cusp");
  CHECK(cu.variant_count() == 4);
  CHECK(cu.A2.size() == 48);
  CHECK(cu.a2_labels() == std::vector<int>{1});
  std::set<std::uint32_t> b1;
  for (Fe x : c49[0].fixed[0].choices) b1.insert(x.v);
  CHECK(b1 == std::set<std::uint32_t>{0, 1, F49->zeta().v});

  CHECK_THROWS_AS(case_catalog(Field::prime(17)), CatalogError);
  CHECK(case_catalog(Field::prime(17), false).size() == 6);
}

TEST_CASE("catalog forms reproduce the model leading structure") {
  std::mt19937 rng(3);
  for (std::uint32_t q : {11u, 13u, 49u}) {
    auto K = Field::from_order(q);
    for (const auto& c : case_catalog(K)) {
      for (int t = 0; t < 5; ++t) {
        std::vector<std::pair<int, Fe>> vals;
        for (int l : c.labels()) vals.push_back({l, Fe{std::uniform_int_distribution<std::uint32_t>(1, q - 1)(rng)}});
        auto choice = c.variant(t % c.variant_count());
        MPoly F = c.form(choice, vals);
        CHECK_NOTHROW(QuinticModel::make(K, c.kind, F, c.eps));
      }
    }
  }
}
