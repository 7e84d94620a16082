#include "sstrig/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace sstrig {

TupleSet::TupleSet(std::uint32_t q, std::vector<TupleBlock> blocks) : q_(q), blocks_(std::move(blocks)) {}

TupleSet TupleSet::single() { return TupleSet(0, {}); }

TupleSet TupleSet::full(std::uint32_t q, int arity) {
  return TupleSet(q, {TupleBlock{TupleBlock::Kind::Full, arity, {}}});
}

TupleSet TupleSet::units(std::uint32_t q, int arity) {
  return TupleSet(q, {TupleBlock{TupleBlock::Kind::Units, arity, {}}});
}

TupleSet TupleSet::explicit_set(std::uint32_t q, std::vector<std::vector<Fe>> tuples) {
  if (tuples.empty()) throw CatalogError("explicit tuple set is empty");
  int a = static_cast<int>(tuples[0].size());
  for (const auto& t : tuples)
    if (static_cast<int>(t.size()) != a) throw CatalogError("ragged explicit tuple set");
  return TupleSet(q, {TupleBlock{TupleBlock::Kind::Explicit, a, std::move(tuples)}});
}

TupleSet TupleSet::operator*(const TupleSet& o) const {
  std::vector<TupleBlock> b = blocks_;
  b.insert(b.end(), o.blocks_.begin(), o.blocks_.end());
  return TupleSet(std::max(q_, o.q_), std::move(b));
}

int TupleSet::arity() const {
  int a = 0;
  for (const auto& b : blocks_) a += b.arity;
  return a;
}

namespace {

std::uint64_t block_size(const TupleBlock& b, std::uint32_t q) {
  if (b.kind == TupleBlock::Kind::Explicit) return b.tuples.size();
  std::uint64_t base = b.kind == TupleBlock::Kind::Full ? q : q - 1, n = 1;
  for (int i = 0; i < b.arity; ++i) n *= base;
  return n;
}

}  // namespace

std::uint64_t TupleSet::size() const {
  std::uint64_t n = 1;
  for (const auto& b : blocks_) n *= block_size(b, q_);
  return n;
}

std::vector<Fe> TupleSet::at(std::uint64_t index) const {
  std::vector<std::vector<Fe>> parts(blocks_.size());
  for (std::size_t bi = blocks_.size(); bi-- > 0;) {
    const auto& b = blocks_[bi];
    std::uint64_t n = block_size(b, q_);
    std::uint64_t r = index % n;
    index /= n;
    if (b.kind == TupleBlock::Kind::Explicit) {
      parts[bi] = b.tuples[r];
      continue;
    }
    std::uint32_t base = b.kind == TupleBlock::Kind::Full ? q_ : q_ - 1;
    std::uint32_t off = b.kind == TupleBlock::Kind::Full ? 0 : 1;
    std::vector<Fe> t(b.arity);
    for (int j = b.arity; j-- > 0;) {
      t[j] = Fe{static_cast<std::uint32_t>(r % base) + off};
      r /= base;
    }
    parts[bi] = std::move(t);
  }
  std::vector<Fe> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string TupleSet::describe(const Field& K) const {
  if (blocks_.empty()) return "{()}";
  std::ostringstream os;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) os << " x ";
    const auto& b = blocks_[bi];
    if (b.kind == TupleBlock::Kind::Full) {
      os << "F_" << K.q();
    } else if (b.kind == TupleBlock::Kind::Units) {
      os << "F_" << K.q() << "^*";
    } else {
      os << "{";
      for (std::size_t t = 0; t < b.tuples.size(); ++t) {
        if (t) os << ", ";
        if (b.arity > 1) os << "(";
        for (int j = 0; j < b.arity; ++j) os << (j ? "," : "") << K.str(b.tuples[t][j]);
        if (b.arity > 1) os << ")";
      }
      os << "}";
      continue;
    }
    if (b.arity > 1) os << "^" << b.arity;
  }
  return os.str();
}

std::vector<int> CaseConfig::labels() const {
  std::vector<int> l;
  for (const auto& f : p) l.push_back(f.label);
  std::sort(l.begin(), l.end());
  return l;
}

std::vector<int> CaseConfig::a1_labels() const {
  std::vector<int> out;
  for (int l : labels())
    if (std::find(k.begin(), k.end(), l) == k.end()) out.push_back(l);
  return out;
}

std::vector<int> CaseConfig::a2_labels() const {
  std::vector<int> out;
  for (int l : k)
    if (std::find(i.begin(), i.end(), l) == i.end()) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CaseConfig::free_labels() const {
  std::vector<int> out;
  for (int l : i) {
    bool pinned = false;
    for (const auto& [pl, v] : pins) pinned |= pl == l;
    if (!pinned) out.push_back(l);
  }
  return out;
}

std::uint64_t CaseConfig::variant_count() const {
  std::uint64_t n = 1;
  for (const auto& f : fixed) n *= f.choices.size();
  return n;
}

std::vector<Fe> CaseConfig::variant(std::uint64_t v) const {
  std::vector<Fe> out(fixed.size());
  for (std::size_t j = fixed.size(); j-- > 0;) {
    out[j] = fixed[j].choices[v % fixed[j].choices.size()];
    v /= fixed[j].choices.size();
  }
  return out;
}

const MPoly& CaseConfig::p_form(int label) const {
  for (const auto& f : p)
    if (f.label == label) return f.form;
  throw CatalogError("unknown label a" + std::to_string(label));
}

MPoly CaseConfig::form(const std::vector<Fe>& choices, const std::vector<std::pair<int, Fe>>& values) const {
  if (choices.size() != fixed.size()) throw CatalogError("wrong number of fixed-term choices");
  MPoly F(K.get(), 3);
  for (std::size_t j = 0; j < fixed.size(); ++j) F = F + scale(fixed[j].form, choices[j]);
  for (const auto& [l, v] : values) F = F + scale(p_form(l), v);
  return F;
}

void CaseConfig::validate() const {
  const auto all = labels();
  auto known = [&](int l) { return std::binary_search(all.begin(), all.end(), l); };
  for (int l : k)
    if (!known(l)) throw CatalogError(name() + ": k index out of range");
  for (int l : i)
    if (std::find(k.begin(), k.end(), l) == k.end()) throw CatalogError(name() + ": i index not among k");
  if (A1.arity() != static_cast<int>(a1_labels().size())) throw CatalogError(name() + ": A1 arity mismatch");
  if (A2.arity() != static_cast<int>(a2_labels().size())) throw CatalogError(name() + ": A2 arity mismatch");
  if ((algorithm == 2) != is_nonsplit(kind)) throw CatalogError(name() + ": algorithm does not match case");
  for (const auto& [l, v] : pins)
    if (!known(l) || v.v >= K->q()) throw CatalogError(name() + ": bad pin");
  for (const auto& f : fixed)
    if (f.choices.empty()) throw CatalogError(name() + ": empty choice set for " + f.name);
}

std::vector<Fe> split_b1_values(const Field& K) {
  std::vector<Fe> out{K.zero()};
  auto reps = cube_class_reps(K);
  Fe z2 = K.mul(K.zeta(), K.zeta());
  for (Fe r : reps)
    if (!(reps.size() == 3 && r == z2)) out.push_back(r);
  return out;
}

std::vector<std::vector<Fe>> split_c_pairs(const Field& K) {
  Fe o = K.one(), z = K.zero();
  return {{z, z}, {o, z}, {z, o}, {o, o}, {o, K.zeta()}};
}

Fe canonical_eps(const Field& K) { return nonsquare(K); }

namespace {

struct Builder {
  FieldPtr K;
  const Field* Kp;
  Fe eps;

  explicit Builder(FieldPtr k) : K(std::move(k)), Kp(K.get()), eps(nonsquare(*K)) {}

  MPoly mono(int i, int j, int l) const { return MPoly::monomial(Kp, 3, Mono::of({i, j, l}), Kp->one()); }
  MPoly poly(std::initializer_list<std::pair<Mono, long long>> t) const {
    std::vector<Term> v;
    for (const auto& [m, c] : t) v.push_back({m, Kp->from_int(c)});
    return MPoly::from_terms(Kp, 3, std::move(v));
  }
  MPoly e_poly(std::initializer_list<std::pair<Mono, Fe>> t) const {
    std::vector<Term> v;
    for (const auto& [m, c] : t) v.push_back({m, c});
    return MPoly::from_terms(Kp, 3, std::move(v));
  }

  std::vector<LabeledForm> node_monomials() const {
    std::vector<LabeledForm> p;
    int l = 1;
    for (int j = 0; j <= 4; ++j) p.push_back({l++, mono(4 - j, j, 1)});
    for (int j = 0; j <= 5; ++j) p.push_back({l++, mono(5 - j, j, 0)});
    return p;
  }
  std::vector<LabeledForm> cusp_monomials() const {
    std::vector<LabeledForm> p{{1, mono(0, 3, 2)}, {2, mono(4, 0, 1)}, {3, mono(3, 1, 1)},
                               {4, mono(2, 2, 1)}, {5, mono(0, 4, 1)}};
    int l = 6;
    for (int j = 0; j <= 3; ++j) p.push_back({l++, mono(5 - j, j, 0)});
    p.push_back({10, mono(0, 5, 0)});
    return p;
  }
  MPoly nonsplit_q() const {  // (x^2 - eps y^2) z^3
    return e_poly({{Mono::of({2, 0, 3}), Kp->one()}, {Mono::of({0, 2, 3}), Kp->neg(eps)}});
  }
  MPoly nonsplit_x_cubic() const {  // x (x^2 + 3 eps y^2) z^2
    return e_poly({{Mono::of({3, 0, 2}), Kp->one()}, {Mono::of({1, 2, 2}), Kp->mul(Kp->from_int(3), eps)}});
  }
  MPoly nonsplit_y_cubic() const {  // y (3 x^2 + eps y^2) z^2
    return e_poly({{Mono::of({2, 1, 2}), Kp->from_int(3)}, {Mono::of({0, 3, 2}), eps}});
  }

  CaseConfig base(std::string tag, CaseKind kind) const {
    CaseConfig c;
    c.K = K;
    c.tag = std::move(tag);
    c.kind = kind;
    c.algorithm = is_nonsplit(kind) ? 2 : 1;
    if (is_nonsplit(kind)) c.eps = eps;
    c.p = kind == CaseKind::Cusp ? cusp_monomials() : node_monomials();
    for (const auto& f : c.p) c.k.push_back(f.label);
    c.A1 = TupleSet::single();
    c.A2 = TupleSet::single();
    return c;
  }

  CaseConfig split1(std::vector<Fe> b1) const {
    CaseConfig c = base("split1", CaseKind::SplitNode1);
    c.fixed = {{"b1", mono(0, 3, 2), std::move(b1)}, {"b2", mono(1, 1, 3), {Kp->one()}},
               {"b3", mono(3, 0, 2), {Kp->one()}}};
    return c;
  }
  CaseConfig split2() const {
    CaseConfig c = base("split2", CaseKind::SplitNode2);
    c.fixed = {{"b1", mono(1, 1, 3), {Kp->one()}}};
    return c;
  }
  CaseConfig nonsplit1(std::vector<Fe> b) const {
    CaseConfig c = base("nonsplit1", CaseKind::NonSplitNode1);
    c.fixed = {{"b1", nonsplit_q(), {Kp->one()}},
               {"b2", nonsplit_x_cubic(), {Kp->one()}},
               {"b3", nonsplit_y_cubic(), std::move(b)}};
    return c;
  }
  CaseConfig nonsplit2(std::string tag) const {
    CaseConfig c = base(std::move(tag), CaseKind::NonSplitNode2);
    c.fixed = {{"b1", nonsplit_q(), {Kp->one()}}};
    return c;
  }
  CaseConfig nonsplit3() const {
    CaseConfig c = base("nonsplit3", CaseKind::NonSplitNode3);
    c.p.erase(c.p.begin(), c.p.begin() + 5);
    c.k = {6, 7, 8, 9, 10, 11};
    c.fixed = {{"b1", nonsplit_q(), {Kp->one()}}};
    return c;
  }
  CaseConfig cusp() const {
    CaseConfig c = base("cusp", CaseKind::Cusp);
    Fe z = Kp->zero(), o = Kp->one();
    c.fixed = {{"b1", mono(1, 3, 1), {z, o}}, {"b2", mono(1, 4, 0), {z, o}}, {"b3", mono(2, 0, 3), {o}}};
    return c;
  }

  std::vector<std::vector<Fe>> singles(std::vector<Fe> v) const {
    std::vector<std::vector<Fe>> out;
    for (Fe x : v) out.push_back({x});
    return out;
  }
};

std::vector<CaseConfig> catalog_11(const Builder& B) {
  const std::uint32_t q = 11;
  const Field& K = *B.K;
  std::vector<CaseConfig> out;

  CaseConfig s1a = B.split1({K.one()});
  s1a.part = "b1=1";
  s1a.i = {1, 2, 3, 6, 7, 8, 9, 10};
  s1a.A2 = TupleSet::full(q, 3);
  out.push_back(s1a);

  CaseConfig s1b = B.split1({K.zero()});
  s1b.part = "b1=0";
  s1b.i = {5, 6, 7, 8, 9, 10, 11};
  s1b.A2 = TupleSet::full(q, 4);
  out.push_back(s1b);

  CaseConfig s2 = B.split2();
  s2.i = {5, 6, 7, 8, 9, 10, 11};
  s2.A2 = TupleSet::explicit_set(q, split_c_pairs(K)) * TupleSet::full(q, 2);
  out.push_back(s2);

  CaseConfig n1 = B.nonsplit1(nonsplit_b_reps(K));
  n1.i = {6, 7, 8, 9, 10, 11};
  n1.A2 = TupleSet::full(q, 5);
  out.push_back(n1);

  CaseConfig n23 = B.nonsplit2("nonsplit23");
  n23.i = {6, 7, 8, 9, 10, 11};
  n23.A2 = TupleSet::explicit_set(q, B.singles({K.zero(), K.one(), K.zeta()})) * TupleSet::full(q, 4);
  out.push_back(n23);

  CaseConfig cu = B.cusp();
  cu.i = {2, 4, 6, 7, 8, 9, 10};
  cu.A2 = TupleSet::units(q, 1) * TupleSet::full(q, 2);
  out.push_back(cu);
  return out;
}

std::vector<CaseConfig> catalog_13(const Builder& B) {
  const std::uint32_t q = 13;
  const Field& K = *B.K;
  std::vector<CaseConfig> out;

  CaseConfig s1 = B.split1(split_b1_values(K));
  s1.k = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  s1.A1 = TupleSet::full(q, 1);
  s1.i = {6, 7, 8, 9, 10, 11};
  s1.A2 = TupleSet::full(q, 4);
  out.push_back(s1);

  CaseConfig s2 = B.split2();
  s2.i = {6, 7, 8, 9, 10, 11};
  s2.A2 = TupleSet::explicit_set(q, split_c_pairs(K)) * TupleSet::full(q, 3);
  out.push_back(s2);

  CaseConfig n1 = B.nonsplit1({K.zero()});
  n1.i = {6, 7, 8, 9, 10, 11};
  n1.A2 = TupleSet::full(q, 5);
  out.push_back(n1);

  // Printed with the five (c1, c2) pairs over (a1, a2), a superset of c in {1, zeta}.
  CaseConfig n2 = B.nonsplit2("nonsplit2");
  n2.i = {6, 7, 8, 9, 10, 11};
  n2.A2 = TupleSet::explicit_set(q, split_c_pairs(K)) * TupleSet::full(q, 3);
  out.push_back(n2);

  CaseConfig n3 = B.nonsplit3();
  n3.i = {7, 8, 9, 10, 11};
  n3.A2 = TupleSet::full(q, 1);
  out.push_back(n3);

  CaseConfig cu = B.cusp();
  cu.k = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  cu.A1 = TupleSet::units(q, 1);
  cu.i = {2, 3, 4, 6, 7, 8, 9};
  cu.A2 = TupleSet::full(q, 2);
  out.push_back(cu);
  return out;
}

std::vector<CaseConfig> catalog_49(const Builder& B) {
  const std::uint32_t q = 49;
  const Field& K = *B.K;
  std::vector<CaseConfig> out;

  CaseConfig s1 = B.split1(split_b1_values(K));
  s1.i = {2, 4, 5, 6, 7, 8, 9, 10, 11};
  s1.A2 = TupleSet::full(q, 2);
  out.push_back(s1);

  CaseConfig s2 = B.split2();
  s2.i = {3, 4, 5, 6, 7, 8, 9, 10, 11};
  s2.A2 = TupleSet::explicit_set(q, split_c_pairs(K));
  out.push_back(s2);

  CaseConfig n1 = B.nonsplit1({K.zero()});
  n1.i = {1, 3, 5, 6, 7, 8, 9, 10, 11};
  n1.A2 = TupleSet::full(q, 2);
  out.push_back(n1);

  CaseConfig n23 = B.nonsplit2("nonsplit23");
  n23.i = {3, 4, 5, 6, 7, 8, 9, 10, 11};
  n23.A2 = TupleSet::explicit_set(q, B.singles({K.zero(), K.one(), K.zeta()})) * TupleSet::full(q, 1);
  out.push_back(n23);

  CaseConfig cu = B.cusp();
  cu.i = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  cu.A2 = TupleSet::units(q, 1);
  out.push_back(cu);
  return out;
}

std::vector<CaseConfig> catalog_generic(const Builder& B) {
  const Field& K = *B.K;
  const std::uint32_t q = K.q();
  std::vector<CaseConfig> out;

  CaseConfig s1 = B.split1(split_b1_values(K));
  s1.i = s1.k;
  out.push_back(s1);

  CaseConfig s2 = B.split2();
  s2.i = {3, 4, 5, 6, 7, 8, 9, 10, 11};
  s2.A2 = TupleSet::explicit_set(q, split_c_pairs(K));
  out.push_back(s2);

  CaseConfig n1 = B.nonsplit1(nonsplit_b_reps(K));
  n1.i = n1.k;
  out.push_back(n1);

  CaseConfig n2 = B.nonsplit2("nonsplit2");
  n2.i = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  n2.A2 = TupleSet::explicit_set(q, B.singles({K.one(), K.zeta()}));
  out.push_back(n2);

  CaseConfig n3 = B.nonsplit3();
  n3.i = n3.k;
  out.push_back(n3);

  CaseConfig cu = B.cusp();
  cu.i = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  cu.A2 = TupleSet::units(q, 1);
  out.push_back(cu);
  return out;
}

}  // namespace

std::vector<CaseConfig> case_catalog(const FieldPtr& K, bool exact) {
  if (K->p() < 5 || K->p() == 5) throw CatalogError("characteristic must be at least 7");
  Builder B(K);
  std::vector<CaseConfig> out;
  if (exact) {
    switch (K->q()) {
      case 11: out = catalog_11(B); break;
      case 13: out = catalog_13(B); break;
      case 49: out = catalog_49(B); break;
      default: throw CatalogError("no exact catalog for q = " + std::to_string(K->q()));
    }
  } else {
    out = catalog_generic(B);
  }
  for (const auto& c : out) c.validate();
  return out;
}

}  // namespace sstrig
