#include "sstrig/quintic.hpp"


namespace sstrig {

const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::SplitNode1: return "split-node-1";
    case CaseKind::SplitNode2: return "split-node-2";
    case CaseKind::NonSplitNode1: return "nonsplit-node-1";
    case CaseKind::NonSplitNode2: return "nonsplit-node-2";
    case CaseKind::NonSplitNode3: return "nonsplit-node-3";
    case CaseKind::Cusp: return "cusp";
  }
  return "?";
}

bool is_split(CaseKind k) { return k == CaseKind::SplitNode1 || k == CaseKind::SplitNode2; }
bool is_nonsplit(CaseKind k) {
  return k == CaseKind::NonSplitNode1 || k == CaseKind::NonSplitNode2 || k == CaseKind::NonSplitNode3;
}

const char* to_string(NodeType t) {
  switch (t) {
    case NodeType::Split: return "split";
    case NodeType::NonSplit: return "nonsplit";
    case NodeType::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(SingStatus s) {
  switch (s) {
    case SingStatus::Smooth: return "smooth";
    case SingStatus::UniqueDouble: return "unique-double";
    case SingStatus::MultipleOrWorse: return "multiple-or-worse";
  }
  return "?";
}

const char* to_string(SingKind k) {
  switch (k) {
    case SingKind::None: return "none";
    case SingKind::SplitNode: return "split-node";
    case SingKind::NonSplitNode: return "nonsplit-node";
    case SingKind::Cusp: return "cusp";
  }
  return "?";
}

namespace {

void require_quintic(const MPoly& F) {
  if (F.nvars() != 3) throw ModelError("quintic must be a form in x, y, z");
  if (F.is_zero()) throw ModelError("zero polynomial");
  if (!F.is_homogeneous(5)) throw ModelError("not homogeneous of degree 5");
}

Fe co(const MPoly& F, int i, int j, int k) { return F.coeff(Mono::of({i, j, k})); }

}  // namespace

MPoly z3_part(const MPoly& F) {
  std::vector<Term> t;
  for (const auto& term : F.terms())
    if (term.m[2] == 3) {
      Mono m = term.m;
      m.e[2] = 0;
      m.deg -= 3;
      t.push_back({m, term.c});
    }
  return MPoly::from_terms(F.field(), F.nvars(), std::move(t));
}

QuinticModel QuinticModel::make(FieldPtr K, CaseKind kind, MPoly form, Fe eps,
                                std::vector<std::pair<std::string, Fe>> params) {
  require_quintic(form);
  if (!form.field()->same(*K)) throw ModelError("form is not over the model field");
  for (const auto& t : form.terms())
    if (t.m[2] > 3) throw ModelError("quintic has a z^4 or z^5 term");
  const Field& F = *K;
  const Field* Kp = K.get();
  MPoly x = MPoly::variable(Kp, 3, 0), y = MPoly::variable(Kp, 3, 1);
  MPoly expect;
  if (is_split(kind)) {
    expect = x * y;
  } else if (is_nonsplit(kind)) {
    if (eps.v == 0 || F.is_square(eps)) throw ModelError("eps must be a non-square");
    expect = x * x - scale(y * y, eps);
  } else {
    expect = x * x;
  }
  if (!(z3_part(form) == expect)) throw ModelError("z^3 part does not match the model case");
  if (kind == CaseKind::Cusp && co(form, 0, 3, 2).v == 0)
    throw ModelError("cusp model needs a nonzero y^3 z^2 coefficient");
  QuinticModel m;
  m.K = std::move(K);
  m.kind = kind;
  m.form = std::move(form);
  m.eps = eps;
  m.params = std::move(params);
  return m;
}

NodeType node_split_type(const MPoly& Q) {
  const Field& F = *Q.field();
  auto c = [&](int i, int j) {
    Mono m;
    m.e[0] = static_cast<std::uint16_t>(i);
    m.e[1] = static_cast<std::uint16_t>(j);
    m.deg = i + j;
    return Q.coeff(m);
  };
  Fe A = c(2, 0), B = c(1, 1), C = c(0, 2);
  Fe disc = F.sub(F.mul(B, B), F.mul(F.from_int(4), F.mul(A, C)));
  if (disc.v == 0) return NodeType::Degenerate;
  return F.is_square(disc) ? NodeType::Split : NodeType::NonSplit;
}

MPoly linear_change(const MPoly& F, const std::array<Fe, 9>& M) {
  const Field* K = F.field();
  std::vector<MPoly> img;
  for (int r = 0; r < 3; ++r) {
    std::vector<Term> t;
    for (int c = 0; c < 3; ++c)
      if (M[r * 3 + c].v) t.push_back({Mono::var(c), M[r * 3 + c]});
    img.push_back(MPoly::from_terms(K, 3, std::move(t)));
  }
  return substitute_linear(F, img);
}

MPoly move_to_origin(const MPoly& F, const ProjPoint& P) {
  const Field& K = *F.field();
  Fe z = K.zero(), o = K.one();
  std::array<Fe, 9> M;
  if (P[2].v) {
    Fe inv = K.inv(P[2]);
    M = {o, z, K.mul(P[0], inv), z, o, K.mul(P[1], inv), z, z, o};
  } else if (P[1].v) {
    Fe inv = K.inv(P[1]);
    M = {o, z, K.mul(P[0], inv), z, z, o, z, o, z};
  } else {
    M = {z, z, o, o, z, z, z, o, z};
  }
  return linear_change(F, M);
}

std::vector<ProjPoint> rational_singular_points(const MPoly& F) {
  require_quintic(F);
  const Field& K = *F.field();
  const std::uint32_t q = K.q();
  MPoly d[3] = {derivative(F, 0), derivative(F, 1), derivative(F, 2)};
  std::vector<ProjPoint> out;
  auto test = [&](const ProjPoint& P) {
    for (const auto& g : d)
      if (evaluate(g, P).v) return;
    out.push_back(P);
  };
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) test({Fe{a}, Fe{b}, K.one()});
  for (std::uint32_t a = 0; a < q; ++a) test({Fe{a}, K.one(), K.zero()});
  test({K.one(), K.zero(), K.zero()});
  return out;
}

namespace {

UPoly to_upoly(const MPoly& f, int var) {
  UPoly u;
  for (const auto& t : f.terms()) {
    std::size_t e = t.m[var];
    if (u.size() <= e) u.resize(e + 1, Fe{0});
    u[e] = t.c;
  }
  while (!u.empty() && u.back().v == 0) u.pop_back();
  return u;
}

// The Jacobian ideal has no zero on the line z = 0.
bool line_at_infinity_clear(const MPoly d[3]) {
  const Field& K = *d[0].field();
  // Points (x : 1 : 0).
  UPoly g;
  for (int i = 0; i < 3; ++i) g = upoly_gcd(K, g, to_upoly(specialize(specialize(d[i], 1, K.one()), 2, K.zero()), 0));
  if (g.size() > 1 || g.empty()) return false;
  const ProjPoint P{K.one(), K.zero(), K.zero()};
  for (int i = 0; i < 3; ++i)
    if (evaluate(d[i], P).v) return true;
  return false;
}

PolyList affine_jacobian(const MPoly d[3]) {
  const Field& K = *d[0].field();
  PolyList J;
  for (int i = 0; i < 3; ++i) {
    MPoly a = remap(specialize(d[i], 2, K.one()), {0, 1, -1}, 2);
    if (!a.is_zero()) J.push_back(a);
  }
  return J;
}

}  // namespace

SingularityReport classify_singularity(const MPoly& F0, const GbBudget& budget) {
  require_quintic(F0);
  const Field& K = *F0.field();
  SingularityReport rep;

  ProjPoint P{K.zero(), K.zero(), K.one()};
  MPoly F = F0;
  bool at_origin = true;
  {
    MPoly d[3] = {derivative(F, 0), derivative(F, 1), derivative(F, 2)};
    for (const auto& g : d)
      if (evaluate(g, P).v) at_origin = false;
  }
  if (!at_origin) {
    auto pts = rational_singular_points(F0);
    if (pts.size() > 1) {
      rep.status = SingStatus::MultipleOrWorse;
      rep.detail = std::to_string(pts.size()) + " rational singular points";
      return rep;
    }
    if (pts.empty()) {
      MPoly d[3] = {derivative(F, 0), derivative(F, 1), derivative(F, 2)};
      bool affine_empty = is_unit_ideal(groebner_basis(affine_jacobian(d), budget));
      if (affine_empty && line_at_infinity_clear(d)) {
        rep.status = SingStatus::Smooth;
        return rep;
      }
      // A single singular point over the closure would be Galois-stable.
      rep.status = SingStatus::MultipleOrWorse;
      rep.detail = "non-rational singular points";
      return rep;
    }
    P = pts[0];
    F = move_to_origin(F0, P);
  }

  MPoly d[3] = {derivative(F, 0), derivative(F, 1), derivative(F, 2)};
  PolyList J = affine_jacobian(d);
  const Field* Kp = F.field();
  MPoly x = MPoly::variable(Kp, 2, 0), y = MPoly::variable(Kp, 2, 1);
  if (!radical_vanishes(x, J, budget) || !radical_vanishes(y, J, budget) || !line_at_infinity_clear(d)) {
    rep.status = SingStatus::MultipleOrWorse;
    rep.detail = "more than one singular point";
    return rep;
  }

  Fe A = co(F, 2, 0, 3), B = co(F, 1, 1, 3), C = co(F, 0, 2, 3);
  if (A.v == 0 && B.v == 0 && C.v == 0) {
    rep.status = SingStatus::MultipleOrWorse;
    rep.detail = "point of multiplicity at least 3";
    return rep;
  }
  rep.status = SingStatus::UniqueDouble;
  rep.point = P;
  Fe disc = K.sub(K.mul(B, B), K.mul(K.from_int(4), K.mul(A, C)));
  if (disc.v) {
    rep.kind = K.is_square(disc) ? SingKind::SplitNode : SingKind::NonSplitNode;
    rep.genus5_ok = true;
    return rep;
  }
  rep.kind = SingKind::Cusp;
  // Tangent direction v with Q(v) = 0, then the cubic z^2 part at v.
  Fe v0, v1;
  if (A.v) {
    v0 = K.neg(K.div(B, K.mul(K.from_int(2), A)));
    v1 = K.one();
  } else {
    v0 = K.one();
    v1 = K.zero();
  }
  Fe c3 = K.zero();
  for (int i = 0; i <= 3; ++i) {
    Fe c = co(F, i, 3 - i, 2);
    c3 = K.add(c3, K.mul(c, K.mul(K.pow(v0, i), K.pow(v1, 3 - i))));
  }
  rep.genus5_ok = c3.v != 0;
  if (!rep.genus5_ok) rep.detail = "cusp of higher type";
  return rep;
}

}  // namespace sstrig
