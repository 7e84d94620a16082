#include "sstrig/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sstrig {

namespace {

std::uint64_t divmask(const Mono& m) {
  std::uint64_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint16_t e = m.e[i];
    std::uint64_t b = (e >= 1) | ((e >= 2) << 1) | ((e >= 4) << 2) | ((e >= 8) << 3);
    mask |= b << (4 * i);
  }
  return mask;
}

struct Basis {
  std::vector<MPoly> polys;
  std::vector<std::uint64_t> masks;
  std::vector<unsigned> sugar;
  std::vector<int> active;  // indices into polys

  int find_reducer(const Mono& m, std::uint64_t mmask) const {
    for (int i : active) {
      if ((masks[i] & ~mmask) != 0) continue;
      if (mono_divides(polys[i].lead().m, m)) return i;
    }
    return -1;
  }
};

// dst = src[from..] - c * shift * g[1..], merged in order.
void merge_sub(std::vector<Term>& dst, const std::vector<Term>& src, std::size_t from, const Field* F, Fe c,
               const Mono& shift, const MPoly& g) {
  dst.clear();
  dst.reserve(src.size() - from + g.size());
  const auto& gt = g.terms();
  Fe nc = F->neg(c);
  std::size_t i = from, j = 1;
  Mono gm;
  bool have_g = j < gt.size();
  if (have_g) gm = mono_mul(gt[j].m, shift);
  while (i < src.size() && have_g) {
    int cmp = grevlex_cmp(src[i].m, gm);
    if (cmp > 0) {
      dst.push_back(src[i++]);
    } else if (cmp < 0) {
      dst.push_back({gm, F->mul(nc, gt[j].c)});
      ++j;
      have_g = j < gt.size();
      if (have_g) gm = mono_mul(gt[j].m, shift);
    } else {
      Fe s = F->add(src[i].c, F->mul(nc, gt[j].c));
      if (s.v) dst.push_back({gm, s});
      ++i;
      ++j;
      have_g = j < gt.size();
      if (have_g) gm = mono_mul(gt[j].m, shift);
    }
  }
  while (i < src.size()) dst.push_back(src[i++]);
  while (have_g) {
    dst.push_back({gm, F->mul(nc, gt[j].c)});
    ++j;
    have_g = j < gt.size();
    if (have_g) gm = mono_mul(gt[j].m, shift);
  }
}

// Full reduction of p by the active part of B (all of B's polys are monic).
MPoly reduce(const MPoly& p, const Basis& B, bool tail = true) {
  const Field* F = p.field();
  std::vector<Term> cur = p.terms(), next, done;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term lt = cur[pos];
    int r = B.find_reducer(lt.m, divmask(lt.m));
    if (r >= 0) {
      const MPoly& g = B.polys[r];
      merge_sub(next, cur, pos + 1, F, lt.c, mono_div(lt.m, g.lead().m), g);
      cur.swap(next);
      pos = 0;
    } else {
      done.push_back(lt);
      ++pos;
      if (!tail) {
        done.insert(done.end(), cur.begin() + pos, cur.end());
        break;
      }
    }
  }
  MPoly out(F, p.nvars());
  out.mutable_terms() = std::move(done);
  return out;
}

MPoly spoly(const MPoly& f, const MPoly& g) {
  Mono l = mono_lcm(f.lead().m, g.lead().m);
  return mul_term(f, mono_div(l, f.lead().m), f.field()->one()) -
         mul_term(g, mono_div(l, g.lead().m), g.field()->one());
}

struct Pair {
  int i, j;
  Mono lcm;
  unsigned sugar;
};

}  // namespace

bool is_unit_ideal(const PolyList& G) {
  for (const auto& g : G)
    if (!g.is_zero() && g.lead().m.deg == 0) return true;
  return false;
}

PolyList groebner_basis(const PolyList& gens, const GbBudget& budget, GbStats* stats) {
  if (gens.empty()) return {};
  const Field* F = gens[0].field();
  const int n = gens[0].nvars();
  GbStats local;
  GbStats& st = stats ? *stats : local;

  Basis B;
  std::vector<Pair> pairs;
  std::size_t held_terms = 0;
  auto unit = [&]() { return PolyList{MPoly::constant(F, n, F->one())}; };

  auto add = [&](MPoly h, unsigned sugar) {
    h = monic(h);
    int k = static_cast<int>(B.polys.size());
    held_terms += h.size();
    B.polys.push_back(std::move(h));
    B.masks.push_back(divmask(B.polys[k].lead().m));
    B.sugar.push_back(sugar);
    if (B.polys.size() > budget.max_basis) throw BudgetExceeded("basis size cap reached");
    if (held_terms > budget.max_terms) throw BudgetExceeded("term cap reached");
    const Mono& lh = B.polys[k].lead().m;
    // Gebauer-Moeller update.
    std::vector<Pair> C;
    for (int g : B.active) {
      const Mono& lg = B.polys[g].lead().m;
      Mono l = mono_lcm(lh, lg);
      unsigned s = std::max<unsigned>(sugar + l.deg - lh.deg, B.sugar[g] + l.deg - lg.deg);
      C.push_back({g, k, l, s});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool coprime = mono_coprime(lh, B.polys[p.i].lead().m);
      bool keep = true;
      if (!coprime) {
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (mono_divides(C[b].lcm, p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (mono_divides(D[b].lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (const Pair& p : D)
      if (!mono_coprime(lh, B.polys[p.i].lead().m)) E.push_back(p);
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + E.size());
    for (const Pair& p : pairs) {
      if (mono_divides(lh, p.lcm) && !(mono_lcm(B.polys[p.i].lead().m, lh) == p.lcm) &&
          !(mono_lcm(B.polys[p.j].lead().m, lh) == p.lcm))
        continue;
      kept.push_back(p);
    }
    for (const Pair& p : E) kept.push_back(p);
    pairs.swap(kept);
    std::vector<int> act;
    for (int g : B.active)
      if (!mono_divides(lh, B.polys[g].lead().m)) act.push_back(g);
    act.push_back(k);
    B.active.swap(act);
  };

  // Inputs in increasing order of leading monomial.
  PolyList in;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw PolyError("generators have different arity");
    if (!g.is_zero()) in.push_back(g);
  }
  std::sort(in.begin(), in.end(), [](const MPoly& a, const MPoly& b) { return grevlex_greater(b.lead().m, a.lead().m); });
  for (const auto& g : in) {
    MPoly h = reduce(g, B);
    if (h.is_zero()) continue;
    if (h.lead().m.deg == 0) return unit();
    unsigned sugar = static_cast<unsigned>(g.total_degree());
    add(std::move(h), sugar);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      const Pair& x = pairs[a];
      const Pair& y = pairs[best];
      if (x.sugar < y.sugar || (x.sugar == y.sugar && grevlex_cmp(x.lcm, y.lcm) < 0)) best = a;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    if (++st.pairs > budget.max_pairs) throw BudgetExceeded("S-pair cap reached");
    MPoly h = reduce(spoly(B.polys[p.i], B.polys[p.j]), B);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.lead().m.deg == 0) return unit();
    add(std::move(h), p.sugar);
  }

  // Interreduce the (already minimal) active set.
  PolyList G;
  for (int i : B.active) G.push_back(B.polys[i]);
  std::sort(G.begin(), G.end(), [](const MPoly& a, const MPoly& b) { return grevlex_greater(b.lead().m, a.lead().m); });
  for (std::size_t i = 0; i < G.size(); ++i) {
    Basis others;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (j == i) continue;
      others.polys.push_back(G[j]);
      others.masks.push_back(divmask(G[j].lead().m));
      others.active.push_back(static_cast<int>(others.polys.size()) - 1);
    }
    std::vector<Term> tail(G[i].terms().begin() + 1, G[i].terms().end());
    MPoly t(F, n);
    t.mutable_terms() = std::move(tail);
    MPoly r = reduce(t, others);
    std::vector<Term> full;
    full.push_back(G[i].lead());
    full.insert(full.end(), r.terms().begin(), r.terms().end());
    G[i].mutable_terms() = std::move(full);
  }
  st.basis_size = G.size();
  return G;
}

MPoly normal_form(const MPoly& f, const PolyList& G) {
  Basis B;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    B.polys.push_back(monic(g));
    B.masks.push_back(divmask(B.polys.back().lead().m));
    B.active.push_back(static_cast<int>(B.polys.size()) - 1);
  }
  return reduce(f, B);
}

bool is_groebner(const PolyList& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(spoly(monic(G[i]), monic(G[j])), G).is_zero()) return false;
  return true;
}

bool radical_vanishes(const MPoly& f, const PolyList& gens, const GbBudget& budget) {
  const int n = f.nvars();
  if (n + 1 > kMaxVars) throw PolyError("no room for the Rabinowitsch variable");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  PolyList ext;
  for (const auto& g : gens) ext.push_back(remap(g, idx, n + 1));
  const Field* F = f.field();
  MPoly w = MPoly::variable(F, n + 1, n);
  ext.push_back(remap(f, idx, n + 1) * w - MPoly::constant(F, n + 1, F->one()));
  return is_unit_ideal(groebner_basis(ext, budget));
}

std::optional<std::size_t> standard_monomial_count(const PolyList& G) {
  if (G.empty()) return std::nullopt;
  const int n = G[0].nvars();
  if (is_unit_ideal(G)) return 0;
  for (int v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& g : G) {
      const Mono& m = g.lead().m;
      if (m.e[v] > 0 && m.deg == m.e[v]) pure = true;
    }
    if (!pure) return std::nullopt;
  }
  auto standard = [&](const Mono& m) {
    for (const auto& g : G)
      if (mono_divides(g.lead().m, m)) return false;
    return true;
  };
  auto key = [](const Mono& m) { return m.e; };
  std::set<std::array<std::uint16_t, kMaxVars>> seen;
  std::vector<Mono> stack{Mono{}};
  seen.insert(key(Mono{}));
  while (!stack.empty()) {
    Mono m = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      Mono u = mono_mul(m, Mono::var(v));
      if (!standard(u) || seen.count(key(u))) continue;
      seen.insert(key(u));
      stack.push_back(u);
    }
  }
  return seen.size();
}

namespace {

void trim(UPoly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

UPoly umod(const Field& F, UPoly a, const UPoly& b) {
  trim(a);
  Fe inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Fe c = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

UPoly udiv(const Field& F, UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  Fe inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Fe c = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return q;
}

UPoly uderiv(const Field& F, const UPoly& a) {
  UPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.from_int(static_cast<long long>(i))));
  trim(d);
  return d;
}

UPoly umonic(const Field& F, UPoly a) {
  trim(a);
  if (a.empty()) return a;
  Fe inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

UPoly pth_root(const Field& F, const UPoly& a) {
  UPoly r;
  const std::uint32_t p = F.p();
  long long root = F.q() / p;  // c -> c^(q/p) inverts c -> c^p
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(F.pow(a[i], root));
  trim(r);
  return r;
}

}  // namespace

UPoly upoly_gcd(const Field& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(F, a);
}

UPoly upoly_squarefree(const Field& F, const UPoly& a0) {
  UPoly a = umonic(F, a0);
  if (a.size() <= 2) return a;
  UPoly d = uderiv(F, a);
  if (d.empty()) return upoly_squarefree(F, pth_root(F, a));
  UPoly g = upoly_gcd(F, a, d);
  UPoly w = umonic(F, udiv(F, a, g));
  // Factors of multiplicity divisible by p survive in g after removing w's.
  UPoly rest = g;
  for (;;) {
    UPoly y = upoly_gcd(F, rest, w);
    if (y.size() <= 1) break;
    rest = udiv(F, rest, y);
  }
  rest = umonic(F, rest);
  if (rest.size() <= 1) return w;
  UPoly r = upoly_squarefree(F, pth_root(F, rest));
  // w * r
  UPoly prod(w.size() + r.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) prod[i + j] = F.add(prod[i + j], F.mul(w[i], r[j]));
  return umonic(F, prod);
}

std::optional<std::size_t> variety_size(const PolyList& gens, const GbBudget& budget) {
  if (gens.empty()) return std::nullopt;
  const Field* F = gens[0].field();
  const int n = gens[0].nvars();
  PolyList G = groebner_basis(gens, budget);
  if (is_unit_ideal(G)) return 0;
  auto D = standard_monomial_count(G);
  if (!D) return std::nullopt;
  PolyList ext = G;
  for (int v = 0; v < n; ++v) {
    // Minimal polynomial of v modulo G: first linear dependency among the
    // normal forms of 1, v, v^2, ... in the D-dimensional quotient.
    std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> col;
    const std::size_t dim = *D;
    struct Row {
      std::vector<Fe> vec, comb;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    MPoly vp = MPoly::constant(F, n, F->one());
    const MPoly var = MPoly::variable(F, n, v);
    UPoly minpoly;
    for (std::size_t k = 0; k <= dim; ++k) {
      std::vector<Fe> vec(dim, Fe{0});
      const MPoly nf = normal_form(vp, G);
      for (const auto& t : nf.terms()) {
        auto [it, fresh] = col.emplace(t.m.e, col.size());
        (void)fresh;
        vec.at(it->second) = t.c;
      }
      std::vector<Fe> comb(dim + 1, Fe{0});
      comb[k] = F->one();
      for (const auto& r : rows) {
        Fe c = vec[r.pivot];
        if (!c.v) continue;
        for (std::size_t i = 0; i < dim; ++i) vec[i] = F->sub(vec[i], F->mul(c, r.vec[i]));
        for (std::size_t i = 0; i <= dim; ++i) comb[i] = F->sub(comb[i], F->mul(c, r.comb[i]));
      }
      std::size_t piv = dim;
      for (std::size_t i = 0; i < dim && piv == dim; ++i)
        if (vec[i].v) piv = i;
      if (piv == dim) {
        minpoly = comb;
        break;
      }
      Fe inv = F->inv(vec[piv]);
      for (auto& x : vec) x = F->mul(x, inv);
      for (auto& x : comb) x = F->mul(x, inv);
      rows.push_back({std::move(vec), std::move(comb), piv});
      vp = vp * var;
    }
    if (minpoly.empty()) return std::nullopt;
    UPoly sf = upoly_squarefree(*F, minpoly);
    std::vector<Term> t;
    for (std::size_t i = 0; i < sf.size(); ++i)
      if (sf[i].v) t.push_back({Mono::var(v, static_cast<int>(i)), sf[i]});
    ext.push_back(MPoly::from_terms(F, n, t));
  }
  return standard_monomial_count(groebner_basis(ext, budget));
}

namespace {

void solve_rec(const PolyList& G, std::vector<Fe>& point, std::vector<bool>& assigned, const Field* K,
               const GbBudget& budget, std::vector<std::vector<Fe>>& out, std::size_t max_solutions) {
  if (out.size() >= max_solutions) return;
  const int n = static_cast<int>(point.size());
  int v = -1;
  for (int i = n - 1; i >= 0; --i)
    if (!assigned[i]) {
      v = i;
      break;
    }
  if (v < 0) {
    out.push_back(point);
    return;
  }
  // Univariate members of G restrict the candidate roots.
  std::vector<const MPoly*> uni;
  for (const auto& g : G) {
    bool only_v = true;
    for (const auto& t : g.terms()) {
      if (t.m.deg != t.m.e[v]) {
        only_v = false;
        break;
      }
    }
    if (only_v) uni.push_back(&g);
  }
  for (std::uint32_t c = 0; c < K->q(); ++c) {
    Fe val{c};
    std::vector<Fe> pt(n, Fe{0});
    pt[v] = val;
    bool ok = true;
    for (const MPoly* g : uni)
      if (evaluate(*g, pt).v) {
        ok = false;
        break;
      }
    if (!ok) continue;
    PolyList spec;
    bool contradiction = false;
    for (const auto& g : G) {
      MPoly s = specialize(g, v, val);
      if (s.is_zero()) continue;
      if (s.is_constant()) {
        contradiction = true;
        break;
      }
      spec.push_back(std::move(s));
    }
    if (contradiction) continue;
    PolyList G2 = spec.empty() ? spec : groebner_basis(spec, budget);
    if (is_unit_ideal(G2)) continue;
    point[v] = val;
    assigned[v] = true;
    solve_rec(G2, point, assigned, K, budget, out, max_solutions);
    assigned[v] = false;
    point[v] = Fe{0};
    if (out.size() >= max_solutions) return;
  }
}

}  // namespace

SolutionSet solve_over_fq(const PolyList& gens, const Field* K, const GbBudget& budget, std::size_t max_solutions) {
  SolutionSet result;
  if (gens.empty()) throw PolyError("solve_over_fq needs at least one generator to fix the arity");
  const int n = gens[0].nvars();
  PolyList sys;
  for (const auto& g : gens) sys.push_back(g.field() == K ? g : embed(g, K));
  for (int v = 0; v < n; ++v) {
    std::vector<Term> t = {{Mono::var(v, static_cast<int>(K->q())), K->one()},
                           {Mono::var(v), K->neg(K->one())}};
    sys.push_back(MPoly::from_terms(K, n, t));
  }
  PolyList G = groebner_basis(sys, budget);
  if (is_unit_ideal(G)) return result;
  std::vector<Fe> point(n, Fe{0});
  std::vector<bool> assigned(n, false);
  solve_rec(G, point, assigned, K, budget, result.points, max_solutions);
  std::sort(result.points.begin(), result.points.end());
  if (result.points.size() >= max_solutions) result.complete = false;
  for (const auto& pt : result.points)
    for (const auto& g : sys)
      if (evaluate(g, pt).v) throw std::logic_error("solve_over_fq emitted a non-solution");
  return result;
}

}  // namespace sstrig
