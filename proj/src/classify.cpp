#include "sstrig/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sstrig {

ProjMatrix ProjMatrix::identity(const Field* K) {
  ProjMatrix I;
  I.K = K;
  for (int i = 0; i < 3; ++i) I.m[i * 4] = K->one();
  return I;
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
  ProjMatrix r;
  r.K = K;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fe acc = K->zero();
      for (int k = 0; k < 3; ++k) acc = K->add(acc, K->mul(m[i * 3 + k], o.m[k * 3 + j]));
      r.m[i * 3 + j] = acc;
    }
  return r;
}

ProjMatrix ProjMatrix::inverse() const {
  // Block form [[A, 0], [w, 1]]: inverse [[A^-1, 0], [-w A^-1, 1]].
  const Field& F = *K;
  Fe a = at(0, 0), b = at(0, 1), c = at(1, 0), d = at(1, 1), e = at(2, 0), f = at(2, 1);
  Fe det = F.sub(F.mul(a, d), F.mul(b, c));
  if (!det.v) throw std::domain_error("singular matrix");
  Fe di = F.inv(det);
  Fe ia = F.mul(d, di), ib = F.neg(F.mul(b, di)), ic = F.neg(F.mul(c, di)), id = F.mul(a, di);
  ProjMatrix r;
  r.K = K;
  r.m = {ia, ib, F.zero(), ic, id, F.zero(),
         F.neg(F.add(F.mul(e, ia), F.mul(f, ic))), F.neg(F.add(F.mul(e, ib), F.mul(f, id))), F.one()};
  return r;
}

ProjMatrix ProjMatrix::frobenius(std::uint64_t q) const {
  ProjMatrix r = *this;
  for (auto& x : r.m) x = K->pow(x, static_cast<long long>(q));
  return r;
}

ProjMatrix ProjMatrix::over(const Field* E) const {
  if (!E->contains(*K)) throw std::invalid_argument("field does not contain the matrix entries");
  ProjMatrix r = *this;
  r.K = E;
  return r;
}

bool ProjMatrix::is_identity() const { return *this == identity(K); }

int ProjMatrix::order() const {
  ProjMatrix p = *this;
  for (int n = 1; n <= 10000; ++n) {
    if (p.is_identity()) return n;
    p = p * *this;
  }
  throw std::runtime_error("matrix order too large");
}

MPoly ProjMatrix::act(const MPoly& F) const {
  const Field* E = K;
  MPoly G = F.field() == E ? F : embed(F, E);
  return linear_change(G, m);
}

std::string ProjMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 3; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < 3; ++c) os << (c ? " " : "") << K->str(at(r, c));
  }
  os << "]";
  return os.str();
}

PolyList isomorphism_system(const MPoly& F, const MPoly& F2) {
  const Field* K = F.field();
  if (F2.field() != K || F.nvars() != 3 || F2.nvars() != 3) throw PolyError("isomorphism_system: forms in x, y, z over one field");
  const int n = 11;  // x y z a b c d e f lambda g
  auto v = [&](int i) { return MPoly::variable(K, n, i); };
  std::vector<MPoly> img = {v(3) * v(0) + v(4) * v(1), v(5) * v(0) + v(6) * v(1), v(7) * v(0) + v(8) * v(1) + v(2)};
  MPoly D = substitute(F, img) - v(9) * remap(F2, {0, 1, 2}, n);
  PolyList out;
  for (auto& [mono, c] : split_prefix(D, 3)) {
    (void)mono;
    if (!c.is_zero()) out.push_back(c);
  }
  // lambda g (ad - bc) - 1 in the unknowns.
  const int u = 8;
  auto w = [&](int i) { return MPoly::variable(K, u, i); };
  out.push_back(w(6) * w(7) * (w(0) * w(3) - w(1) * w(2)) - MPoly::constant(K, u, K->one()));
  return out;
}

namespace {

ProjMatrix from_solution(const Field* E, const std::vector<Fe>& s) {
  ProjMatrix M;
  M.K = E;
  M.m = {s[0], s[1], E->zero(), s[2], s[3], E->zero(), s[4], s[5], E->one()};
  return M;
}

// F_{q^m} for the witness search, or null when not constructible.
FieldPtr extension(const Field* K, unsigned m) {
  if (m == 1) return K->shared_from_this();
  if (m == 2 && K->is_prime()) return Field::make(K->p(), 2);
  return nullptr;
}

}  // namespace

IsoResult are_isomorphic(const MPoly& F, const MPoly& F2, Over over, const ClassifyOptions& opt) {
  const Field* K = F.field();
  PolyList sys = isomorphism_system(F, F2);
  IsoResult r;
  if (over == Over::Base) {
    auto sol = solve_over_fq(sys, K, opt.budget, 1);
    if (sol.points.empty()) return r;
    r.isomorphic = true;
    r.field = K->shared_from_this();
    r.witness = from_solution(K, sol.points[0]);
    r.witness_degree = 1;
    return r;
  }
  PolyList G = groebner_basis(sys, opt.budget);
  if (is_unit_ideal(G)) return r;
  r.isomorphic = true;
  for (unsigned m = 1; m <= opt.max_degree; ++m) {
    FieldPtr E = extension(K, m);
    if (!E) break;
    auto sol = solve_over_fq(G, E.get(), opt.budget, 1);
    if (!sol.points.empty()) {
      r.field = E;
      r.witness = from_solution(E.get(), sol.points[0]);
      r.witness_degree = m;
      return r;
    }
  }
  r.witness_unresolved = true;
  return r;
}

namespace {

std::vector<std::vector<int>> mult_table(const std::vector<ProjMatrix>& el) {
  std::map<ProjMatrix, int> idx;
  for (std::size_t i = 0; i < el.size(); ++i) idx[el[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(el.size(), std::vector<int>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      auto it = idx.find(el[i] * el[j]);
      if (it == idx.end()) throw std::logic_error("automorphisms are not closed under products");
      t[i][j] = it->second;
    }
  return t;
}

// Smallest generating set found greedily in element order.
std::vector<int> greedy_generators(const std::vector<std::vector<int>>& t, int identity) {
  const int n = static_cast<int>(t.size());
  std::vector<char> in(n, 0);
  in[identity] = 1;
  std::vector<int> gens;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < n; ++i)
        if (in[i])
          for (int g : gens)
            if (!in[t[i][g]]) {
              in[t[i][g]] = 1;
              grew = true;
            }
    }
  };
  for (int k = 0; k < n; ++k) {
    if (in[k]) continue;
    gens.push_back(k);
    close();
  }
  return gens;
}

}  // namespace

AutGroup automorphism_group(const MPoly& F, Over over, const ClassifyOptions& opt) {
  const Field* K = F.field();
  PolyList sys = isomorphism_system(F, F);
  AutGroup A;
  std::vector<std::vector<Fe>> pts;
  if (over == Over::Base) {
    A.field = K->shared_from_this();
    pts = solve_over_fq(sys, K, opt.budget).points;
  } else {
    PolyList G = groebner_basis(sys, opt.budget);
    auto expected = variety_size(G, opt.budget);
    A.complete = false;
    for (unsigned m = 1; m <= opt.max_degree; ++m) {
      FieldPtr E = extension(K, m);
      if (!E) break;
      pts = solve_over_fq(G, E.get(), opt.budget).points;
      A.field = E;
      if (expected && pts.size() == *expected) {
        A.complete = true;
        break;
      }
    }
  }
  const Field* E = A.field.get();
  for (const auto& s : pts) A.elements.push_back(from_solution(E, s));
  std::sort(A.elements.begin(), A.elements.end());
  for (const auto& M : A.elements) {
    MPoly G = M.act(F), H = F.field() == E ? F : embed(F, E);
    // M.F = lambda F with lambda read off any term.
    Fe lambda = E->mul(G.lead().c, E->inv(H.coeff(G.lead().m)));
    if (!(G == scale(H, lambda))) throw std::logic_error("automorphism re-check failed");
  }
  auto t = mult_table(A.elements);
  int id = static_cast<int>(std::find(A.elements.begin(), A.elements.end(), ProjMatrix::identity(E)) - A.elements.begin());
  for (int g : greedy_generators(t, id)) {
    A.generators.push_back(A.elements[g]);
    std::vector<int> perm(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) perm[i] = t[g][i] + 1;
    A.permutations.push_back(std::move(perm));
  }
  A.info = recognize_group(t);
  return A;
}

namespace {

using Table = std::vector<std::vector<int>>;

std::vector<std::size_t> orders_of(const Table& t, int id) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t k = 1;
    int x = static_cast<int>(i);
    while (x != id) {
      x = t[x][i];
      ++k;
    }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int identity_of(const Table& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < t.size() && ok; ++j) ok = t[i][j] == static_cast<int>(j);
    if (ok) return static_cast<int>(i);
  }
  throw std::logic_error("no identity");
}

GroupInfo fingerprint(const Table& t) {
  GroupInfo g;
  g.order = t.size();
  int id = identity_of(t);
  g.element_orders = orders_of(t, id);
  g.abelian = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[i][j] != t[j][i]) central = false;
    if (central) ++g.center;
    else g.abelian = false;
  }
  return g;
}

// Groups as permutation lists on n points, closed by brute force.
Table from_generators(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<int> idp(n);
  std::iota(idp.begin(), idp.end(), 0);
  std::map<std::vector<int>, int> idx;
  std::vector<std::vector<int>> el = {idp};
  idx[idp] = 0;
  for (std::size_t k = 0; k < el.size(); ++k)
    for (const auto& g : gens) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = g[el[k][i]];
      if (!idx.count(p)) {
        idx[p] = static_cast<int>(el.size());
        el.push_back(p);
      }
    }
  Table t(el.size(), std::vector<int>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = el[a][el[b][i]];
      t[a][b] = idx.at(p);
    }
  return t;
}

std::vector<int> cycle(int n, int off, int len) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < len; ++i) p[off + i] = off + (i + 1) % len;
  return p;
}

std::vector<int> reflection(int n, int off, int len) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = 0; i < len; ++i) p[off + i] = off + (len - i) % len;
  return p;
}

struct CatalogEntry {
  std::string name;
  GroupInfo info;
};

std::string cyc(int n) { return "C" + std::to_string(n); }

const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> cat = [] {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, int n, std::vector<std::vector<int>> gens) {
      c.push_back({std::move(name), fingerprint(from_generators(n, gens))});
    };
    // Abelian groups in invariant-factor form C_a x C_b x C_c, a | b | c.
    for (int a = 1; a <= 60; ++a)
      for (int b = a; a * b <= 60; b += a)
        for (int cc = b; a * b * cc <= 60; cc += b) {
          std::vector<int> f;
          for (int x : {a, b, cc})
            if (x > 1) f.push_back(x);
          if (f.empty()) f.push_back(1);
          int n = std::accumulate(f.begin(), f.end(), 0), off = 0;
          std::vector<std::vector<int>> g;
          std::string name;
          for (int x : f) {
            g.push_back(cycle(n, off, x));
            name += (name.empty() ? "" : " x ") + cyc(x);
            off += x;
          }
          add(name, n, g);
        }
    // Dihedral D_m of order 2m, and C_k x D_m for odd k.
    for (int m = 3; 2 * m <= 60; ++m) {
      add("D" + std::to_string(m), m, {cycle(m, 0, m), reflection(m, 0, m)});
      for (int k = 3; 2 * m * k <= 60; k += 2)
        add(cyc(k) + " x D" + std::to_string(m), k + m, {cycle(k + m, 0, k), cycle(k + m, k, m), reflection(k + m, k, m)});
    }
    // Dicyclic groups of order 4m on the regular representation of Z_2m x Z_2.
    for (int m = 2; 4 * m <= 60; ++m) {
      int n = 4 * m;  // element (i, e) <-> i + 2m e
      std::vector<int> ga(n), gx(n);
      for (int i = 0; i < 2 * m; ++i) {
        // left multiplication by a: a * a^i = a^{i+1}; a * a^i x = a^{i+1} x
        ga[i] = (i + 1) % (2 * m);
        ga[i + 2 * m] = (i + 1) % (2 * m) + 2 * m;
        // x * a^i = a^{-i} x; x * a^i x = a^{-i} x^2 = a^{m-i}
        gx[i] = (2 * m - i) % (2 * m) + 2 * m;
        gx[i + 2 * m] = (m - i + 2 * m) % (2 * m);
      }
      add(m == 2 ? "Q8" : "Dic" + std::to_string(m), n, {ga, gx});
    }
    add("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    add("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
    add("A5", 5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
    return c;
  }();
  return cat;
}

bool same_print(const GroupInfo& a, const GroupInfo& b) {
  return a.order == b.order && a.abelian == b.abelian && a.center == b.center && a.element_orders == b.element_orders;
}

}  // namespace

GroupInfo recognize_group(const std::vector<std::vector<int>>& table) {
  GroupInfo g = fingerprint(table);
  std::vector<std::string> hits;
  for (const auto& e : group_catalog())
    if (same_print(e.info, g)) hits.push_back(e.name);
  g.name = hits.size() == 1 ? hits[0] : "unrecognized";
  return g;
}

SigmaClassReport sigma_classes(const AutGroup& G, std::uint64_t q) {
  SigmaClassReport rep;
  const auto& el = G.elements;
  std::vector<ProjMatrix> inv, sig;
  for (const auto& g : el) {
    inv.push_back(g.inverse());
    sig.push_back(g.frobenius(q));
    if (!std::binary_search(el.begin(), el.end(), sig.back()))
      throw std::logic_error("Frobenius does not preserve the group");
  }
  std::vector<char> seen(el.size(), 0);
  for (std::size_t a = 0; a < el.size(); ++a) {
    if (seen[a]) continue;
    SigmaClass c;
    c.rep = el[a];
    std::set<ProjMatrix> members;
    for (std::size_t g = 0; g < el.size(); ++g) {
      ProjMatrix b = inv[g] * el[a] * sig[g];
      members.insert(b);
      if (b == el[a]) c.stabilizer.push_back(el[g]);
    }
    for (const auto& m : members) seen[std::lower_bound(el.begin(), el.end(), m) - el.begin()] = 1;
    c.members.assign(members.begin(), members.end());
    rep.classes.push_back(std::move(c));
  }
  return rep;
}

std::uint64_t count_points(const MPoly& F, unsigned s) {
  const Field* K = F.field();
  auto rep = classify_singularity(F);
  if (rep.status != SingStatus::UniqueDouble || !rep.genus5_ok)
    throw ModelError("point count needs a genus-5 model with one node or cusp");
  FieldPtr E = extension(K, s);
  if (!E) throw FieldError("extension of degree " + std::to_string(s) + " is not available");
  MPoly G = E.get() == K ? F : embed(F, E.get());
  const std::uint32_t Q = E->q();
  std::uint64_t n = 0;
  std::array<Fe, 3> P;
  P = {E->one(), E->zero(), E->zero()};
  n += evaluate(G, P).v == 0;
  for (std::uint32_t a = 0; a < Q; ++a) {
    P = {Fe{a}, E->one(), E->zero()};
    n += evaluate(G, P).v == 0;
  }
  for (std::uint32_t a = 0; a < Q; ++a)
    for (std::uint32_t b = 0; b < Q; ++b) {
      P = {Fe{a}, Fe{b}, E->one()};
      n += evaluate(G, P).v == 0;
    }
  n -= 1;  // the singular point
  switch (rep.kind) {
    case SingKind::SplitNode: return n + 2;
    case SingKind::NonSplitNode: return n + (s % 2 == 0 ? 2 : 0);
    case SingKind::Cusp: return n + 1;
    default: throw ModelError("unexpected singularity");
  }
}

std::vector<IsoClass> isomorphism_classes(const std::vector<MPoly>& forms, Over over, const ClassifyOptions& opt) {
  std::vector<IsoClass> classes;
  std::vector<std::pair<std::uint64_t, std::size_t>> key(forms.size());
  if (over == Over::Base) {
    const bool ext = forms.empty() || forms[0].field()->is_prime();
    for (std::size_t i = 0; i < forms.size(); ++i)
      key[i] = {ext ? count_points(forms[i], 2) : 0, automorphism_group(forms[i], Over::Base, opt).order()};
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> rep_key;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (rep_key[c] != key[i]) continue;
      auto r = are_isomorphic(forms[classes[c].rep], forms[i], over, opt);
      if (!r.isomorphic) continue;
      classes[c].members.push_back(i);
      classes[c].witnesses.push_back(std::move(r));
      placed = true;
    }
    if (!placed) {
      IsoResult self;
      self.isomorphic = true;
      self.field = forms[i].field()->shared_from_this();
      self.witness = ProjMatrix::identity(forms[i].field());
      self.witness_degree = 1;
      classes.push_back({i, {i}, {self}});
      rep_key.push_back(key[i]);
    }
  }
  return classes;
}

}  // namespace sstrig
