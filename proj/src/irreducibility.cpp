#include "sstrig/irreducibility.hpp"

#include <array>
#include <vector>

namespace sstrig {

namespace {

// Exponent vectors of degree-d monomials in x, y, z; x^d first.
std::vector<std::array<int, 3>> monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

// Template factor: x^d has coefficient 1, the others are unknowns first..first+k.
std::vector<MPoly> template_coeffs(const Field* K, int nvars, int d, int first) {
  std::vector<MPoly> c;
  auto ms = monomials(d);
  c.push_back(MPoly::constant(K, nvars, K->one()));
  for (std::size_t i = 1; i < ms.size(); ++i) c.push_back(MPoly::variable(K, nvars, first + static_cast<int>(i) - 1));
  return c;
}

int mono_count(int d) { return (d + 1) * (d + 2) / 2; }

MPoly power_mod(const MPoly& base, unsigned long long e, const PolyList& G) {
  MPoly result = MPoly::constant(base.field(), base.nvars(), base.field()->one());
  MPoly b = normal_form(base, G);
  while (e) {
    if (e & 1) result = normal_form(result * b, G);
    e >>= 1;
    if (e) b = normal_form(b * b, G);
  }
  return result;
}

}  // namespace

int FactorShape::unknowns() const { return mono_count(low) - 1 + mono_count(high) - 1; }

std::string IrredScope::str() const { return s == 0 ? "closure" : "F_q^" + std::to_string(s); }

MPoly normalize_leading(const MPoly& F) {
  const Field* K = F.field();
  if (F.nvars() != 3 || F.is_zero()) throw PolyError("normalize_leading needs a nonzero form in x, y, z");
  const int d = F.total_degree();
  const Mono xd = Mono::var(0, d);
  Fe lc = F.coeff(xd);
  MPoly G = F;
  if (!lc.v) {
    const std::uint32_t q = K->q();
    std::vector<std::array<Fe, 3>> pts;
    pts.push_back({K->one(), K->zero(), K->zero()});
    for (std::uint32_t a = 0; a < q; ++a) pts.push_back({Fe{a}, K->one(), K->zero()});
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) pts.push_back({Fe{a}, Fe{b}, K->one()});
    bool found = false;
    for (const auto& P : pts) {
      if (!evaluate(F, P).v) continue;
      // Column 0 is P; the other two columns are standard vectors completing it.
      int piv = P[0].v ? 0 : P[1].v ? 1 : 2;
      std::array<int, 2> rest{};
      for (int i = 0, k = 0; i < 3; ++i)
        if (i != piv) rest[k++] = i;
      std::vector<MPoly> img;
      for (int r = 0; r < 3; ++r) {
        std::vector<Term> t;
        if (P[r].v) t.push_back({Mono::var(0), P[r]});
        if (r == rest[0]) t.push_back({Mono::var(1), K->one()});
        if (r == rest[1]) t.push_back({Mono::var(2), K->one()});
        img.push_back(MPoly::from_terms(K, 3, t));
      }
      G = substitute_linear(F, img);
      found = true;
      break;
    }
    if (!found) throw PolyError("form vanishes on every rational point");
    lc = G.coeff(xd);
  }
  return scale(G, K->inv(lc));
}

PolyList factor_system(const MPoly& F, FactorShape shape) {
  const Field* K = F.field();
  const int d = shape.low + shape.high;
  if (F.nvars() != 3 || !F.is_homogeneous(d)) throw PolyError("factor_system degree mismatch");
  if (F.coeff(Mono::var(0, d)) != K->one()) throw PolyError("factor_system needs a unit leading x coefficient");
  const int n = shape.unknowns();
  auto lo = template_coeffs(K, n, shape.low, 0);
  auto hi = template_coeffs(K, n, shape.high, mono_count(shape.low) - 1);
  auto ml = monomials(shape.low);
  PolyList out;
  for (const auto& mu : monomials(d)) {
    MPoly acc = MPoly::constant(K, n, F.coeff(Mono::of({mu[0], mu[1], mu[2]})));
    for (std::size_t i = 0; i < ml.size(); ++i) {
      const auto& a = ml[i];
      int bx = mu[0] - a[0], by = mu[1] - a[1], bz = mu[2] - a[2];
      if (bx < 0 || by < 0 || bz < 0) continue;
      // Index of (bx, by, bz) in monomials(high).
      int r = shape.high - bx;
      std::size_t j = static_cast<std::size_t>(r * (r + 1) / 2 + (r - by));
      acc = acc - lo[i] * hi[j];
    }
    if (!acc.is_zero()) out.push_back(std::move(acc));
  }
  return out;
}

bool has_factor(const MPoly& F, FactorShape shape, IrredScope scope, const GbBudget& budget) {
  MPoly N = normalize_leading(F);
  PolyList sys = factor_system(N, shape);
  if (sys.empty()) return true;
  PolyList G = groebner_basis(sys, budget);
  if (is_unit_ideal(G)) return false;
  if (scope.is_closure()) return true;
  // Monic templates make the system zero-dimensional, so b^{q^s} reduces
  // cheaply modulo G; appending NF(b^{q^s}) - b generates the same ideal as
  // appending the field equations themselves.
  const Field* K = F.field();
  unsigned long long Q = 1;
  for (unsigned i = 0; i < scope.s; ++i) Q *= K->q();
  const int n = shape.unknowns();
  PolyList ext = G;
  for (int v = 0; v < n; ++v) {
    MPoly b = MPoly::variable(K, n, v);
    ext.push_back(power_mod(b, Q, G) - b);
  }
  return !is_unit_ideal(groebner_basis(ext, budget));
}

bool is_irreducible(const MPoly& F, IrredScope scope, const GbBudget& budget) {
  if (F.is_zero() || F.nvars() != 3 || !F.is_homogeneous(F.total_degree()))
    throw PolyError("irreducibility test needs a nonzero form in x, y, z");
  const int d = F.total_degree();
  if (d <= 1) return true;
  for (int low = 1; 2 * low <= d; ++low)
    if (has_factor(F, FactorShape{low, d - low}, scope, budget)) return false;
  return true;
}

}  // namespace sstrig
