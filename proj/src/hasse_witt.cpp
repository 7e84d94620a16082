#include "sstrig/hasse_witt.hpp"

#include <sstream>
#include <unordered_map>

namespace sstrig {

bool HWMatrix::is_zero() const {
  for (Fe x : a)
    if (x.v) return false;
  return true;
}

int HWMatrix::rank() const {
  auto m = a;
  int r = 0;
  for (int c = 0; c < 5 && r < 5; ++c) {
    int piv = -1;
    for (int i = r; i < 5; ++i)
      if (m[i * 5 + c].v) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < 5; ++j) std::swap(m[r * 5 + j], m[piv * 5 + j]);
    Fe inv = K->inv(m[r * 5 + c]);
    for (int i = 0; i < 5; ++i) {
      if (i == r || !m[i * 5 + c].v) continue;
      Fe f = K->mul(m[i * 5 + c], inv);
      for (int j = 0; j < 5; ++j) m[i * 5 + j] = K->sub(m[i * 5 + j], K->mul(f, m[r * 5 + j]));
    }
    ++r;
  }
  return r;
}

std::string HWMatrix::str() const {
  std::ostringstream os;
  for (int l = 0; l < 5; ++l) {
    os << "[";
    for (int m = 0; m < 5; ++m) os << (m ? " " : "") << K->str(at(l, m));
    os << "]\n";
  }
  return os.str();
}

Mono hw_target(int p, int l, int m) {
  const auto& tl = kHWTriples[l];
  const auto& tm = kHWTriples[m];
  return Mono::of({p * tl[0] - tm[0], p * tl[1] - tm[1], p * tl[2] - tm[2]});
}

namespace {

struct MonoKeyHash {
  std::size_t operator()(const Mono& m) const { return mono_hash(m); }
};

}  // namespace

std::array<MPoly, 25> hw_target_coeffs(const MPoly& F) {
  const Field* K = F.field();
  const int p = static_cast<int>(K->p());
  const int n = F.nvars() - 3;
  if (n < 0) throw PolyError("Hasse-Witt input needs variables x, y, z");
  if ((p - 1) % 2) throw PolyError("odd characteristic expected");
  // h = G^2 with G = F^{(p-1)/2}; only the 25 target coefficients are formed.
  MPoly G = pow(F, static_cast<unsigned>((p - 1) / 2));
  auto groups = split_prefix(G, 3);
  std::unordered_map<Mono, std::size_t, MonoKeyHash> index;
  for (std::size_t g = 0; g < groups.size(); ++g) index.emplace(groups[g].first, g);

  std::array<MPoly, 25> out;
  const Fe two = K->from_int(2);
  for (int l = 0; l < 5; ++l)
    for (int m = 0; m < 5; ++m) {
      const Mono T = hw_target(p, l, m);
      MPoly acc(K, n);
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const Mono& mu = groups[g].first;
        if (!mono_divides(mu, T)) continue;
        auto it = index.find(mono_div(T, mu));
        if (it == index.end() || it->second < g) continue;
        MPoly prod = groups[g].second * groups[it->second].second;
        acc = acc + (it->second == g ? prod : scale(prod, two));
      }
      out[l * 5 + m] = std::move(acc);
    }
  return out;
}

std::array<MPoly, 25> hw_split_cusp_symbolic(const MPoly& F) { return hw_target_coeffs(F); }

std::array<MPoly, 25> hw_nonsplit_raw(const MPoly& F, Fe eps, FieldPtr* ext_out, bool negate_root,
                                      HWConvention conv) {
  const Field* K = F.field();
  FieldPtr Kp = K->shared_from_this();
  SqrtEps se = sqrt_eps(Kp, eps);
  const Field* E = se.ext.get();
  Fe s = negate_root ? E->neg(se.root) : se.root;
  const int nv = F.nvars();

  // x -> (X + Y)/2, y -> (X - Y)/(-2 s); other variables fixed.
  Fe half = E->inv(E->from_int(2));
  Fe c = E->inv(E->neg(E->mul(E->from_int(2), s)));
  std::vector<MPoly> img;
  img.push_back(MPoly::from_terms(E, nv, {{Mono::var(0), half}, {Mono::var(1), half}}));
  img.push_back(MPoly::from_terms(E, nv, {{Mono::var(0), c}, {Mono::var(1), E->neg(c)}}));
  for (int v = 2; v < nv; ++v) img.push_back(MPoly::variable(E, nv, v));
  MPoly Fp = substitute_linear(F, img);

  auto C = hw_target_coeffs(Fp);
  std::array<MPoly, 25> Hp;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) Hp[i * 5 + j] = conv == HWConvention::Rows ? C[i * 5 + j] : C[j * 5 + i];

  Fe si = E->inv(s), nsi = E->neg(si), o = E->one(), z = E->zero();
  std::array<Fe, 25> P = {o, o,  z, z, z,  si, nsi, z, z, z,  z,  z, o,
                          z, z,  z, z, z,  o,   o,  z, z, z,  si, nsi};
  std::array<Fe, 25> Pp, Pi;
  for (int k = 0; k < 25; ++k) Pp[k] = E->pow(P[k], E->p());
  // P^{-1} by Gauss-Jordan.
  {
    std::array<Fe, 25> A = P;
    for (int k = 0; k < 25; ++k) Pi[k] = (k % 6 == 0) ? o : z;
    for (int col = 0; col < 5; ++col) {
      int piv = col;
      while (A[piv * 5 + col].v == 0) ++piv;
      for (int j = 0; j < 5; ++j) {
        std::swap(A[col * 5 + j], A[piv * 5 + j]);
        std::swap(Pi[col * 5 + j], Pi[piv * 5 + j]);
      }
      Fe inv = E->inv(A[col * 5 + col]);
      for (int j = 0; j < 5; ++j) {
        A[col * 5 + j] = E->mul(A[col * 5 + j], inv);
        Pi[col * 5 + j] = E->mul(Pi[col * 5 + j], inv);
      }
      for (int i = 0; i < 5; ++i) {
        if (i == col || A[i * 5 + col].v == 0) continue;
        Fe f = A[i * 5 + col];
        for (int j = 0; j < 5; ++j) {
          A[i * 5 + j] = E->sub(A[i * 5 + j], E->mul(f, A[col * 5 + j]));
          Pi[i * 5 + j] = E->sub(Pi[i * 5 + j], E->mul(f, Pi[col * 5 + j]));
        }
      }
    }
  }

  const int n = nv - 3;
  std::array<MPoly, 25> left;  // P^(p) H'
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      MPoly acc(E, n);
      for (int k = 0; k < 5; ++k)
        if (Pp[i * 5 + k].v) acc = acc + scale(Hp[k * 5 + j], Pp[i * 5 + k]);
      left[i * 5 + j] = std::move(acc);
    }
  std::array<MPoly, 25> H;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      MPoly acc(E, n);
      for (int k = 0; k < 5; ++k)
        if (Pi[k * 5 + j].v) acc = acc + scale(left[i * 5 + k], Pi[k * 5 + j]);
      H[i * 5 + j] = std::move(acc);
    }
  if (ext_out) *ext_out = se.ext;
  return H;
}

std::array<MPoly, 25> hw_nonsplit_symbolic(const MPoly& F, Fe eps, bool negate_root, HWConvention conv) {
  FieldPtr ext;
  auto H = hw_nonsplit_raw(F, eps, &ext, negate_root, conv);
  const Field* K = F.field();
  std::array<MPoly, 25> out;
  for (int k = 0; k < 25; ++k) {
    for (const auto& t : H[k].terms())
      if (t.c.v >= K->q()) throw DescentError("Hasse-Witt entry does not lie in the base field");
    out[k] = MPoly::from_terms(K, H[k].nvars(), H[k].terms());
  }
  return out;
}

namespace {

HWMatrix to_numeric(const Field* K, HWBasis basis, const std::array<MPoly, 25>& S) {
  HWMatrix h;
  h.K = K;
  h.basis = basis;
  for (int k = 0; k < 25; ++k) h.a[k] = S[k].is_zero() ? K->zero() : S[k].terms()[0].c;
  return h;
}

}  // namespace

HWMatrix hw_split_cusp(const MPoly& F) {
  if (F.nvars() != 3) throw PolyError("numeric Hasse-Witt input must be a form in x, y, z");
  return to_numeric(F.field(), HWBasis::SplitCusp, hw_target_coeffs(F));
}

HWMatrix hw_nonsplit(const MPoly& F, Fe eps, bool negate_root) {
  if (F.nvars() != 3) throw PolyError("numeric Hasse-Witt input must be a form in x, y, z");
  return to_numeric(F.field(), HWBasis::NonSplit, hw_nonsplit_symbolic(F, eps, negate_root));
}

HWMatrix hw_matrix(const QuinticModel& m) {
  return is_nonsplit(m.kind) ? hw_nonsplit(m.form, m.eps) : hw_split_cusp(m.form);
}

bool is_superspecial(const QuinticModel& m) {
  auto rep = classify_singularity(m.form);
  if (rep.status != SingStatus::UniqueDouble || !rep.genus5_ok)
    throw ModelError("model is not a genus-5 quintic with a unique node or ordinary cusp");
  return hw_matrix(m).is_zero();
}

}  // namespace sstrig
