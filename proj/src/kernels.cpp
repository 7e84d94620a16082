#include "sstrig/kernels.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sstrig {

std::vector<Point> numeric_roots_reference(const PolyList& S, int n, const Field* K) {
  std::vector<Point> out;
  const std::uint32_t q = K->q();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  Point pt(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = n; i-- > 0;) {
      pt[i] = Fe{static_cast<std::uint32_t>(r % q)};
      r /= q;
    }
    bool ok = true;
    for (const auto& f : S)
      if (evaluate(f, pt).v) {
        ok = false;
        break;
      }
    if (ok) out.push_back(pt);
  }
  return out;
}

namespace {

// Terms keep full exponent vectors; they are sorted so that terms agreeing in
// the exponents of variables v+1.. are adjacent for every v.
struct KTerm {
  std::array<std::uint8_t, kMaxVars> e{};
  Fe c;
};
using KPoly = std::vector<KTerm>;

bool key_less(const KTerm& a, const KTerm& b, int n) {
  for (int i = n; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

bool same_tail(const KTerm& a, const KTerm& b, int from, int n) {
  for (int i = from; i < n; ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

class Search {
 public:
  Search(const Field* K, int n) : K_(K), n_(n), q_(K->q()) {
    pw_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
      pw_[c].resize(256);
      Fe acc = K->one();
      for (int e = 0; e < 256; ++e) {
        pw_[c][e] = acc;
        acc = K->mul(acc, Fe{c});
      }
    }
  }

  // Specialize variable v := c. Returns false when some polynomial became a
  // nonzero constant.
  bool step(const std::vector<KPoly>& in, int v, Fe c, std::vector<KPoly>& out) const {
    out.clear();
    for (const auto& f : in) {
      KPoly g;
      std::size_t i = 0;
      while (i < f.size()) {
        std::size_t j = i;
        Fe acc{0};
        while (j < f.size() && same_tail(f[i], f[j], v + 1, n_)) {
          acc = K_->add(acc, K_->mul(f[j].c, pw_[c.v][f[j].e[v]]));
          ++j;
        }
        if (acc.v) {
          KTerm t = f[i];
          t.e[v] = 0;
          t.c = acc;
          g.push_back(t);
        }
        i = j;
      }
      if (g.empty()) continue;
      bool constant = g.size() == 1;
      for (int k = v + 1; constant && k < n_; ++k) constant = g[0].e[k] == 0;
      if (constant) return false;
      out.push_back(std::move(g));
    }
    return true;
  }

  void run(const std::vector<KPoly>& sys, int v, Point& pt, std::vector<Point>& out, NumericStats& st) const {
    ++st.nodes;
    if (v == n_) {
      ++st.leaves;
      out.push_back(pt);
      return;
    }
    if (sys.empty()) {
      // Every completion is a root.
      enumerate_free(v, pt, out, st);
      return;
    }
    std::vector<KPoly> next;
    for (std::uint32_t c = 0; c < q_; ++c) {
      if (!step(sys, v, Fe{c}, next)) continue;
      pt[v] = Fe{c};
      run(next, v + 1, pt, out, st);
    }
    pt[v] = Fe{0};
  }

  void enumerate_free(int v, Point& pt, std::vector<Point>& out, NumericStats& st) const {
    if (v == n_) {
      ++st.leaves;
      out.push_back(pt);
      return;
    }
    for (std::uint32_t c = 0; c < q_; ++c) {
      pt[v] = Fe{c};
      enumerate_free(v + 1, pt, out, st);
    }
    pt[v] = Fe{0};
  }

  std::uint32_t q() const { return q_; }

 private:
  const Field* K_;
  int n_;
  std::uint32_t q_;
  std::vector<std::vector<Fe>> pw_;
};

std::vector<KPoly> compile(const PolyList& S, int n) {
  std::vector<KPoly> sys;
  for (const auto& f : S) {
    if (f.nvars() != n) throw PolyError("numeric kernel: arity mismatch");
    KPoly g;
    for (const auto& t : f.terms()) {
      KTerm k;
      for (int i = 0; i < n; ++i) {
        if (t.m.e[i] > 255) throw PolyError("numeric kernel: exponent too large");
        k.e[i] = static_cast<std::uint8_t>(t.m.e[i]);
      }
      k.c = t.c;
      g.push_back(k);
    }
    std::sort(g.begin(), g.end(), [n](const KTerm& a, const KTerm& b) { return key_less(a, b, n); });
    if (!g.empty()) sys.push_back(std::move(g));
  }
  return sys;
}

}  // namespace

std::vector<Point> numeric_roots(const PolyList& S, int n, const Field* K, bool parallel, NumericStats* stats) {
  std::vector<KPoly> sys = compile(S, n);
  for (const auto& f : sys)
    if (f.size() == 1 && std::all_of(f[0].e.begin(), f[0].e.begin() + n, [](std::uint8_t e) { return e == 0; }))
      return {};
  Search search(K, n);
  std::vector<Point> out;
  NumericStats st;
  if (n == 0) {
    out.push_back({});
    st.nodes = st.leaves = 1;
  } else if (!parallel) {
    Point pt(n);
    search.run(sys, 0, pt, out, st);
  } else {
    const int q = static_cast<int>(search.q());
    std::vector<std::vector<Point>> part(q);
    std::vector<NumericStats> pst(q);
    ++st.nodes;
#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < q; ++c) {
      std::vector<KPoly> next;
      Point pt(n);
      if (sys.empty()) {
        pt[0] = Fe{static_cast<std::uint32_t>(c)};
        search.enumerate_free(1, pt, part[c], pst[c]);
      } else if (search.step(sys, 0, Fe{static_cast<std::uint32_t>(c)}, next)) {
        pt[0] = Fe{static_cast<std::uint32_t>(c)};
        search.run(next, 1, pt, part[c], pst[c]);
      }
    }
    for (int c = 0; c < q; ++c) {
      out.insert(out.end(), part[c].begin(), part[c].end());
      st.nodes += pst[c].nodes;
      st.leaves += pst[c].leaves;
    }
  }
  std::sort(out.begin(), out.end());
  if (stats) *stats = st;
  return out;
}

}  // namespace sstrig
