// Serial reference scan vs pruned kernel vs OpenMP kernel on real slice systems,
// plus a whole-case run with and without slice parallelism.
#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sstrig/enumerator.hpp"
#include "sstrig/kernels.hpp"

using namespace sstrig;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CaseConfig find_case(const FieldPtr& K, const std::string& name) {
  for (auto& c : case_catalog(K))
    if (c.name() == name) return c;
  throw std::runtime_error("no case " + name);
}

// The pinned system of slice (variant 0, a1 0, a2) with the A2 unknowns set.
PolyList slice_system(const CaseConfig& c, std::uint64_t a2, int* nfree) {
  auto S = case_symbolic_system(c, 0, 0);
  const int f = static_cast<int>(c.free_labels().size());
  const auto a2l = c.a2_labels();
  const auto a2v = c.A2.at(a2);
  std::vector<int> idx(f + a2l.size(), -1);
  for (int v = 0; v < f; ++v) idx[v] = v;
  PolyList out;
  for (const auto& e : S) {
    MPoly g = e;
    for (std::size_t j = 0; j < a2l.size(); ++j) g = specialize(g, f + static_cast<int>(j), a2v[j]);
    g = remap(g, idx, f);
    if (!g.is_zero()) out.push_back(g);
  }
  *nfree = f;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d\n", threads);

  auto K13 = Field::prime(13);
  CaseConfig n3 = find_case(K13, "nonsplit3");
  std::printf("%-28s %6s %10s %10s %10s %8s\n", "system", "vars", "reference", "pruned", "parallel", "roots");
  for (std::uint64_t a2 : {0ULL, 5ULL}) {
    int f = 0;
    PolyList sys = slice_system(n3, a2, &f);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Point> ref;
    double tr = -1;
    if (!quick) {
      ref = numeric_roots_reference(sys, f, K13.get());
      tr = seconds_since(t0);
    }
    t0 = std::chrono::steady_clock::now();
    auto a = numeric_roots(sys, f, K13.get(), false);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto b = numeric_roots(sys, f, K13.get(), true);
    double tp = seconds_since(t0);
    if (a != b || (!quick && a != ref)) {
      std::printf("MISMATCH between kernels\n");
      return 1;
    }
    char name[64];
    std::snprintf(name, sizeof name, "q=13 nonsplit3 slice %llu", static_cast<unsigned long long>(a2));
    std::printf("%-28s %6d %10.3f %10.3f %10.3f %8zu\n", name, f, tr, ts, tp, a.size());
  }

  auto K11 = Field::prime(11);
  CaseConfig s2 = find_case(K11, "split2");
  s2.pins = {{3, Fe{0}}, {4, Fe{0}}, {7, Fe{0}}};
  EnumOptions ser, par;
  ser.parallel = false;
  ser.solver = par.solver = SolverChoice::Numeric;
  if (quick) ser.slice_end = par.slice_end = 121;
  auto t0 = std::chrono::steady_clock::now();
  auto rs = run_case(s2, ser);
  double t_ser = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto rp = run_case(s2, par);
  double t_par = seconds_since(t0);
  bool same = rs.to_json().dump() == rp.to_json().dump();
  std::printf("q=11 split2 (a3=a4=a7=0): serial %.2fs, parallel %.2fs, survivors %zu, reports %s\n", t_ser, t_par,
              rp.survivors.size(), same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
