#include "sstrig/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "sstrig/irreducibility.hpp"
#include "sstrig/kernels.hpp"

namespace sstrig {

using nlohmann::json;

std::string to_string(SliceStatus s) {
  switch (s) {
    case SliceStatus::Solved: return "solved";
    case SliceStatus::PinnedOut: return "pinned-out";
    case SliceStatus::Unresolved: return "unresolved";
  }
  return "?";
}

namespace {

SliceStatus status_from(const std::string& s) {
  if (s == "solved") return SliceStatus::Solved;
  if (s == "pinned-out") return SliceStatus::PinnedOut;
  if (s == "unresolved") return SliceStatus::Unresolved;
  throw std::invalid_argument("unknown slice status " + s);
}

std::string form_text(const MPoly& F) { return to_string(F); }

json fe_list(const Field& K, const std::vector<Fe>& v) {
  json a = json::array();
  for (Fe x : v) a.push_back(K.str(x));
  return a;
}

bool kind_matches(CaseKind k, SingKind s) {
  if (k == CaseKind::Cusp) return s == SingKind::Cusp;
  if (is_split(k)) return s == SingKind::SplitNode;
  return s == SingKind::NonSplitNode;
}

Fe pin_value(const CaseConfig& c, int label, bool* found) {
  for (const auto& [l, v] : c.pins)
    if (l == label) {
      *found = true;
      return v;
    }
  *found = false;
  return Fe{0};
}

}  // namespace

std::uint64_t RunReport::unresolved() const {
  return static_cast<std::uint64_t>(
      std::count_if(slices.begin(), slices.end(), [](const SliceRecord& s) { return s.status == SliceStatus::Unresolved; }));
}

bool RunReport::complete() const { return slices.size() == slice_total && unresolved() == 0; }

json RunReport::to_json(bool with_timing) const {
  json j;
  j["case"] = case_name;
  j["q"] = q;
  j["manifest"] = manifest;
  j["slice_total"] = slice_total;
  j["complete"] = complete();
  j["counters"] = {{"roots", counters.roots},
                   {"rejected_singularity", counters.rejected_singularity},
                   {"rejected_reducible", counters.rejected_reducible},
                   {"hw_recheck_failures", counters.hw_recheck_failures},
                   {"duplicates", counters.duplicates}};
  json sl = json::array();
  for (const auto& s : slices)
    sl.push_back({{"index", s.index},
                  {"variant", s.variant},
                  {"a1", s.a1},
                  {"a2", s.a2},
                  {"status", to_string(s.status)},
                  {"solver", s.solver},
                  {"search_space", s.search_space},
                  {"roots", s.roots},
                  {"survivors", s.survivors},
                  {"note", s.note}});
  j["slices"] = sl;
  json sv = json::array();
  for (const auto& s : survivors) {
    const Field& K = *s.form.field();
    json vals = json::array();
    for (const auto& [l, v] : s.values) vals.push_back({l, K.str(v)});
    sv.push_back({{"slice", s.slice},
                  {"choices", fe_list(K, s.choices)},
                  {"values", vals},
                  {"form", form_text(s.form)}});
  }
  j["survivors"] = sv;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

RunReport RunReport::from_json(const FieldPtr& K, const json& j) {
  RunReport r;
  r.case_name = j.at("case").get<std::string>();
  r.q = j.at("q").get<std::uint32_t>();
  r.field = K;
  if (r.q != K->q()) throw std::invalid_argument("report field does not match");
  r.manifest = j.at("manifest");
  r.slice_total = j.at("slice_total").get<std::uint64_t>();
  const auto& c = j.at("counters");
  r.counters.roots = c.at("roots");
  r.counters.rejected_singularity = c.at("rejected_singularity");
  r.counters.rejected_reducible = c.at("rejected_reducible");
  r.counters.hw_recheck_failures = c.at("hw_recheck_failures");
  r.counters.duplicates = c.at("duplicates");
  for (const auto& s : j.at("slices")) {
    SliceRecord x;
    x.index = s.at("index");
    x.variant = s.at("variant");
    x.a1 = s.at("a1");
    x.a2 = s.at("a2");
    x.status = status_from(s.at("status").get<std::string>());
    x.solver = s.at("solver").get<std::string>();
    x.search_space = s.at("search_space");
    x.roots = s.at("roots");
    x.survivors = s.at("survivors");
    x.note = s.at("note").get<std::string>();
    r.slices.push_back(std::move(x));
  }
  for (const auto& s : j.at("survivors")) {
    Survivor v;
    v.slice = s.at("slice");
    for (const auto& c2 : s.at("choices")) v.choices.push_back(K->parse(c2.get<std::string>()));
    for (const auto& pr : s.at("values")) v.values.emplace_back(pr.at(0).get<int>(), K->parse(pr.at(1).get<std::string>()));
    v.form = parse_form(K.get(), s.at("form").get<std::string>());
    r.survivors.push_back(std::move(v));
  }
  return r;
}

json config_manifest(const CaseConfig& c) {
  const Field& K = *c.K;
  json m;
  m["q"] = K.q();
  m["field"] = K.describe();
  m["case"] = c.name();
  m["kind"] = to_string(c.kind);
  m["algorithm"] = c.algorithm;
  if (c.algorithm == 2) m["eps"] = K.str(c.eps);
  json p = json::array();
  for (const auto& f : c.p) p.push_back({{"label", f.label}, {"form", to_string(f.form)}});
  m["p"] = p;
  json fx = json::array();
  for (const auto& f : c.fixed) fx.push_back({{"name", f.name}, {"form", to_string(f.form)}, {"choices", fe_list(K, f.choices)}});
  m["fixed"] = fx;
  m["k"] = c.k;
  m["i"] = c.i;
  m["A1"] = c.A1.describe(K);
  m["A2"] = c.A2.describe(K);
  json pins = json::array();
  for (const auto& [l, v] : c.pins) pins.push_back({l, K.str(v)});
  m["pins"] = pins;
  return m;
}

std::uint64_t slice_count(const CaseConfig& c) { return c.variant_count() * c.A1.size() * c.A2.size(); }

std::array<MPoly, 25> case_symbolic_system(const CaseConfig& c, std::uint64_t variant, std::uint64_t a1) {
  const Field* K = c.K.get();
  const auto fl = c.free_labels();
  const auto a2l = c.a2_labels();
  const int nv = 3 + static_cast<int>(fl.size() + a2l.size());
  if (nv > kMaxVars) throw CatalogError(c.name() + ": too many unknowns");
  auto lift = [&](const MPoly& f) { return remap(f, {0, 1, 2}, nv); };

  const auto choices = c.variant(variant);
  MPoly F(K, nv);
  for (std::size_t j = 0; j < c.fixed.size(); ++j) F = F + scale(lift(c.fixed[j].form), choices[j]);
  const auto a1l = c.a1_labels();
  const auto a1v = c.A1.at(a1);
  for (std::size_t j = 0; j < a1l.size(); ++j) F = F + scale(lift(c.p_form(a1l[j])), a1v[j]);
  for (int l : c.i) {
    bool pinned;
    Fe v = pin_value(c, l, &pinned);
    if (pinned) F = F + scale(lift(c.p_form(l)), v);
  }
  int var = 3;
  for (int l : fl) F = F + lift(c.p_form(l)) * MPoly::variable(K, nv, var++);
  for (int l : a2l) F = F + lift(c.p_form(l)) * MPoly::variable(K, nv, var++);
  return c.algorithm == 2 ? hw_nonsplit_symbolic(F, c.eps) : hw_split_cusp_symbolic(F);
}

std::string survivor_check(const CaseConfig& c, const MPoly& F) {
  auto rep = classify_singularity(F);
  if (rep.status != SingStatus::UniqueDouble || !rep.genus5_ok || !kind_matches(c.kind, rep.kind))
    return "singularity";
  if (!is_absolutely_irreducible(F)) return "reducible";
  try {
    auto m = QuinticModel::make(c.K, c.kind, F, c.eps);
    if (!hw_matrix(m).is_zero()) return "hw-recheck";
  } catch (const ModelError&) {
    return "hw-recheck";
  }
  return "";
}

namespace {

struct SliceOutcome {
  SliceRecord rec;
  std::vector<Survivor> survivors;
  RunCounters counters;
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

SliceOutcome run_slice(const CaseConfig& c, const EnumOptions& opt, const std::array<MPoly, 25>& S,
                       std::uint64_t variant, std::uint64_t a1, std::uint64_t a2, std::uint64_t index,
                       bool parallel_kernel) {
  const Field* K = c.K.get();
  SliceOutcome out;
  SliceRecord& rec = out.rec;
  rec.index = index;
  rec.variant = variant;
  rec.a1 = a1;
  rec.a2 = a2;

  const auto fl = c.free_labels();
  const auto a2l = c.a2_labels();
  const auto a2v = c.A2.at(a2);
  for (std::size_t j = 0; j < a2l.size(); ++j) {
    bool pinned;
    Fe v = pin_value(c, a2l[j], &pinned);
    if (pinned && v != a2v[j]) {
      rec.status = SliceStatus::PinnedOut;
      return out;
    }
  }
  const int f = static_cast<int>(fl.size());
  rec.search_space = ipow(K->q(), fl.size());

  // Pin the A2 unknowns, then drop them.
  std::vector<int> idx(3 + f + a2l.size(), -1);
  for (int v = 0; v < f; ++v) idx[3 + v] = v;
  PolyList sys;
  bool contradiction = false;
  for (const auto& e : S) {
    MPoly g = e;
    for (std::size_t j = 0; j < a2l.size(); ++j) g = specialize(g, f + static_cast<int>(j), a2v[j]);
    MPoly h = remap(g, std::vector<int>(idx.begin() + 3, idx.end()), f);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      contradiction = true;
      break;
    }
    sys.push_back(std::move(h));
  }

  std::vector<Point> roots;
  if (contradiction) {
    rec.solver = "trivial";
  } else {
    bool numeric = opt.solver == SolverChoice::Numeric ||
                   (opt.solver == SolverChoice::Auto && rec.search_space < opt.numeric_threshold) || sys.empty();
    if (!numeric) {
      try {
        auto sol = solve_over_fq(sys, K, opt.budget);
        roots = std::move(sol.points);
        rec.solver = "groebner";
      } catch (const BudgetExceeded& e) {
        rec.note = std::string("groebner budget: ") + e.what();
        if (opt.solver == SolverChoice::Groebner || rec.search_space > opt.numeric_cap) {
          rec.status = SliceStatus::Unresolved;
          return out;
        }
        numeric = true;
      }
    }
    if (numeric) {
      if (rec.search_space > opt.numeric_cap) {
        rec.status = SliceStatus::Unresolved;
        rec.note = "numeric search space above cap";
        return out;
      }
      roots = numeric_roots(sys, f, K, parallel_kernel);
      rec.solver = "numeric";
    }
  }
  rec.roots = roots.size();
  out.counters.roots = roots.size();

  const auto choices = c.variant(variant);
  const auto a1l = c.a1_labels();
  const auto a1v = c.A1.at(a1);
  for (const auto& r : roots) {
    std::vector<std::pair<int, Fe>> values;
    for (std::size_t j = 0; j < a1l.size(); ++j) values.emplace_back(a1l[j], a1v[j]);
    for (std::size_t j = 0; j < a2l.size(); ++j) values.emplace_back(a2l[j], a2v[j]);
    for (int l : c.i) {
      bool pinned;
      Fe v = pin_value(c, l, &pinned);
      if (pinned) values.emplace_back(l, v);
    }
    for (int v = 0; v < f; ++v) values.emplace_back(fl[v], r[v]);
    std::sort(values.begin(), values.end());
    MPoly F = c.form(choices, values);
    std::string why = survivor_check(c, F);
    if (why == "singularity") {
      ++out.counters.rejected_singularity;
    } else if (why == "reducible") {
      ++out.counters.rejected_reducible;
    } else if (why == "hw-recheck") {
      ++out.counters.hw_recheck_failures;
    } else {
      out.survivors.push_back({index, choices, std::move(values), std::move(F)});
    }
  }
  rec.survivors = out.survivors.size();
  return out;
}

bool term_vector_less(const std::vector<Term>& a, const std::vector<Term>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i].m == b[i].m)) return grevlex_greater(a[i].m, b[i].m);
    if (a[i].c != b[i].c) return a[i].c < b[i].c;
  }
  return a.size() < b.size();
}

void add(RunCounters& a, const RunCounters& b) {
  a.roots += b.roots;
  a.rejected_singularity += b.rejected_singularity;
  a.rejected_reducible += b.rejected_reducible;
  a.hw_recheck_failures += b.hw_recheck_failures;
}

}  // namespace

RunReport run_case(const CaseConfig& c, const EnumOptions& opt, const RunReport* prior) {
  c.validate();
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.case_name = c.name();
  rep.q = c.K->q();
  rep.field = c.K;
  rep.manifest = config_manifest(c);
  rep.slice_total = slice_count(c);

  std::map<std::uint64_t, SliceRecord> done;
  std::vector<Survivor> survivors;
  if (prior) {
    if (prior->case_name != rep.case_name || prior->manifest != rep.manifest)
      throw std::invalid_argument("resume: report belongs to a different configuration");
    for (const auto& s : prior->slices)
      if (s.status != SliceStatus::Unresolved) done[s.index] = s;
    for (const auto& s : prior->survivors)
      if (done.count(s.slice)) survivors.push_back(s);
    rep.counters = prior->counters;
    rep.counters.duplicates = 0;
  }

  const std::uint64_t n1 = c.A1.size(), n2 = c.A2.size();
  const std::uint64_t lo = std::min(opt.slice_begin, rep.slice_total);
  const std::uint64_t hi = std::min(opt.slice_end, rep.slice_total);
  for (std::uint64_t outer = lo / n2; outer * n2 < hi; ++outer) {
    const std::uint64_t variant = outer / n1, a1 = outer % n1;
    std::vector<std::uint64_t> todo;
    for (std::uint64_t a2 = 0; a2 < n2; ++a2) {
      std::uint64_t idx = outer * n2 + a2;
      if (idx < lo || idx >= hi || done.count(idx)) continue;
      todo.push_back(a2);
    }
    if (todo.empty()) continue;
    const auto S = case_symbolic_system(c, variant, a1);
    std::vector<SliceOutcome> res(todo.size());
    const bool kernel_parallel = opt.parallel && todo.size() == 1;
    const long long nt = static_cast<long long>(todo.size());
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel && nt > 1)
    for (long long t = 0; t < nt; ++t) {
      std::uint64_t a2 = todo[static_cast<std::size_t>(t)];
      res[static_cast<std::size_t>(t)] = run_slice(c, opt, S, variant, a1, a2, outer * n2 + a2, kernel_parallel);
    }
    for (auto& r : res) {
      done[r.rec.index] = r.rec;
      add(rep.counters, r.counters);
      for (auto& s : r.survivors) survivors.push_back(std::move(s));
    }
  }

  for (auto& [i, s] : done) rep.slices.push_back(s);
  std::sort(survivors.begin(), survivors.end(), [&](const Survivor& a, const Survivor& b) {
    if (!(a.form == b.form)) return term_vector_less(a.form.terms(), b.form.terms());
    return a.slice < b.slice;
  });
  for (auto& s : survivors) {
    if (!rep.survivors.empty() && rep.survivors.back().form == s.form) {
      ++rep.counters.duplicates;
      continue;
    }
    rep.survivors.push_back(std::move(s));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<RunReport> run_all(const FieldPtr& K, const EnumOptions& opt) {
  std::vector<RunReport> out;
  for (const auto& c : case_catalog(K)) out.push_back(run_case(c, opt));
  return out;
}

}  // namespace sstrig
