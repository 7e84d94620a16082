#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sstrig/catalog.hpp"
#include "sstrig/classify.hpp"
#include "sstrig/enumerator.hpp"
#include "sstrig/hasse_witt.hpp"
#include "sstrig/irreducibility.hpp"

using namespace sstrig;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDiscrepancy = 1, kUsage = 2, kIncomplete = 3, kInvariant = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint32_t q = 11;
  std::string modulus;  // "m1,m0" for t^2 + m1 t + m0
  int threads = 0;
  GbBudget budget;
};

FieldPtr make_field(const Common& c) {
  if (c.modulus.empty()) return Field::from_order(c.q);
  std::uint32_t m1 = 0, m0 = 0;
  char comma = 0;
  std::istringstream is(c.modulus);
  if (!(is >> m1 >> comma >> m0) || comma != ',') throw UsageError("--modulus expects m1,m0");
  for (std::uint32_t p = 5; p * p <= c.q; ++p)
    if (p * p == c.q) return Field::quadratic(p, m1, m0);
  throw UsageError("--modulus needs q = p^2");
}

MPoly read_poly(const Field* K, const std::string& text) {
  MPoly F = parse_form(K, text);
  if (F.is_zero() || !F.is_homogeneous(F.total_degree())) throw UsageError("--poly must be a nonzero form");
  return F;
}

// Model type from the z^3 part: xy, x^2 - eps y^2, or x^2.
QuinticModel detect_model(const FieldPtr& K, const MPoly& F) {
  const Field& k = *K;
  Fe xy = F.coeff(Mono::of({1, 1, 3})), xx = F.coeff(Mono::of({2, 0, 3})), yy = F.coeff(Mono::of({0, 2, 3}));
  if (xy.v && !xx.v && !yy.v) return QuinticModel::make(K, CaseKind::SplitNode2, scale(F, k.inv(xy)));
  if (xx.v && !xy.v && yy.v) {
    Fe eps = k.neg(k.div(yy, xx));
    return QuinticModel::make(K, CaseKind::NonSplitNode2, scale(F, k.inv(xx)), eps);
  }
  if (xx.v && !xy.v && !yy.v) return QuinticModel::make(K, CaseKind::Cusp, scale(F, k.inv(xx)));
  throw UsageError("the z^3 part must be x*y, x^2 - eps*y^2 or x^2");
}

void print_matrix(const HWMatrix& H) { std::cout << H.str(); }

std::string yesno(bool b) { return b ? "yes" : "no"; }

json matrix_json(const ProjMatrix& M) {
  json a = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(M.K->str(M.at(r, c)));
    a.push_back(row);
  }
  return a;
}

CaseConfig config_for(const FieldPtr& K, const std::string& name, bool generic) {
  for (auto& c : case_catalog(K, !generic))
    if (c.name() == name) return c;
  throw UsageError("unknown case " + name);
}

std::vector<std::pair<int, Fe>> parse_pins(const Field& K, const std::vector<std::string>& pins) {
  std::vector<std::pair<int, Fe>> out;
  for (const auto& p : pins) {
    auto eq = p.find('=');
    if (p.size() < 3 || p[0] != 'a' || eq == std::string::npos) throw UsageError("--pin expects aN=value");
    out.emplace_back(std::stoi(p.substr(1, eq - 1)), K.parse(p.substr(eq + 1)));
  }
  return out;
}

void write_json(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << j.dump(2) << "\n";
}

json read_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read " + path);
  return json::parse(is);
}

// Rebuilds the configuration a report was produced from.
CaseConfig config_from_manifest(const FieldPtr& K, const json& m) {
  std::string name = m.at("case");
  CaseConfig c;
  bool found = false;
  for (bool exact : {true, false}) {
    try {
      for (auto& x : case_catalog(K, exact))
        if (x.name() == name) {
          c = x;
          found = true;
        }
    } catch (const CatalogError&) {
    }
    if (found) break;
  }
  if (!found) throw UsageError("report names an unknown case " + name);
  c.pins.clear();
  for (const auto& p : m.at("pins")) c.pins.emplace_back(p.at(0).get<int>(), K->parse(p.at(1).get<std::string>()));
  return c;
}

int cmd_enumerate(const Common& cm, const std::string& case_name, const std::string& slice, const std::string& out,
                  const std::string& resume, const std::string& solver, std::uint64_t threshold,
                  const std::vector<std::string>& pins, bool generic) {
  FieldPtr K = make_field(cm);
  EnumOptions opt;
  opt.budget = cm.budget;
  opt.numeric_threshold = threshold;
  if (solver == "groebner") opt.solver = SolverChoice::Groebner;
  else if (solver == "numeric") opt.solver = SolverChoice::Numeric;
  if (!slice.empty()) {
    auto colon = slice.find(':');
    if (colon == std::string::npos) throw UsageError("--slice expects begin:end");
    opt.slice_begin = std::stoull(slice.substr(0, colon));
    if (colon + 1 < slice.size()) opt.slice_end = std::stoull(slice.substr(colon + 1));
  }
  std::vector<CaseConfig> configs;
  if (case_name == "all") {
    configs = case_catalog(K, !generic);
  } else {
    configs.push_back(config_for(K, case_name, generic));
  }
  json all = json::array();
  int code = kOk;
  std::optional<RunReport> prior;
  if (!resume.empty()) {
    if (configs.size() != 1) throw UsageError("--resume needs a single --case");
    prior = RunReport::from_json(K, read_json(resume));
  }
  std::printf("%-22s %10s %10s %10s %10s %8s\n", "case", "slices", "unresolved", "roots", "survivors", "seconds");
  for (auto& c : configs) {
    auto extra = parse_pins(*K, pins);
    c.pins.insert(c.pins.end(), extra.begin(), extra.end());
    RunReport r = run_case(c, opt, prior ? &*prior : nullptr);
    std::printf("%-22s %10zu %10llu %10llu %10zu %8.1f\n", r.case_name.c_str(), r.slices.size(),
                static_cast<unsigned long long>(r.unresolved()), static_cast<unsigned long long>(r.counters.roots),
                r.survivors.size(), r.seconds);
    for (const auto& s : r.survivors) std::printf("  %s\n", to_string(s.form).c_str());
    if (r.counters.hw_recheck_failures) code = kInvariant;
    else if (!r.complete() && code == kOk) code = kIncomplete;
    all.push_back(r.to_json());
  }
  if (!out.empty()) write_json(out, all.size() == 1 ? all[0] : all);
  return code;
}

int cmd_hw(const Common& cm, const std::string& poly) {
  FieldPtr K = make_field(cm);
  MPoly F = read_poly(K.get(), poly);
  QuinticModel m = detect_model(K, F);
  HWMatrix H = hw_matrix(m);
  print_matrix(H);
  std::cout << "rank " << H.rank() << "\n";
  auto rep = classify_singularity(m.form, cm.budget);
  bool genus5 = rep.status == SingStatus::UniqueDouble && rep.genus5_ok;
  if (!genus5) {
    std::cout << "verdict: not a genus-5 model (" << to_string(rep.status) << ")\n";
    return kOk;
  }
  std::cout << "verdict: " << (H.is_zero() ? "superspecial" : "not superspecial") << "\n";
  return kOk;
}

IrredScope parse_scope(const std::string& over, std::uint32_t q) {
  if (over == "closure") return IrredScope::closure();
  // q, or q^s
  std::string base = over, exp = "1";
  auto caret = over.find('^');
  if (caret != std::string::npos) {
    base = over.substr(0, caret);
    exp = over.substr(caret + 1);
  }
  if (base != "q" && base != std::to_string(q)) throw UsageError("--over expects closure, q or q^s");
  int s = std::stoi(exp);
  if (s < 1) throw UsageError("--over: s must be positive");
  return IrredScope::extension(static_cast<unsigned>(s));
}

int cmd_irred(const Common& cm, const std::string& poly, const std::string& over) {
  FieldPtr K = make_field(cm);
  MPoly F = read_poly(K.get(), poly);
  IrredScope sc = parse_scope(over, K->q());
  bool irr = is_irreducible(F, sc, cm.budget);
  std::cout << (irr ? "irreducible" : "reducible") << " over " << sc.str() << "\n";
  return kOk;
}

Over parse_over(const std::string& s) {
  if (s == "q") return Over::Base;
  if (s == "closure") return Over::Closure;
  throw UsageError("--over expects q or closure");
}

int cmd_classify(const Common& cm, const std::vector<std::string>& inputs, const std::string& over_s,
                 const std::string& out) {
  FieldPtr K = make_field(cm);
  Over over = parse_over(over_s);
  std::vector<MPoly> forms;
  for (const auto& path : inputs) {
    json j = read_json(path);
    std::vector<json> reports = j.is_array() ? j.get<std::vector<json>>() : std::vector<json>{j};
    for (const auto& r : reports) {
      RunReport rep = RunReport::from_json(K, r);
      for (const auto& s : rep.survivors) forms.push_back(s.form);
    }
  }
  ClassifyOptions opt;
  opt.budget = cm.budget;
  auto classes = isomorphism_classes(forms, over, opt);
  std::cout << forms.size() << " forms, " << classes.size() << " classes over " << over_s << "\n";
  json jc = json::array();
  int code = kOk;
  for (const auto& c : classes) {
    const MPoly& R = forms[c.rep];
    std::cout << "  " << to_string(R) << "  (" << c.members.size() << " forms)";
    json e = {{"representative", to_string(R)}, {"size", c.members.size()}};
    if (over == Over::Base && K->is_prime()) {
      auto A = automorphism_group(R, Over::Base, opt);
      std::uint64_t pts = count_points(R, 2);
      std::cout << "  Aut " << A.name() << " order " << A.order() << "  #C(F_q^2) " << pts;
      e["aut_order"] = A.order();
      e["aut_name"] = A.name();
      e["points_q2"] = pts;
    }
    json mem = json::array();
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      json w = {{"form", to_string(forms[c.members[k]])}};
      const auto& r = c.witnesses[k];
      if (r.witness) w["witness"] = matrix_json(*r.witness);
      if (r.witness_unresolved) {
        w["witness"] = "unresolved";
        code = kIncomplete;
      }
      mem.push_back(w);
    }
    e["members"] = mem;
    jc.push_back(e);
    std::cout << "\n";
  }
  if (!out.empty()) write_json(out, {{"over", over_s}, {"classes", jc}});
  return code;
}

int cmd_aut(const Common& cm, const std::string& poly, const std::string& over_s, bool sigma) {
  FieldPtr K = make_field(cm);
  MPoly F = read_poly(K.get(), poly);
  ClassifyOptions opt;
  opt.budget = cm.budget;
  Over over = parse_over(over_s);
  auto A = automorphism_group(F, over, opt);
  std::cout << "order " << A.order() << "  type " << A.name() << (A.complete ? "" : "  (enumeration incomplete)")
            << "\n";
  for (std::size_t g = 0; g < A.generators.size(); ++g) {
    std::cout << "  generator " << A.generators[g].str() << "  order " << A.generators[g].order() << "\n";
    if (A.name() == "unrecognized") {
      std::cout << "    regular image:";
      for (int x : A.permutations[g]) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  if (sigma) {
    auto S = sigma_classes(A, K->q());
    std::cout << S.classes.size() << " sigma-classes\n";
    for (const auto& c : S.classes)
      std::cout << "  " << c.rep.str() << "  class size " << c.members.size() << "  stabilizer order "
                << c.stabilizer.size() << "\n";
  }
  return A.complete ? kOk : kIncomplete;
}

int cmd_points(const Common& cm, const std::string& poly, unsigned s) {
  FieldPtr K = make_field(cm);
  MPoly F = read_poly(K.get(), poly);
  std::uint64_t n = count_points(F, s);
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < s; ++i) Q *= K->q();
  std::cout << n << "\n";
  // Hasse-Weil for genus 5: |n - Q - 1| <= 10 sqrt(Q).
  long long d = static_cast<long long>(n) - static_cast<long long>(Q) - 1;
  if (static_cast<unsigned long long>(d * d) == 100ULL * Q) std::cout << (d > 0 ? "maximal" : "minimal") << "\n";
  return kOk;
}

int cmd_verify(const Common& cm, const std::string& in) {
  FieldPtr K = make_field(cm);
  json j = read_json(in);
  std::vector<json> reports = j.is_array() ? j.get<std::vector<json>>() : std::vector<json>{j};
  std::size_t bad = 0, checked = 0;
  bool incomplete = false;
  for (const auto& rj : reports) {
    RunReport r = RunReport::from_json(K, rj);
    CaseConfig c = config_from_manifest(K, r.manifest);
    if (config_manifest(c) != r.manifest) {
      std::cout << r.case_name << ": manifest does not match the catalog configuration\n";
      ++bad;
    }
    if (!r.complete()) incomplete = true;
    for (std::size_t k = 0; k < r.survivors.size(); ++k) {
      const auto& s = r.survivors[k];
      ++checked;
      std::string why;
      if (!(c.form(s.choices, s.values) == s.form)) why = "form does not match its coefficients";
      else why = survivor_check(c, s.form);
      if (!why.empty()) {
        std::cout << r.case_name << " survivor " << k << " (" << to_string(s.form) << "): " << why << "\n";
        ++bad;
      }
      if (!(parse_form(K.get(), to_string(s.form)) == s.form)) {
        std::cout << r.case_name << " survivor " << k << ": text does not round-trip\n";
        ++bad;
      }
    }
  }
  std::cout << checked << " survivors checked, " << bad << " discrepancies" << (incomplete ? ", report incomplete" : "")
            << "\n";
  if (bad) return kDiscrepancy;
  return incomplete ? kIncomplete : kOk;
}

int cmd_singular(const Common& cm, const std::string& poly) {
  FieldPtr K = make_field(cm);
  MPoly F = read_poly(K.get(), poly);
  auto rep = classify_singularity(F, cm.budget);
  std::cout << "status " << to_string(rep.status) << "\n";
  if (rep.status == SingStatus::UniqueDouble) {
    std::cout << "point (" << K->str(rep.point[0]) << ":" << K->str(rep.point[1]) << ":" << K->str(rep.point[2])
              << ")\nkind " << to_string(rep.kind) << "\ngenus 5 " << yesno(rep.genus5_ok) << "\n";
  }
  if (!rep.detail.empty()) std::cout << rep.detail << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superspecial trigonal genus-5 curves via quintic plane models"};
  app.set_config("--config", "", "key = value file presetting options");
  app.require_subcommand(1);
  Common cm;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--q", cm.q, "field order p or p^2")->capture_default_str();
    s->add_option("--modulus", cm.modulus, "m1,m0 for F_p[t]/(t^2 + m1 t + m0)");
    s->add_option("--threads", cm.threads, "worker threads (0 = all)");
    s->add_option("--max-pairs", cm.budget.max_pairs, "Groebner S-pair budget");
    s->add_option("--max-basis", cm.budget.max_basis, "Groebner basis size budget");
    s->add_option("--max-terms", cm.budget.max_terms, "Groebner term budget");
  };

  std::string case_name = "all", slice, out, resume, solver = "auto", poly, over = "closure", in;
  std::uint64_t threshold = 10'000'000;
  std::vector<std::string> pins, inputs;
  bool generic = false, sigma = false;
  unsigned ext = 2;

  auto* en = app.add_subcommand("enumerate", "run case configurations");
  add_common(en);
  en->add_option("--case", case_name, "case name, or all")->capture_default_str();
  en->add_option("--slice", slice, "slice range begin:end");
  en->add_option("--out", out, "report path (JSON)");
  en->add_option("--resume", resume, "prior report; only its unresolved or missing slices are run");
  en->add_option("--solver", solver, "auto, groebner or numeric")->check(CLI::IsMember({"auto", "groebner", "numeric"}));
  en->add_option("--numeric-threshold", threshold, "auto solver: numeric below this q^free");
  en->add_option("--pin", pins, "restrict a coefficient, e.g. a3=0");
  en->add_flag("--generic", generic, "generic catalog (every coefficient symbolic)");

  auto* hw = app.add_subcommand("hw", "Hasse-Witt matrix of a quintic model");
  add_common(hw);
  hw->add_option("--poly", poly, "quintic form")->required();

  auto* ir = app.add_subcommand("irred", "irreducibility test");
  add_common(ir);
  ir->add_option("--poly", poly, "form")->required();
  ir->add_option("--over", over, "closure, q or q^s")->capture_default_str();

  auto* cl = app.add_subcommand("classify", "isomorphism classes of report survivors");
  add_common(cl);
  cl->add_option("--in", inputs, "report(s)")->required();
  cl->add_option("--over", over, "q or closure")->capture_default_str();
  cl->add_option("--out", out, "classes (JSON)");

  auto* au = app.add_subcommand("aut", "automorphism group");
  add_common(au);
  au->add_option("--poly", poly, "quintic form")->required();
  au->add_option("--over", over, "q or closure")->capture_default_str();
  au->add_flag("--sigma", sigma, "also list sigma-conjugacy classes");

  auto* pt = app.add_subcommand("points", "points on the desingularization");
  add_common(pt);
  pt->add_option("--poly", poly, "quintic form")->required();
  pt->add_option("--ext", ext, "extension degree s (1 or 2)")->capture_default_str();

  auto* ve = app.add_subcommand("verify", "re-check a report's survivors");
  add_common(ve);
  ve->add_option("--in", in, "report")->required();

  auto* si = app.add_subcommand("singular", "singularity analysis");
  add_common(si);
  si->add_option("--poly", poly, "quintic form")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kUsage;
  }
#ifdef _OPENMP
  if (cm.threads > 0) omp_set_num_threads(cm.threads);
#endif
  try {
    if (*en) return cmd_enumerate(cm, case_name, slice, out, resume, solver, threshold, pins, generic);
    if (*hw) return cmd_hw(cm, poly);
    if (*ir) return cmd_irred(cm, poly, over);
    if (*cl) return cmd_classify(cm, inputs, over, out);
    if (*au) return cmd_aut(cm, poly, over, sigma);
    if (*pt) return cmd_points(cm, poly, ext);
    if (*ve) return cmd_verify(cm, in);
    if (*si) return cmd_singular(cm, poly);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kIncomplete;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
