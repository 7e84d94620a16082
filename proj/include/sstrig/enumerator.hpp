#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "sstrig/catalog.hpp"
#include "sstrig/groebner.hpp"
#include "sstrig/hasse_witt.hpp"

namespace sstrig {

enum class SolverChoice { Auto, Groebner, Numeric };

struct EnumOptions {
  SolverChoice solver = SolverChoice::Auto;
  GbBudget budget;
  // Auto: slices with q^free below this go straight to the numeric kernel.
  std::uint64_t numeric_threshold = 10'000'000;
  // Numeric fallback is refused above this search space; the slice is then
  // recorded as unresolved.
  std::uint64_t numeric_cap = 2'000'000'000ULL;
  std::uint64_t slice_begin = 0;
  std::uint64_t slice_end = std::numeric_limits<std::uint64_t>::max();
  bool parallel = true;
};

enum class SliceStatus { Solved, PinnedOut, Unresolved };

struct SliceRecord {
  std::uint64_t index = 0;
  std::uint64_t variant = 0, a1 = 0, a2 = 0;
  SliceStatus status = SliceStatus::Solved;
  std::string solver;  // "groebner", "numeric", "trivial" or empty
  std::uint64_t search_space = 0;  // q^free
  std::uint64_t roots = 0;
  std::uint64_t survivors = 0;
  std::string note;
};

struct Survivor {
  std::uint64_t slice = 0;
  std::vector<Fe> choices;                   // fixed-term choices
  std::vector<std::pair<int, Fe>> values;    // every label, ascending
  MPoly form;
};

struct RunCounters {
  std::uint64_t roots = 0;
  std::uint64_t rejected_singularity = 0;
  std::uint64_t rejected_reducible = 0;
  std::uint64_t hw_recheck_failures = 0;  // invariant violations
  std::uint64_t duplicates = 0;
};

struct RunReport {
  std::string case_name;
  std::uint32_t q = 0;
  FieldPtr field;  // owns the survivor coefficients
  nlohmann::json manifest;
  std::vector<SliceRecord> slices;  // sorted by index
  std::vector<Survivor> survivors;  // sorted, deduplicated by coefficient vector
  RunCounters counters;
  std::uint64_t slice_total = 0;
  double seconds = 0;  // not serialized unless asked

  std::uint64_t unresolved() const;
  // Every slice of the grid has a record and none is unresolved.
  bool complete() const;
  nlohmann::json to_json(bool with_timing = false) const;
  static RunReport from_json(const FieldPtr& K, const nlohmann::json& j);
};

nlohmann::json config_manifest(const CaseConfig& c);

// Slice grid: fixed-term variants x A1 x A2, index = (variant * |A1| + a1) * |A2| + a2.
std::uint64_t slice_count(const CaseConfig& c);

// Symbolic HW entries for one (variant, A1 point). Variables: free labels
// (config order) followed by the A2 labels (ascending).
std::array<MPoly, 25> case_symbolic_system(const CaseConfig& c, std::uint64_t variant, std::uint64_t a1);

// Runs the slices in [slice_begin, slice_end). With `prior`, slices already
// solved there are copied over and only the rest are run.
RunReport run_case(const CaseConfig& c, const EnumOptions& opt = {}, const RunReport* prior = nullptr);

std::vector<RunReport> run_all(const FieldPtr& K, const EnumOptions& opt = {});

// Survivor filter applied to every root: the unique singular point is of the
// case's kind with genus 5, the form is absolutely irreducible, and a direct
// numeric HW evaluation is zero. Returns "" or one of "singularity",
// "reducible", "hw-recheck".
std::string survivor_check(const CaseConfig& c, const MPoly& F);

std::string to_string(SliceStatus s);

}  // namespace sstrig
