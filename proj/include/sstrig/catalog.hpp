#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sstrig/field.hpp"
#include "sstrig/mpoly.hpp"
#include "sstrig/quintic.hpp"

namespace sstrig {

// Cartesian product of blocks; each block is an explicit tuple list, all of
// K^arity, or all of (K^x)^arity. Points are addressed by a mixed-radix index
// with the first block most significant.
struct TupleBlock {
  enum class Kind { Explicit, Full, Units };
  Kind kind = Kind::Full;
  int arity = 1;
  std::vector<std::vector<Fe>> tuples;  // Explicit only
};

class TupleSet {
 public:
  TupleSet() = default;
  TupleSet(std::uint32_t q, std::vector<TupleBlock> blocks);

  static TupleSet single();  // the empty product: one point of arity 0
  static TupleSet full(std::uint32_t q, int arity);
  static TupleSet units(std::uint32_t q, int arity);
  static TupleSet explicit_set(std::uint32_t q, std::vector<std::vector<Fe>> tuples);
  TupleSet operator*(const TupleSet& o) const;

  int arity() const;
  std::uint64_t size() const;
  std::vector<Fe> at(std::uint64_t index) const;
  const std::vector<TupleBlock>& blocks() const { return blocks_; }
  std::string describe(const Field& K) const;

 private:
  std::uint32_t q_ = 0;
  std::vector<TupleBlock> blocks_;
};

struct LabeledForm {
  int label;   // the coefficient a_label
  MPoly form;  // p_label
};

struct FixedTerm {
  std::string name;  // b1, b2, ...
  MPoly form;
  std::vector<Fe> choices;
};

// One enumeration run: F = sum fixed + sum a_l p_l. Unknowns are the labels
// in `k`; the others run over A1. Of the unknowns, those in `i` stay symbolic
// in the solve and the rest (ascending label order) run over A2.
struct CaseConfig {
  FieldPtr K;
  std::string tag;   // split1, split2, nonsplit1, nonsplit23, nonsplit2, nonsplit3, cusp
  std::string part;  // sub-run name when a case is split, else empty
  CaseKind kind = CaseKind::SplitNode1;
  int algorithm = 1;  // 1 split/cusp, 2 non-split
  Fe eps{};
  std::vector<LabeledForm> p;
  std::vector<FixedTerm> fixed;
  std::vector<int> k;
  TupleSet A1;
  std::vector<int> i;
  TupleSet A2;
  // Extra restrictions (label, value): on an A2 label they filter A2 points,
  // on an i label they remove that unknown.
  std::vector<std::pair<int, Fe>> pins;

  std::string name() const { return part.empty() ? tag : tag + "." + part; }
  std::vector<int> labels() const;     // all p labels, ascending
  std::vector<int> a1_labels() const;  // labels not in k
  std::vector<int> a2_labels() const;  // k minus i
  std::vector<int> free_labels() const;  // i minus pinned labels
  std::uint64_t variant_count() const;
  std::vector<Fe> variant(std::uint64_t v) const;  // one choice per fixed term
  const MPoly& p_form(int label) const;
  // Concrete form from fixed-term choices and label values.
  MPoly form(const std::vector<Fe>& choices, const std::vector<std::pair<int, Fe>>& values) const;
  void validate() const;
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Run configurations for one field. With exact = true only q in {11, 13, 49}
// is accepted and the configurations follow the published runs; otherwise a
// generic catalog with every coefficient symbolic is built from the normal
// form rules.
std::vector<CaseConfig> case_catalog(const FieldPtr& K, bool exact = true);

// Split-node b1 values: 0 plus cube-class representatives, with zeta^2
// dropped by the x <-> y exchange.
std::vector<Fe> split_b1_values(const Field& K);
// The five (c1, c2) pairs of the second split-node form.
std::vector<std::vector<Fe>> split_c_pairs(const Field& K);
// The canonical eps: nonsquare(K).
Fe canonical_eps(const Field& K);

}  // namespace sstrig
