#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sstrig/field.hpp"
#include "sstrig/groebner.hpp"
#include "sstrig/mpoly.hpp"

namespace sstrig {

enum class CaseKind { SplitNode1, SplitNode2, NonSplitNode1, NonSplitNode2, NonSplitNode3, Cusp };

const char* to_string(CaseKind k);
bool is_split(CaseKind k);
bool is_nonsplit(CaseKind k);

enum class NodeType { Split, NonSplit, Degenerate };
const char* to_string(NodeType t);

enum class SingStatus { Smooth, UniqueDouble, MultipleOrWorse };
enum class SingKind { None, SplitNode, NonSplitNode, Cusp };
const char* to_string(SingStatus s);
const char* to_string(SingKind k);

using ProjPoint = std::array<Fe, 3>;

struct SingularityReport {
  SingStatus status = SingStatus::Smooth;
  SingKind kind = SingKind::None;
  ProjPoint point{};  // valid for UniqueDouble
  // Node, or cusp whose cubic term is nonzero along the tangent (delta = 1).
  bool genus5_ok = false;
  std::string detail;
};

// A quintic model in x, y, z of one of the normal-form families.
struct QuinticModel {
  FieldPtr K;
  CaseKind kind = CaseKind::SplitNode1;
  MPoly form;
  Fe eps{};  // non-split cases only
  std::vector<std::pair<std::string, Fe>> params;

  // Checks degree, homogeneity and the z^3 leading structure.
  static QuinticModel make(FieldPtr K, CaseKind kind, MPoly form, Fe eps = {},
                           std::vector<std::pair<std::string, Fe>> params = {});
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Q(x, y) read off as A x^2 + B xy + C y^2 from any polynomial whose
// variables 0 and 1 are x and y.
NodeType node_split_type(const MPoly& Q);

// The z^3 coefficient form of a quintic (a binary quadratic in x, y).
MPoly z3_part(const MPoly& F);

// Decides the singular locus of V(F) over the algebraic closure. Uniqueness
// is certified with Groebner radical membership, not by point search.
SingularityReport classify_singularity(const MPoly& F, const GbBudget& budget = {});

// Rational singular points by direct scan of P^2(K).
std::vector<ProjPoint> rational_singular_points(const MPoly& F);

// Linear substitution sending (0:0:1) to P (x, y, z are replaced by the rows
// of a matrix whose last column is P).
MPoly move_to_origin(const MPoly& F, const ProjPoint& P);

// Applies (x, y, z) -> M (x, y, z) with M a 3x3 row-major matrix.
MPoly linear_change(const MPoly& F, const std::array<Fe, 9>& M);

}  // namespace sstrig
