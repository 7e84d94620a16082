#pragma once

#include <string>

#include "sstrig/groebner.hpp"
#include "sstrig/mpoly.hpp"

namespace sstrig {

// Degree split of a candidate factorization: (1,4) or (2,3).
struct FactorShape {
  int low = 2;
  int high = 3;
  // Unknown count: both factors are x^deg plus unknown multiples of the other monomials.
  int unknowns() const;
};

inline constexpr FactorShape kLinearQuartic{1, 4};
inline constexpr FactorShape kQuadraticCubic{2, 3};

// Where a factorization is looked for: the algebraic closure (s == 0) or F_{q^s}.
struct IrredScope {
  unsigned s = 0;
  static IrredScope closure() { return {0}; }
  static IrredScope extension(unsigned s) { return {s}; }
  bool is_closure() const { return s == 0; }
  std::string str() const;
};

// F composed with a coordinate change so that the x^5 coefficient is 1. The
// first column of the change runs over P^2(F_q) in the order (1:0:0),
// (a:1:0), (a:b:1) with a, b ascending by index; the identity is kept when it
// already works.
MPoly normalize_leading(const MPoly& F);

// Coefficients of F - g_low * g_high as polynomials in the template unknowns
// (low factor's unknowns first). F must already be normalized.
PolyList factor_system(const MPoly& F, FactorShape shape);

// Whether F has a factor of the given shape over the scope. Throws
// BudgetExceeded.
bool has_factor(const MPoly& F, FactorShape shape, IrredScope scope, const GbBudget& budget = {});

// Nonzero quintic form F is irreducible over the scope. Throws BudgetExceeded.
bool is_irreducible(const MPoly& F, IrredScope scope, const GbBudget& budget = {});

inline bool is_absolutely_irreducible(const MPoly& F, const GbBudget& budget = {}) {
  return is_irreducible(F, IrredScope::closure(), budget);
}

}  // namespace sstrig
