#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sstrig/mpoly.hpp"

namespace sstrig {

using PolyList = std::vector<MPoly>;

struct GbBudget {
  std::size_t max_pairs = 200000;     // S-pairs reduced
  std::size_t max_basis = 5000;       // polynomials ever added
  std::size_t max_terms = 4000000;    // terms held by the basis
};

struct GbStats {
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduced Groebner basis under grevlex (variable 0 largest). Every element is
// monic; the unit ideal returns {1}. Throws BudgetExceeded.
PolyList groebner_basis(const PolyList& gens, const GbBudget& budget = {}, GbStats* stats = nullptr);

// Full remainder of f modulo G.
MPoly normal_form(const MPoly& f, const PolyList& G);

bool is_unit_ideal(const PolyList& G);

// Checks that every S-polynomial of G reduces to zero.
bool is_groebner(const PolyList& G);

// f vanishes on V(gens) over the algebraic closure (Rabinowitsch).
bool radical_vanishes(const MPoly& f, const PolyList& gens, const GbBudget& budget = {});

// Number of standard monomials of a Groebner basis; nullopt when the ideal is
// not zero-dimensional.
std::optional<std::size_t> standard_monomial_count(const PolyList& G);

// Number of points of V(I) over the algebraic closure for a zero-dimensional
// ideal, via the radical (square-free parts of univariate eliminants).
std::optional<std::size_t> variety_size(const PolyList& gens, const GbBudget& budget = {});

struct SolutionSet {
  std::vector<std::vector<Fe>> points;  // sorted
  bool complete = true;                 // false when truncated by max_solutions
};

// All K-rational points of V(gens). Field equations v^|K| - v are appended,
// solutions are extracted by recursive specialization on the order-least
// variable, and every emitted point is re-checked against `gens`.
SolutionSet solve_over_fq(const PolyList& gens, const Field* K, const GbBudget& budget = {},
                          std::size_t max_solutions = std::numeric_limits<std::size_t>::max());

// Univariate helpers over a field, coefficients low-to-high.
using UPoly = std::vector<Fe>;
UPoly upoly_gcd(const Field& F, UPoly a, UPoly b);
UPoly upoly_squarefree(const Field& F, const UPoly& a);

}  // namespace sstrig
