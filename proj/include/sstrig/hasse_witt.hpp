#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "sstrig/field.hpp"
#include "sstrig/mpoly.hpp"
#include "sstrig/quintic.hpp"

namespace sstrig {

enum class HWBasis { SplitCusp, NonSplit };

struct HWMatrix {
  const Field* K = nullptr;
  HWBasis basis = HWBasis::SplitCusp;
  std::array<Fe, 25> a{};  // row-major

  Fe at(int l, int m) const { return a[l * 5 + m]; }
  bool is_zero() const;
  int rank() const;
  std::string str() const;
};

class DescentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent triples (i_l, j_l, k_l) of the five basis differentials.
inline constexpr std::array<std::array<int, 3>, 5> kHWTriples = {
    {{3, 1, 1}, {1, 3, 1}, {2, 2, 1}, {2, 1, 2}, {1, 2, 2}}};

// x^{p i_l - i_m} y^{p j_l - j_m} z^{p k_l - k_m}; total degree 5(p - 1).
Mono hw_target(int p, int l, int m);

// How the (i, j) entry of H' is read from h' in the non-split pipeline, with
// B_k = 1/(X^{a_k} Y^{b_k} z^{c_k}).
//   Columns: coefficient of B_i B_j^{-p} = X^{p a_j - a_i} Y^{p b_j - b_i} z^{p c_j - c_i}.
//   Rows: the split-case reading X^{p a_i - a_j} ..., i.e. the transpose.
// Both descend to F_q and give the same rank; Columns is the default.
enum class HWConvention { Columns, Rows };
inline constexpr HWConvention kDefaultConvention = HWConvention::Columns;

// The 25 target coefficients of F^{p-1}. F has variables x, y, z followed by
// n >= 0 unknowns; results are polynomials in the unknowns (n variables).
std::array<MPoly, 25> hw_target_coeffs(const MPoly& F);

// Symbolic split/cusp matrix: entry (l, m) of the result.
std::array<MPoly, 25> hw_split_cusp_symbolic(const MPoly& F);

// Symbolic non-split matrix H = P^(p) H' P^{-1}, descended to the field of F.
// `negate_root` runs the pipeline with -sqrt(eps). Throws DescentError.
std::array<MPoly, 25> hw_nonsplit_symbolic(const MPoly& F, Fe eps, bool negate_root = false,
                                           HWConvention conv = kDefaultConvention);

// The non-descended H over F_q(sqrt eps), for diagnostics.
std::array<MPoly, 25> hw_nonsplit_raw(const MPoly& F, Fe eps, FieldPtr* ext, bool negate_root,
                                      HWConvention conv);

HWMatrix hw_split_cusp(const MPoly& F);
HWMatrix hw_nonsplit(const MPoly& F, Fe eps, bool negate_root = false);
HWMatrix hw_matrix(const QuinticModel& m);

// H == 0. Throws ModelError unless the model has a unique node or an
// ordinary cusp.
bool is_superspecial(const QuinticModel& m);

}  // namespace sstrig
