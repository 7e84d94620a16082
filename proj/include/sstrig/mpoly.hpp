#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sstrig/field.hpp"

namespace sstrig {

inline constexpr int kMaxVars = 16;

// Exponent vector. Unused slots stay zero so comparisons can run over the
// whole array regardless of arity.
struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  std::uint16_t operator[](int i) const { return e[i]; }
  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }

  static Mono var(int i, int power = 1) {
    Mono m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }
  static Mono of(std::initializer_list<int> exps) {
    Mono m;
    int i = 0;
    for (int x : exps) {
      m.e[i++] = static_cast<std::uint16_t>(x);
      m.deg += x;
    }
    return m;
  }
};

// Graded reverse lexicographic order with variable 0 the largest.
inline int grevlex_cmp(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}
inline bool grevlex_greater(const Mono& a, const Mono& b) { return grevlex_cmp(a, b) > 0; }

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}
inline bool mono_divides(const Mono& a, const Mono& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}
// b / a, assuming a | b.
inline Mono mono_div(const Mono& b, const Mono& a) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  m.deg = b.deg - a.deg;
  return m;
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    m.deg += m.e[i];
  }
  return m;
}
inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}
std::size_t mono_hash(const Mono& m);

struct Term {
  Mono m;
  Fe c;
};

class PolyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sparse polynomial over a finite field in `nvars` variables. Terms are kept
// sorted by decreasing grevlex order with nonzero coefficients. The field is
// held by raw pointer: the FieldPtr that owns it must outlive the polynomial.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Field* F, int nvars);

  static MPoly constant(const Field* F, int nvars, Fe c);
  static MPoly variable(const Field* F, int nvars, int i);
  static MPoly monomial(const Field* F, int nvars, const Mono& m, Fe c);
  // Sorts, merges equal monomials and drops zeros.
  static MPoly from_terms(const Field* F, int nvars, std::vector<Term> terms);

  const Field* field() const { return F_; }
  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  bool is_one() const;
  const Term& lead() const { return t_.front(); }
  int total_degree() const;
  bool is_homogeneous(int d) const;
  Fe coeff(const Mono& m) const;
  int max_exp(int var) const;
  bool uses_var(int var) const { return max_exp(var) > 0; }

  // Raw access for algorithms that maintain the invariants themselves.
  std::vector<Term>& mutable_terms() { return t_; }

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  const Field* F_ = nullptr;
  int n_ = 0;
  std::vector<Term> t_;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly scale(const MPoly& a, Fe c);
MPoly mul_term(const MPoly& a, const Mono& m, Fe c);
// Makes the leading coefficient 1 (zero stays zero).
MPoly monic(const MPoly& a);
MPoly pow(const MPoly& a, unsigned e);
MPoly pow_naive(const MPoly& a, unsigned e);
MPoly derivative(const MPoly& a, int var);
Fe evaluate(const MPoly& a, std::span<const Fe> point);
// Sets variable `var` to `value`; arity unchanged.
MPoly specialize(const MPoly& a, int var, Fe value);
// Composition: variable i of `a` is replaced by images[i]. Images share a
// field that contains the field of `a` and a common arity.
MPoly substitute(const MPoly& a, const std::vector<MPoly>& images);
// As substitute, but every image must have total degree <= 1.
MPoly substitute_linear(const MPoly& a, const std::vector<MPoly>& images);
// Re-indexes variables: old variable i becomes new_index[i] (or must be
// absent when new_index[i] < 0).
MPoly remap(const MPoly& a, const std::vector<int>& new_index, int new_nvars);
// Views the polynomial over an extension field (same element indices).
MPoly embed(const MPoly& a, const Field* E);
// Groups terms by the exponents of the first k variables. Each group is
// returned as (prefix monomial, coefficient polynomial in the remaining
// n - k variables, re-indexed from 0).
std::vector<std::pair<Mono, MPoly>> split_prefix(const MPoly& a, int k);
// Coefficient of the prefix monomial in the first k variables, as a
// polynomial in the remaining variables.
MPoly prefix_coeff(const MPoly& a, int k, const Mono& prefix);
// Applies a map to every coefficient (e.g. Frobenius).
template <class Fn>
MPoly map_coeffs(const MPoly& a, Fn fn) {
  std::vector<Term> t;
  t.reserve(a.size());
  for (const auto& x : a.terms()) t.push_back({x.m, fn(x.c)});
  return MPoly::from_terms(a.field(), a.nvars(), std::move(t));
}

// Variable names used by the text grammar.
std::vector<std::string> default_var_names(int nvars);
std::string to_string(const MPoly& a, const std::vector<std::string>& names);
std::string to_string(const MPoly& a);
MPoly parse_poly(const Field* F, std::string_view text, const std::vector<std::string>& names);
// Grammar default: x, y, z.
MPoly parse_form(const Field* F, std::string_view text);

}  // namespace sstrig
