#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sstrig {

// Element handle. For a prime field v is the residue; for an extension
// L = K[s]/(s^2 + m1 s + m0) the index is u + v_s * |K| with u, v_s in K, so
// elements of K keep their index inside L.
struct Fe {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  struct Private {};

  static FieldPtr prime(std::uint32_t p);
  // F_p[t]/(t^2 + m1 t + m0); the modulus must be irreducible.
  static FieldPtr quadratic(std::uint32_t p, std::uint32_t m1, std::uint32_t m0);
  // Canonical constructions: a = 1 gives F_p, a = 2 gives F_p[t]/(t^2 - n)
  // with n the largest non-square residue (t^2 - 6 for p = 7).
  static FieldPtr make(std::uint32_t p, int a);
  // q = p or p^2, canonical construction.
  static FieldPtr from_order(std::uint32_t q);

  // this[s]/(s^2 - eps) for a non-square eps.
  FieldPtr adjoin_sqrt(Fe eps, std::string symbol = "s") const;

  Field(Private, std::uint32_t p);
  Field(Private, FieldPtr parent, Fe m1, Fe m0, std::string symbol,
        std::optional<Fe> zeta);

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  int degree() const { return degree_; }  // over F_p
  bool is_prime() const { return parent_ == nullptr; }
  const FieldPtr& parent() const { return parent_; }
  const std::string& symbol() const { return symbol_; }
  // Modulus t^2 + m1 t + m0 over the parent.
  Fe mod_m1() const { return m1_; }
  Fe mod_m0() const { return m0_; }
  Fe zeta() const { return zeta_; }
  const std::string& key() const { return key_; }

  // True if `sub` is this field or one of its ancestors.
  bool contains(const Field& sub) const;
  bool same(const Field& o) const { return key_ == o.key_; }

  Fe zero() const { return {0}; }
  Fe one() const { return {1}; }
  Fe from_int(long long n) const;
  Fe gen() const;  // adjoined root; throws on prime fields

  Fe add(Fe a, Fe b) const {
    if (kind_ == Kind::Prime) {
      std::uint32_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    if (!add_tab_.empty()) return {add_tab_[std::size_t(a.v) * q_ + b.v]};
    return add_slow(a, b);
  }
  Fe neg(Fe a) const { return {neg_[a.v]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[log_[a.v] + log_[b.v]]};
  }
  Fe inv(Fe a) const {
    if (a.v == 0) throw FieldError("inverse of zero");
    return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
  }
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, long long e) const;
  // Discrete log base zeta (a != 0) and its inverse.
  std::uint32_t log(Fe a) const { return log_[a.v]; }
  Fe exp(std::uint64_t k) const { return {exp_[k % (q_ - 1)]}; }

  bool is_square(Fe a) const { return a.v == 0 || log_[a.v] % 2 == 0; }
  std::optional<Fe> sqrt(Fe a) const;
  std::uint32_t order(Fe a) const;  // multiplicative order
  Fe frobenius(Fe a) const { return pow(a, p_); }
  // Generator of Gal(this/parent): a -> a^{|parent|}.
  Fe conj(Fe a) const;
  bool in_parent(Fe a) const { return parent_ && a.v < parent_->q(); }
  Fe coord_u(Fe a) const { return {a.v % parent_->q()}; }
  Fe coord_v(Fe a) const { return {a.v / parent_->q()}; }
  Fe from_coords(Fe u, Fe v) const { return {u.v + v.v * parent_->q()}; }

  std::string str(Fe a) const;
  // Accepts integers, tower symbols, + - * / ^ and parentheses.
  Fe parse(std::string_view text) const;
  // Returns the element for a tower symbol, if any.
  std::optional<Fe> symbol_value(std::string_view name) const;

  std::string describe() const;

 private:
  enum class Kind { Prime, Ext };
  Fe add_slow(Fe a, Fe b) const;
  Fe mul_slow(Fe a, Fe b) const;
  Fe pow_slow(Fe a, std::uint64_t e) const;
  void build_tables(std::optional<Fe> zeta);

  Kind kind_;
  std::uint32_t p_ = 0, q_ = 0;
  int degree_ = 1;
  FieldPtr parent_;
  Fe m1_{}, m0_{};
  std::string symbol_;
  std::string key_;
  Fe zeta_{};
  std::vector<std::uint32_t> log_, exp_, neg_;
  std::vector<std::uint16_t> add_tab_;
};

bool is_prime_number(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Representative sets used by the normal forms.
Fe nonsquare(const Field& F);
std::vector<Fe> cube_class_reps(const Field& F);
std::vector<Fe> nonsplit_b_reps(const Field& F);

struct SqrtEps {
  FieldPtr ext;
  Fe root;
};
SqrtEps sqrt_eps(const FieldPtr& F, Fe eps);

}  // namespace sstrig
