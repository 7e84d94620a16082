#include "sstrig/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sstrig {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(Private, std::uint32_t p) : kind_(Kind::Prime), p_(p), q_(p), degree_(1) {
  key_ = std::to_string(p);
  build_tables(std::nullopt);
}

Field::Field(Private, FieldPtr parent, Fe m1, Fe m0, std::string symbol, std::optional<Fe> zeta)
    : kind_(Kind::Ext),
      p_(parent->p()),
      q_(parent->q() * parent->q()),
      degree_(parent->degree() * 2),
      parent_(std::move(parent)),
      m1_(m1),
      m0_(m0),
      symbol_(std::move(symbol)) {
  key_ = parent_->key() + "[" + symbol_ + ":" + std::to_string(m1.v) + "," + std::to_string(m0.v) + "]";
  build_tables(zeta);
}

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p < 5) throw FieldError("characteristic must be at least 5");
  return std::make_shared<const Field>(Private{}, p);
}

namespace {

bool has_root(const Field& K, Fe m1, Fe m0) {
  for (std::uint32_t i = 0; i < K.q(); ++i) {
    Fe t{i};
    if (K.add(K.add(K.mul(t, t), K.mul(m1, t)), m0) == Fe{0}) return true;
  }
  return false;
}

}  // namespace

FieldPtr Field::quadratic(std::uint32_t p, std::uint32_t m1, std::uint32_t m0) {
  auto K = prime(p);
  Fe a = K->from_int(m1), b = K->from_int(m0);
  if (has_root(*K, a, b)) throw FieldError("modulus is reducible over F_" + std::to_string(p));
  return std::make_shared<const Field>(Private{}, K, a, b, "t", std::nullopt);
}

FieldPtr Field::make(std::uint32_t p, int a) {
  auto K = prime(p);
  if (a == 1) return K;
  if (a != 2) throw FieldError("extension degree must be 1 or 2");
  std::uint32_t n = 0;
  for (std::uint32_t r = p - 1; r >= 1; --r) {
    if (!K->is_square(Fe{r})) {
      n = r;
      break;
    }
  }
  std::optional<Fe> zeta;
  Fe m0 = K->neg(Fe{n});
  if (p == 7) {
    // -3 - t
    zeta = Fe{4 + 6 * 7};
  }
  return std::make_shared<const Field>(Private{}, K, Fe{0}, m0, "t", zeta);
}

FieldPtr Field::from_order(std::uint32_t q) {
  if (is_prime_number(q)) return make(q, 1);
  for (std::uint32_t p = 2; p * p <= q; ++p)
    if (p * p == q && is_prime_number(p)) return make(p, 2);
  throw FieldError("unsupported field order " + std::to_string(q));
}

FieldPtr Field::adjoin_sqrt(Fe eps, std::string symbol) const {
  if (is_square(eps)) throw FieldError("element " + str(eps) + " is a square");
  auto self = shared_from_this();
  return std::make_shared<const Field>(Private{}, self, Fe{0}, neg(eps), std::move(symbol), std::nullopt);
}

bool Field::contains(const Field& sub) const {
  for (const Field* f = this; f; f = f->parent_.get())
    if (f->same(sub)) return true;
  return false;
}

Fe Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Fe Field::gen() const {
  if (is_prime()) throw FieldError("prime field has no adjoined generator");
  return {parent_->q()};
}

Fe Field::add_slow(Fe a, Fe b) const {
  if (kind_ == Kind::Prime) return {(a.v + b.v) % p_};
  const Field& K = *parent_;
  return from_coords(K.add(coord_u(a), coord_u(b)), K.add(coord_v(a), coord_v(b)));
}

Fe Field::mul_slow(Fe a, Fe b) const {
  if (kind_ == Kind::Prime) return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
  const Field& K = *parent_;
  Fe u1 = coord_u(a), v1 = coord_v(a), u2 = coord_u(b), v2 = coord_v(b);
  Fe vv = K.mul(v1, v2);
  Fe u = K.sub(K.mul(u1, u2), K.mul(m0_, vv));
  Fe v = K.sub(K.add(K.mul(u1, v2), K.mul(u2, v1)), K.mul(m1_, vv));
  return from_coords(u, v);
}

Fe Field::pow_slow(Fe a, std::uint64_t e) const {
  Fe r{1};
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

void Field::build_tables(std::optional<Fe> zeta) {
  neg_.resize(q_);
  for (std::uint32_t i = 0; i < q_; ++i) {
    if (kind_ == Kind::Prime) {
      neg_[i] = (p_ - i) % p_;
    } else {
      Fe a{i};
      neg_[i] = from_coords(parent_->neg(coord_u(a)), parent_->neg(coord_v(a))).v;
    }
  }
  if (kind_ == Kind::Ext && q_ <= 2401) {
    add_tab_.resize(std::size_t(q_) * q_);
    for (std::uint32_t i = 0; i < q_; ++i)
      for (std::uint32_t j = 0; j < q_; ++j) add_tab_[std::size_t(i) * q_ + j] = static_cast<std::uint16_t>(add_slow({i}, {j}).v);
  }
  const auto fac = prime_factors(q_ - 1);
  auto primitive = [&](Fe g) {
    if (g.v == 0) return false;
    if (pow_slow(g, q_ - 1) != Fe{1}) return false;
    for (auto r : fac)
      if (pow_slow(g, (q_ - 1) / r) == Fe{1}) return false;
    return true;
  };
  if (zeta) {
    if (!primitive(*zeta)) throw FieldError("supplied zeta is not primitive");
    zeta_ = *zeta;
  } else {
    std::uint32_t i = 1;
    while (!primitive(Fe{i})) ++i;
    zeta_ = Fe{i};
  }
  exp_.assign(2 * std::size_t(q_ - 1), 0);
  log_.assign(q_, 0);
  Fe x{1};
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = exp_[k + q_ - 1] = x.v;
    log_[x.v] = k;
    x = mul_slow(x, zeta_);
  }
}

Fe Field::pow(Fe a, long long e) const {
  if (a.v == 0) {
    if (e == 0) return {1};
    if (e < 0) throw FieldError("inverse of zero");
    return {0};
  }
  long long m = q_ - 1;
  long long k = (static_cast<long long>(log_[a.v]) * (e % m)) % m;
  if (k < 0) k += m;
  return {exp_[k]};
}

std::optional<Fe> Field::sqrt(Fe a) const {
  if (a.v == 0) return Fe{0};
  if (log_[a.v] % 2) return std::nullopt;
  return Fe{exp_[log_[a.v] / 2]};
}

std::uint32_t Field::order(Fe a) const {
  if (a.v == 0) throw FieldError("zero has no multiplicative order");
  std::uint32_t m = q_ - 1;
  std::uint32_t l = log_[a.v];
  std::uint32_t g = std::gcd(m, l);
  return m / g;
}

Fe Field::conj(Fe a) const {
  if (is_prime()) return a;
  return pow(a, parent_->q());
}

namespace {

bool needs_parens(const std::string& s) {
  return s.find_first_of("+*") != std::string::npos || (!s.empty() && s[0] == '-');
}

}  // namespace

std::string Field::str(Fe a) const {
  if (kind_ == Kind::Prime) return std::to_string(a.v);
  Fe u = coord_u(a), v = coord_v(a);
  if (v.v == 0) return parent_->str(u);
  std::string out;
  if (u.v != 0) out = parent_->str(u) + "+";
  if (v.v == 1) return out + symbol_;
  std::string vs = parent_->str(v);
  if (needs_parens(vs)) vs = "(" + vs + ")";
  return out + vs + "*" + symbol_;
}

std::optional<Fe> Field::symbol_value(std::string_view name) const {
  if (is_prime()) return std::nullopt;
  if (name == symbol_) return gen();
  return parent_->symbol_value(name);
}

namespace {

class ElemParser {
 public:
  ElemParser(const Field& F, std::string_view s) : F_(F), s_(s) {}

  Fe run() {
    Fe v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw FieldError("cannot parse field element '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Fe expr() {
    Fe v = term();
    for (;;) {
      if (eat('+')) v = F_.add(v, term());
      else if (eat('-')) v = F_.sub(v, term());
      else return v;
    }
  }
  Fe term() {
    Fe v = unary();
    for (;;) {
      if (eat('*')) v = F_.mul(v, unary());
      else if (eat('/')) v = F_.div(v, unary());
      else return v;
    }
  }
  Fe unary() {
    if (eat('-')) return F_.neg(unary());
    if (eat('+')) return unary();
    Fe b = primary();
    if (eat('^')) {
      bool negative = eat('-');
      long long e = integer();
      return F_.pow(b, negative ? -e : e);
    }
    return b;
  }
  long long integer() {
    skip();
    std::size_t start = i_;
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++i_;
    }
    if (i_ == start) fail("expected integer");
    return v;
  }
  Fe primary() {
    skip();
    if (eat('(')) {
      Fe v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) return F_.from_int(integer());
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("unexpected character");
    auto name = s_.substr(start, i_ - start);
    auto v = F_.symbol_value(name);
    if (!v) fail("unknown symbol '" + std::string(name) + "'");
    return *v;
  }

  const Field& F_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Fe Field::parse(std::string_view text) const { return ElemParser(*this, text).run(); }

std::string Field::describe() const {
  if (is_prime()) return "F_" + std::to_string(p_);
  std::ostringstream os;
  os << parent_->describe() << "[" << symbol_ << "]/(" << symbol_ << "^2";
  if (m1_.v) os << "+" << parent_->str(m1_) << "*" << symbol_;
  if (m0_.v) os << "+" << (needs_parens(parent_->str(m0_)) ? "(" + parent_->str(m0_) + ")" : parent_->str(m0_));
  os << ")";
  return os.str();
}

Fe nonsquare(const Field& F) {
  if (F.is_prime()) {
    for (std::uint32_t n = 2; n < F.p(); ++n)
      if (!F.is_square(Fe{n})) return Fe{n};
  }
  return F.zeta();
}

std::vector<Fe> cube_class_reps(const Field& F) {
  if ((F.q() - 1) % 3 != 0) return {F.one()};
  return {F.one(), F.zeta(), F.mul(F.zeta(), F.zeta())};
}

std::vector<Fe> nonsplit_b_reps(const Field& F) {
  if ((F.q() + 1) % 3 != 0) return {F.zero()};
  const Fe eps = nonsquare(F);
  auto E = F.adjoin_sqrt(eps);
  const std::uint32_t q = F.q();
  // First primitive element r + s*sqrt(eps), ordered by (r, s).
  Fe alpha{};
  bool found = false;
  for (std::uint32_t r = 0; r < q && !found; ++r)
    for (std::uint32_t s = 0; s < q && !found; ++s) {
      Fe g = E->from_coords({r}, {s});
      if (g.v && E->order(g) == E->q() - 1) {
        alpha = g;
        found = true;
      }
    }
  // Cosets of K^x (E^x)^3 are indexed by the discrete log mod 3.
  auto coset = [&](Fe b) { return E->log(E->from_coords(F.one(), b)) % 3; };
  std::vector<Fe> row, col;
  bool row_ok = true;
  for (int k = 0; k < 3; ++k) {
    Fe g = E->pow(alpha, k);
    // (1, b) parallel to (1, 0) A, with A the matrix of multiplication by g.
    Fe r = E->coord_u(g), s = E->coord_v(g);
    if (r.v == 0) {
      row_ok = false;
      break;
    }
    row.push_back(F.div(F.mul(eps, s), r));
  }
  if (row_ok) {
    std::vector<std::uint32_t> cs;
    for (Fe b : row) cs.push_back(coset(b));
    std::sort(cs.begin(), cs.end());
    row_ok = cs[0] != cs[1] && cs[1] != cs[2];
  }
  std::vector<Fe> out;
  if (row_ok) {
    out = row;
  } else {
    // Column reading: g / r = 1 + (s / r) sqrt(eps) lies in the coset of g.
    for (int k = 0; k < 3; ++k) {
      for (int j = 0;; ++j) {
        Fe g = E->pow(alpha, k + 3 * j);
        Fe r = E->coord_u(g), s = E->coord_v(g);
        if (r.v == 0) continue;
        out.push_back(F.div(s, r));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SqrtEps sqrt_eps(const FieldPtr& F, Fe eps) {
  if (F->is_square(eps)) throw FieldError("element " + F->str(eps) + " is a square");
  if (F->is_prime()) {
    auto canon = Field::make(F->p(), 2);
    if (canon->mod_m1() == Fe{0} && canon->mod_m0() == F->neg(eps)) return {canon, canon->gen()};
  }
  auto E = F->adjoin_sqrt(eps);
  return {E, E->gen()};
}

}  // namespace sstrig
