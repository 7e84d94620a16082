#include "sstrig/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sstrig {

std::size_t mono_hash(const Mono& m) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.deg;
  for (int i = 0; i < kMaxVars; i += 4) {
    std::uint64_t w = std::uint64_t(m.e[i]) | (std::uint64_t(m.e[i + 1]) << 16) | (std::uint64_t(m.e[i + 2]) << 32) |
                      (std::uint64_t(m.e[i + 3]) << 48);
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

// Open-addressing accumulator keyed by monomial.
class Accumulator {
 public:
  Accumulator(const Field* F, std::size_t expected) : F_(F) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.resize(cap);
    vals_.resize(cap);
    used_.assign(cap, 0);
    mask_ = cap - 1;
  }

  void add(const Mono& m, Fe c) {
    if (c.v == 0) return;
    if (2 * (count_ + 1) > keys_.size()) grow();
    std::size_t i = mono_hash(m) & mask_;
    while (used_[i]) {
      if (keys_[i] == m) {
        vals_[i] = F_->add(vals_[i], c);
        return;
      }
      i = (i + 1) & mask_;
    }
    used_[i] = 1;
    keys_[i] = m;
    vals_[i] = c;
    ++count_;
  }

  std::vector<Term> take() {
    std::vector<Term> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (used_[i] && vals_[i].v) out.push_back({keys_[i], vals_[i]});
    return out;
  }

 private:
  void grow() {
    std::vector<Mono> k = std::move(keys_);
    std::vector<Fe> v = std::move(vals_);
    std::vector<std::uint8_t> u = std::move(used_);
    std::size_t cap = k.size() * 2;
    keys_.assign(cap, Mono{});
    vals_.assign(cap, Fe{});
    used_.assign(cap, 0);
    mask_ = cap - 1;
    count_ = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (u[i]) add(k[i], v[i]);
  }

  const Field* F_;
  std::vector<Mono> keys_;
  std::vector<Fe> vals_;
  std::vector<std::uint8_t> used_;
  std::size_t mask_ = 0, count_ = 0;
};

void sort_terms(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
}

void check_compatible(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw PolyError("arity mismatch");
  if (a.field() != b.field() && !(a.field() && b.field() && a.field()->same(*b.field())))
    throw PolyError("coefficient field mismatch");
}

}  // namespace

MPoly::MPoly(const Field* F, int nvars) : F_(F), n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw PolyError("unsupported arity " + std::to_string(nvars));
}

MPoly MPoly::constant(const Field* F, int nvars, Fe c) {
  MPoly p(F, nvars);
  if (c.v) p.t_.push_back({Mono{}, c});
  return p;
}

MPoly MPoly::variable(const Field* F, int nvars, int i) {
  if (i < 0 || i >= nvars) throw PolyError("variable index out of range");
  MPoly p(F, nvars);
  p.t_.push_back({Mono::var(i), F->one()});
  return p;
}

MPoly MPoly::monomial(const Field* F, int nvars, const Mono& m, Fe c) {
  MPoly p(F, nvars);
  for (int i = nvars; i < kMaxVars; ++i)
    if (m.e[i]) throw PolyError("exponent vector exceeds arity");
  if (c.v) p.t_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(const Field* F, int nvars, std::vector<Term> terms) {
  MPoly p(F, nvars);
  sort_terms(terms);
  std::vector<Term>& out = p.t_;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = F->add(out.back().c, t.c);
      if (out.back().c.v == 0) out.pop_back();
    } else if (t.c.v) {
      out.push_back(t);
    }
  }
  return p;
}

bool MPoly::is_one() const { return t_.size() == 1 && t_[0].m.deg == 0 && t_[0].c == Fe{1}; }

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool MPoly::is_homogeneous(int d) const {
  for (const auto& t : t_)
    if (int(t.m.deg) != d) return false;
  return true;
}

Fe MPoly::coeff(const Mono& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Mono& key) { return grevlex_greater(t.m, key); });
  if (it != t_.end() && it->m == m) return it->c;
  return Fe{0};
}

int MPoly::max_exp(int var) const {
  int e = 0;
  for (const auto& t : t_) e = std::max<int>(e, t.m.e[var]);
  return e;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.terms()[i].m == b.terms()[i].m) || a.terms()[i].c != b.terms()[i].c) return false;
  return true;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  const Field* F = a.field();
  MPoly r(F, a.nvars());
  auto& out = r.mutable_terms();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = grevlex_cmp(ta[i].m, tb[j].m);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      Fe s = F->add(ta[i].c, tb[j].c);
      if (s.v) out.push_back({ta[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.mutable_terms()) t.c = a.field()->neg(t.c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly scale(const MPoly& a, Fe c) {
  if (c.v == 0) return MPoly(a.field(), a.nvars());
  MPoly r = a;
  for (auto& t : r.mutable_terms()) t.c = a.field()->mul(t.c, c);
  return r;
}

MPoly mul_term(const MPoly& a, const Mono& m, Fe c) {
  if (c.v == 0) return MPoly(a.field(), a.nvars());
  MPoly r = a;
  for (auto& t : r.mutable_terms()) {
    t.m = mono_mul(t.m, m);
    t.c = a.field()->mul(t.c, c);
  }
  return r;
}

MPoly monic(const MPoly& a) {
  if (a.is_zero() || a.lead().c == Fe{1}) return a;
  return scale(a, a.field()->inv(a.lead().c));
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.field(), a.nvars());
  if (a.size() == 1) return mul_term(b, a.lead().m, a.lead().c);
  if (b.size() == 1) return mul_term(a, b.lead().m, b.lead().c);
  const Field* F = a.field();
  Accumulator acc(F, std::min<std::size_t>(a.size() * b.size(), 1u << 22));
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) acc.add(mono_mul(x.m, y.m), F->mul(x.c, y.c));
  MPoly r(F, a.nvars());
  r.mutable_terms() = acc.take();
  sort_terms(r.mutable_terms());
  return r;
}

MPoly pow(const MPoly& a, unsigned e) {
  MPoly result = MPoly::constant(a.field(), a.nvars(), a.field()->one());
  MPoly base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MPoly pow_naive(const MPoly& a, unsigned e) {
  MPoly result = MPoly::constant(a.field(), a.nvars(), a.field()->one());
  for (unsigned i = 0; i < e; ++i) result = result * a;
  return result;
}

MPoly derivative(const MPoly& a, int var) {
  const Field* F = a.field();
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (t.m.e[var] == 0) continue;
    Fe c = F->mul(t.c, F->from_int(t.m.e[var]));
    if (c.v == 0) continue;
    Term u = t;
    u.m.e[var]--;
    u.m.deg--;
    u.c = c;
    out.push_back(u);
  }
  return MPoly::from_terms(F, a.nvars(), std::move(out));
}

Fe evaluate(const MPoly& a, std::span<const Fe> point) {
  if (int(point.size()) < a.nvars()) throw PolyError("evaluation point has wrong arity");
  const Field* F = a.field();
  Fe acc{0};
  for (const auto& t : a.terms()) {
    Fe v = t.c;
    for (int i = 0; i < a.nvars() && v.v; ++i)
      if (t.m.e[i]) v = F->mul(v, F->pow(point[i], t.m.e[i]));
    acc = F->add(acc, v);
  }
  return acc;
}

MPoly specialize(const MPoly& a, int var, Fe value) {
  const Field* F = a.field();
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Term u = t;
    if (t.m.e[var]) {
      u.c = F->mul(t.c, F->pow(value, t.m.e[var]));
      u.m.deg -= t.m.e[var];
      u.m.e[var] = 0;
    }
    if (u.c.v) out.push_back(u);
  }
  return MPoly::from_terms(F, a.nvars(), std::move(out));
}

MPoly substitute(const MPoly& a, const std::vector<MPoly>& images) {
  if (int(images.size()) != a.nvars()) throw PolyError("substitution needs one image per variable");
  if (images.empty()) return a;
  const Field* E = images[0].field();
  const int m = images[0].nvars();
  for (const auto& img : images) check_compatible(img, images[0]);
  if (!E->contains(*a.field())) throw PolyError("image field does not contain the coefficient field");
  std::vector<std::vector<MPoly>> powers(a.nvars());
  auto power = [&](int i, int e) -> const MPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(MPoly::constant(E, m, E->one()));
    while (int(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  MPoly result(E, m);
  // Group by exponent to limit repeated products.
  for (const auto& t : a.terms()) {
    MPoly prod = MPoly::constant(E, m, t.c);
    for (int i = 0; i < a.nvars(); ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    result = result + prod;
  }
  return result;
}

MPoly substitute_linear(const MPoly& a, const std::vector<MPoly>& images) {
  for (const auto& img : images)
    if (img.total_degree() > 1) throw PolyError("substitution image is not linear");
  return substitute(a, images);
}

MPoly remap(const MPoly& a, const std::vector<int>& new_index, int new_nvars) {
  if (int(new_index.size()) != a.nvars()) throw PolyError("remap table has wrong size");
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Term u;
    u.c = t.c;
    u.m.deg = t.m.deg;
    for (int i = 0; i < a.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (new_index[i] < 0) throw PolyError("remap drops a variable that occurs");
      u.m.e[new_index[i]] = static_cast<std::uint16_t>(u.m.e[new_index[i]] + t.m.e[i]);
    }
    out.push_back(u);
  }
  return MPoly::from_terms(a.field(), new_nvars, std::move(out));
}

MPoly embed(const MPoly& a, const Field* E) {
  if (!E->contains(*a.field())) throw PolyError("target field does not contain the coefficient field");
  MPoly r(E, a.nvars());
  r.mutable_terms() = a.terms();
  return r;
}

std::vector<std::pair<Mono, MPoly>> split_prefix(const MPoly& a, int k) {
  std::map<std::vector<std::uint16_t>, std::vector<Term>> groups;
  for (const auto& t : a.terms()) {
    std::vector<std::uint16_t> key(t.m.e.begin(), t.m.e.begin() + k);
    Term u;
    u.c = t.c;
    for (int i = k; i < a.nvars(); ++i) {
      u.m.e[i - k] = t.m.e[i];
      u.m.deg += t.m.e[i];
    }
    groups[key].push_back(u);
  }
  std::vector<std::pair<Mono, MPoly>> out;
  for (auto& [key, terms] : groups) {
    Mono m;
    for (int i = 0; i < k; ++i) {
      m.e[i] = key[i];
      m.deg += key[i];
    }
    out.emplace_back(m, MPoly::from_terms(a.field(), a.nvars() - k, std::move(terms)));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return grevlex_greater(x.first, y.first); });
  return out;
}

MPoly prefix_coeff(const MPoly& a, int k, const Mono& prefix) {
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    bool match = true;
    for (int i = 0; i < k && match; ++i) match = t.m.e[i] == prefix.e[i];
    if (!match) continue;
    Term u;
    u.c = t.c;
    for (int i = k; i < a.nvars(); ++i) {
      u.m.e[i - k] = t.m.e[i];
      u.m.deg += t.m.e[i];
    }
    out.push_back(u);
  }
  return MPoly::from_terms(a.field(), a.nvars() - k, std::move(out));
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names = {"x", "y", "z"};
  names.resize(std::min(nvars, 3));
  for (int i = 3; i < nvars; ++i) names.push_back("a" + std::to_string(i - 2));
  return names;
}

std::string to_string(const MPoly& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < a.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    std::string c = a.field()->str(t.c);
    if (mono.empty()) {
      out += c;
    } else if (t.c == Fe{1}) {
      out += mono;
    } else {
      if (c.find_first_of("+*") != std::string::npos) c = "(" + c + ")";
      out += c + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const MPoly& a) { return to_string(a, default_var_names(a.nvars())); }

namespace {

class PolyParser {
 public:
  PolyParser(const Field* F, std::string_view s, const std::vector<std::string>& names)
      : F_(F), s_(s), names_(names), n_(static_cast<int>(names.size())) {}

  MPoly run() {
    MPoly v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw PolyError("cannot parse polynomial at offset " + std::to_string(i_) + ": " + why);
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
  MPoly expr() {
    MPoly v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  MPoly term() {
    MPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        v = scale(v, F_->inv(d.lead().c));
      } else {
        return v;
      }
    }
  }
  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    MPoly b = primary();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      unsigned long e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e = e * 10 + (s_[i_] - '0');
        if (e > 100000) fail("exponent too large");
        ++i_;
      }
      if (start == i_) fail("expected exponent");
      return pow(b, static_cast<unsigned>(e));
    }
    return b;
  }
  MPoly primary() {
    skip();
    if (eat('(')) {
      MPoly v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      long long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = (v * 10 + (s_[i_] - '0')) % static_cast<long long>(F_->p());
        ++i_;
      }
      return MPoly::constant(F_, n_, F_->from_int(v));
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) fail(std::string("unexpected character '") + s_[i_] + "'");
    std::string_view name = s_.substr(start, i_ - start);
    for (int k = 0; k < n_; ++k)
      if (names_[k] == name) return MPoly::variable(F_, n_, k);
    if (auto c = F_->symbol_value(name)) return MPoly::constant(F_, n_, *c);
    fail("unknown identifier '" + std::string(name) + "'");
  }

  const Field* F_;
  std::string_view s_;
  const std::vector<std::string>& names_;
  int n_;
  std::size_t i_ = 0;
};

}  // namespace

MPoly parse_poly(const Field* F, std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(F, text, names).run();
}

MPoly parse_form(const Field* F, std::string_view text) { return parse_poly(F, text, default_var_names(3)); }

}  // namespace sstrig
