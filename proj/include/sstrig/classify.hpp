#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sstrig/groebner.hpp"
#include "sstrig/quintic.hpp"

namespace sstrig {

// Projective transformation fixing (0:0:1), normalized to
//   [a b 0]
//   [c d 0]
//   [e f 1]
// It acts on forms by (M.F)(v) = F(M v).
struct ProjMatrix {
  const Field* K = nullptr;
  std::array<Fe, 9> m{};  // row-major

  static ProjMatrix identity(const Field* K);
  Fe at(int r, int c) const { return m[r * 3 + c]; }
  ProjMatrix operator*(const ProjMatrix& o) const;
  ProjMatrix inverse() const;
  // Entrywise q-th power.
  ProjMatrix frobenius(std::uint64_t q) const;
  ProjMatrix over(const Field* E) const;  // same entries in a larger field
  int order() const;
  bool is_identity() const;
  MPoly act(const MPoly& F) const;
  std::string str() const;
  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) { return a.m == b.m; }
  friend bool operator<(const ProjMatrix& a, const ProjMatrix& b) { return a.m < b.m; }
};

enum class Over { Base, Closure };

struct ClassifyOptions {
  GbBudget budget;
  // Witnesses over the closure are looked for in F_{q^m}, m = 1 .. max_degree.
  // Only fields of degree at most 2 over the prime field are available.
  unsigned max_degree = 2;
};

// Coefficients of M.F - lambda F2 together with lambda g (ad - bc) - 1, in
// the unknowns a, b, c, d, e, f, lambda, g (variables 0..7).
PolyList isomorphism_system(const MPoly& F, const MPoly& F2);

struct IsoResult {
  bool isomorphic = false;
  FieldPtr field;  // owns the witness entries
  std::optional<ProjMatrix> witness;  // M with M.F = lambda F2
  unsigned witness_degree = 0;        // m with the witness over F_{q^m}
  bool witness_unresolved = false;    // closure says yes but no witness within the cap
};

IsoResult are_isomorphic(const MPoly& F, const MPoly& F2, Over over, const ClassifyOptions& opt = {});

struct GroupInfo {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center = 0;
  std::vector<std::size_t> element_orders;  // sorted multiset
  std::string name;                         // "unrecognized" when not pinned down
};

struct AutGroup {
  FieldPtr field;  // field holding the entries
  std::vector<ProjMatrix> elements;  // sorted
  std::vector<ProjMatrix> generators;
  GroupInfo info;
  // Images of the generators in the regular permutation representation
  // (points 1..|G| in element order); always faithful.
  std::vector<std::vector<int>> permutations;
  bool complete = true;  // closure only: enumeration matched the variety size
  std::size_t order() const { return elements.size(); }
  std::string name() const { return info.name; }
};

AutGroup automorphism_group(const MPoly& F, Over over, const ClassifyOptions& opt = {});

// Fingerprint of a finite group given by its multiplication table, matched
// against a catalog of groups of order at most 60.
GroupInfo recognize_group(const std::vector<std::vector<int>>& table);

struct SigmaClass {
  ProjMatrix rep;
  std::vector<ProjMatrix> members;
  std::vector<ProjMatrix> stabilizer;  // {g : rep = g^-1 rep g^sigma}
};

struct SigmaClassReport {
  std::vector<SigmaClass> classes;
};

// Twisted conjugacy a ~ g^-1 a g^sigma on G with sigma the entrywise q-th power.
SigmaClassReport sigma_classes(const AutGroup& G, std::uint64_t q);

// Points of the desingularization over F_{q^s}: points of V(F) in P^2(F_{q^s})
// away from the singular point (0:0:1), plus its rational branches.
std::uint64_t count_points(const MPoly& F, unsigned s);

struct IsoClass {
  std::size_t rep = 0;             // index into the input list
  std::vector<std::size_t> members;
  std::vector<IsoResult> witnesses;  // rep -> member, per member
};

// Classes of the input forms under isomorphism. Each form is compared with
// the current class representatives; forms with different point counts over
// F_{q^2} or different automorphism group orders are never compared.
std::vector<IsoClass> isomorphism_classes(const std::vector<MPoly>& forms, Over over,
                                          const ClassifyOptions& opt = {});

}  // namespace sstrig
