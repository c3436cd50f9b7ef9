#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agt/cardinal.hpp"

namespace agt {

// The closed atom universe. Every representable group is a formal direct
// sum of these with cardinal multiplicities:
//   Z          infinite cyclic
//   Cyc(p,k)   cyclic of order p^k
//   Prufer(p)  Z(p^inf)
//   Q          rationals
//   PAdic(p)   J_p, the p-adic integers
//   TorProd(p) T_p := t(prod_n Z(p^n)), torsion part of the full product
enum class AtomKind { Z, Cyc, Prufer, Q, PAdic, TorProd };

struct Atom {
  AtomKind kind = AtomKind::Z;
  long long p = 0;  // prime, unused for Z/Q
  int k = 0;        // exponent, Cyc only

  static Atom z() { return {AtomKind::Z, 0, 0}; }
  static Atom cyc(long long p, int k) { return {AtomKind::Cyc, p, k}; }
  static Atom prufer(long long p) { return {AtomKind::Prufer, p, 0}; }
  static Atom rationals() { return {AtomKind::Q, 0, 0}; }
  static Atom padic(long long p) { return {AtomKind::PAdic, p, 0}; }
  static Atom torprod(long long p) { return {AtomKind::TorProd, p, 0}; }

  // Canonical order: Z < Cyc < Prufer < Q < PAdic < TorProd, then (p, k).
  auto operator<=>(const Atom&) const = default;
};

// Formal direct sum; the zero group is the empty sum. Multiplicities are
// nonzero cardinals, merged by cardinal addition.
class StructuredGroup {
 public:
  StructuredGroup() = default;
  static StructuredGroup single(const Atom& a, const Cardinal& mult);

  void add_summand(const Atom& a, const Cardinal& mult);
  const std::map<Atom, Cardinal>& summands() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const StructuredGroup& o) const { return terms_ == o.terms_; }
  bool operator!=(const StructuredGroup& o) const { return !(*this == o); }

 private:
  std::map<Atom, Cardinal> terms_;
};

StructuredGroup direct_sum(const StructuredGroup& a, const StructuredGroup& b);

// ---- fixed per-atom data ----
Cardinal atom_size(const Atom& a);
Cardinal atom_rank0(const Atom& a);
Cardinal atom_rankp(const Atom& a, long long p);
bool atom_divisible(const Atom& a);
bool atom_p_divisible(const Atom& a, long long p);
// a / p^k a as a structured group (always bounded).
StructuredGroup atom_quotient_pk(const Atom& a, long long p, int k);

// ---- group invariants (all atomwise over the direct sum) ----
Cardinal size_of(const StructuredGroup& g);
Cardinal rank0(const StructuredGroup& g);
Cardinal rankp(const StructuredGroup& g, long long p);
StructuredGroup quotient_mod_pk(const StructuredGroup& g, long long p, int k);
StructuredGroup quotient_mod(const StructuredGroup& g, const Int& m);  // G/mG
StructuredGroup ulm_subgroup(const StructuredGroup& g);                // G^1
StructuredGroup p_ulm_subgroup(const StructuredGroup& g, long long p); // G^1_p
StructuredGroup divisible_part(const StructuredGroup& g);
StructuredGroup torsion_part(const StructuredGroup& g);
StructuredGroup hausdorff_reflection(const StructuredGroup& g);        // G/G^1
StructuredGroup p_reflection(const StructuredGroup& g, long long p);   // G/G^1_p
std::optional<Int> exponent_of(const StructuredGroup& g);  // least n, nG=0

bool is_finite_group(const StructuredGroup& g);
Int finite_size(const StructuredGroup& g);  // requires is_finite_group

// Primes appearing in atoms, sorted. generic_prime is the least prime not
// among them — the uniform behavior of Z at every non-occurring prime.
std::vector<long long> atom_primes(const StructuredGroup& g);
long long generic_prime(const StructuredGroup& g);
bool contains_kind(const StructuredGroup& g, AtomKind k);

// Primes p for which G/pG can be nontrivial: the atom primes, plus one
// representative fresh prime when a Z summand makes every p contribute
// (all fresh primes then behave alike).
std::vector<long long> witness_primes(const StructuredGroup& g);

struct InvariantsRecord {
  Cardinal size;
  Cardinal rank0;
  std::map<long long, Cardinal> rankp;          // keyed by atom primes
  std::map<long long, StructuredGroup> mod_p;   // G/pG per atom prime
  StructuredGroup ulm;
  std::map<long long, StructuredGroup> ulm_p;   // keyed by atom primes
  StructuredGroup divisible;
  StructuredGroup torsion;
  std::optional<Int> exponent;
};
InvariantsRecord invariants(const StructuredGroup& g);

std::string to_string(const Atom& a);
std::string to_string(const StructuredGroup& g);

}  // namespace agt
