#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "agt/cardinal.hpp"  // Int

namespace agt {

// Finite abelian group presented by cyclic factor orders (not necessarily
// prime powers). Elements are mixed-radix indices in [0, |G|).
class FiniteGroup {
 public:
  // cap bounds |G|; the default matches the CLI default.
  explicit FiniteGroup(std::vector<long long> orders, long long cap = 10000);

  const std::vector<long long>& orders() const { return orders_; }
  long long size() const { return size_; }

  long long add(long long x, long long y) const;
  long long neg(long long x) const;
  long long order_of(long long x) const;
  std::vector<long long> digits(long long x) const;
  long long from_digits(const std::vector<long long>& d) const;

 private:
  std::vector<long long> orders_;
  std::vector<long long> strides_;
  long long size_ = 1;
};

// Subgroup as a bitset over element indices; the canonical form. Two
// subgroups are equal iff their bitsets are.
class FinSubgroup {
 public:
  FinSubgroup() = default;
  static FinSubgroup trivial(const FiniteGroup& g);
  static FinSubgroup cyclic(const FiniteGroup& g, long long x);
  static FinSubgroup span(const FiniteGroup& g, const std::vector<long long>& gens);
  static FinSubgroup whole(const FiniteGroup& g);

  bool contains(long long x) const;
  long long count() const;
  std::vector<long long> elements() const;
  // Greedy minimal generating sequence (deterministic).
  std::vector<long long> generators(const FiniteGroup& g) const;

  FinSubgroup join(const FiniteGroup& g, long long x) const;  // this + <x>
  FinSubgroup intersect(const FinSubgroup& o) const;
  // Build directly from an element set that is already closed under the
  // group operations (e.g. the kernel of a homomorphism).
  static FinSubgroup from_closed_set(const FiniteGroup& g,
                                     const std::vector<long long>& elems);

  bool operator==(const FinSubgroup& o) const { return bits_ == o.bits_; }
  bool operator!=(const FinSubgroup& o) const { return !(*this == o); }
  // Deterministic order: by size, then lexicographic on the element set.
  bool operator<(const FinSubgroup& o) const;
  size_t hash() const;

 private:
  std::vector<uint64_t> bits_;
  long long count_ = 0;
  void set(long long x);
  friend struct FinSubgroupHash;
};

struct FinSubgroupHash {
  size_t operator()(const FinSubgroup& s) const { return s.hash(); }
};

// Character of G: generator i maps to nums[i]/orders[i] in Q/Z.
struct FinCharacter {
  std::vector<long long> nums;
};

// Complete subgroup lattice by join-closure of the cyclic subgroups.
// Deterministically ordered. Throws CapError past `budget` subgroups.
std::vector<FinSubgroup> all_subgroups(const FiniteGroup& g,
                                       size_t budget = 1u << 20);

std::vector<FinCharacter> all_characters(const FiniteGroup& g);
FinSubgroup character_kernel(const FiniteGroup& g, const FinCharacter& chi);

// Kernel fibers of the character-to-kernel map: for each subgroup N, how
// many characters have kernel exactly N.
std::unordered_map<FinSubgroup, long long, FinSubgroupHash>
kernel_fiber_map(const FiniteGroup& g);
long long kernel_fiber_count(const FiniteGroup& g, const FinSubgroup& n);
// phi([G:N]) when G/N is cyclic, else 0 (1 for N = G).
long long kernel_fiber_formula(const FiniteGroup& g, const FinSubgroup& n);

// Invariant-factor structure of G/N (empty orders = trivial group).
FiniteGroup quotient_structure(const FiniteGroup& g, const FinSubgroup& n);
bool quotient_cyclic(const FiniteGroup& g, const FinSubgroup& n);

std::vector<FinSubgroup> cyclic_quotient_subgroups(const FiniteGroup& g);

}  // namespace agt
