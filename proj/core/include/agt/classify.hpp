#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agt/fg_group.hpp"
#include "agt/group.hpp"
#include "agt/verdict.hpp"

namespace agt {

// Functorial topologies on abelian groups. The p-local kinds carry a prime.
enum class TopologyKind {
  Profinite,    // finite-index subgroups
  Natural,      // {mG : m >= 1}
  Bohr,         // initial topology from all characters
  ProfiniteP,   // subgroups of finite p-power index
  NaturalP,     // {p^k G : k >= 0}
  BohrP,        // characters killed by a power of p
  Discrete,
  Indiscrete,
  ProCountable,  // countable-index subgroups
  AlephBounded,  // aleph_0-bounded group topologies
};

struct TopologyName {
  TopologyKind kind = TopologyKind::Profinite;
  long long p = 0;  // prime, only for ProfiniteP/NaturalP/BohrP

  bool operator==(const TopologyName& o) const = default;
};

bool topology_parametric(TopologyKind k);
std::string to_string(const TopologyName& t);

inline TopologyName topo(TopologyKind k) { return {k, 0}; }
inline TopologyName topo_p(TopologyKind k, long long p) { return {k, p}; }

// Classes of abelian groups that back the decision procedures.
enum class GroupClassKind {
  Zero,
  Finite,
  FiniteP,    // finite p-group
  Bounded,    // nG = 0 for some n >= 1
  BoundedP,   // bounded p-group
  Countable,
  Divisible,
  PDivisible,  // pG = G
  TorsionNoP,  // torsion with trivial p-primary part
  ResiduallyFinite,
  ResiduallyPFinite,
  Narrow,    // G/pG finite for every prime p
  NarrowP,   // G/pG finite at one prime
  AlmostDivisible,  // finite Hausdorff reflection
  StronglyNonDivisible,
  FiniteRankFree,
};

struct GroupClass {
  GroupClassKind kind = GroupClassKind::Zero;
  long long p = 0;  // prime, only for the *P kinds

  bool operator==(const GroupClass& o) const = default;
};

bool class_parametric(GroupClassKind k);
std::vector<GroupClassKind> all_class_kinds();
std::string class_kind_token(GroupClassKind k);  // token without the prime
std::string to_string(const GroupClass& c);

inline GroupClass cls(GroupClassKind k) { return {k, 0}; }
inline GroupClass cls_p(GroupClassKind k, long long p) { return {k, p}; }

// Exact membership test on the symbolic universe.
bool is_in_class(const StructuredGroup& g, const GroupClass& c);

// Decision for "do topologies t and s coincide on g?". When the pair is
// covered by a known coincidence criterion the backing class is reported;
// otherwise the verdict is Unknown and `note` says why.
struct EqualizerAnswer {
  Verdict verdict = Verdict::Unknown;
  std::optional<GroupClass> backing;
  std::string note;
};

EqualizerAnswer equalizer_member(const TopologyName& t, const TopologyName& s,
                                 const StructuredGroup& g);

// Class whose members are exactly the groups on which t is Hausdorff, or
// nullopt when t is Hausdorff on every group. Throws InvalidArgument for
// BohrP/Discrete/Indiscrete, where the question is not posed.
std::optional<GroupClass> hausdorff_class(const TopologyName& t);
Verdict is_hausdorff(const TopologyName& t, const StructuredGroup& g);

// For a finitely generated g: does g/h lie in c? Supports the classes that
// cut out neighbourhood bases (Finite, FiniteP, Bounded, BoundedP, Countable,
// FiniteRankFree); throws InvalidArgument otherwise.
bool class_quotient_member(const GroupClass& c, const FgGroup& g,
                           const FgSubgroup& h);

}  // namespace agt
