#pragma once

#include <string>

#include "agt/cardinal.hpp"
#include "agt/classify.hpp"
#include "agt/finite_group.hpp"
#include "agt/group.hpp"
#include "agt/verdict.hpp"

namespace agt {

enum class CardinalInvariantKind { Weight, Character, Density };

std::string to_string(CardinalInvariantKind k);  // "w", "chi", "d"

struct InvariantResult {
  Cardinal value;
  std::string basis;  // names the rule that produced the value
};

// Materialize a finite structured group on the finite engine. Throws
// CapError once the order exceeds cap.
FiniteGroup finite_group_of(const StructuredGroup& g, long long cap);

// |C(G)|: number of finite-index subgroups.
Cardinal csize(const StructuredGroup& g, long long cap = 10000);
// |C_p(G)|: number of subgroups of finite p-power index.
Cardinal csize_p(const StructuredGroup& g, long long p, long long cap = 10000);

// Closed-form value of weight/character/density of (g, t). Supported for
// the profinite, natural and Bohr topologies and their p-local versions
// (except BohrP); throws UnsupportedError otherwise.
InvariantResult invariant(const StructuredGroup& g, const TopologyName& t,
                          CardinalInvariantKind inv, long long cap = 10000);

// log|G| <= w(G, nu), posed for infinite residually finite G only
// (InvalidArgument otherwise).
Verdict check_log_bound(const StructuredGroup& g, CardinalMode mode);

}  // namespace agt
