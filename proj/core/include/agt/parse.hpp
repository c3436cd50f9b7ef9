#pragma once

#include <string>

#include "agt/cardinal.hpp"
#include "agt/classify.hpp"
#include "agt/fg_group.hpp"
#include "agt/group.hpp"
#include "agt/intmat.hpp"
#include "agt/topo_invariants.hpp"

namespace agt {

// cardinal := digits | "aleph" digits | "c" | "2^" cardinal
//           | "sup(" cardinal {"," cardinal} ")"
Cardinal parse_cardinal(const std::string& s);

// group := "0" | term {"+" term}
// term  := atom ["^" mult]
// atom  := "Z" | "Z(" n ")" | "Z(" p "^" k ")" | "Z(" p "^inf)" | "Q"
//        | "J(" p ")" | "T(" p ")"
// mult  := positive digits | "(" cardinal ")"
// Composite n is split by CRT into its prime-power parts.
StructuredGroup parse_group(const std::string& s);

// gamma | nu | bohr | gamma_p:<p> | nu_p:<p> | bohr_p:<p> | discrete
// | indiscrete | rho | gbound
TopologyName parse_topology(const std::string& s);

// Class token as produced by to_string(GroupClass), e.g. "narrow",
// "bounded_p:2".
GroupClass parse_class(const std::string& s);

// "w" | "chi" | "d"
CardinalInvariantKind parse_invariant(const std::string& s);

// Row list of signed integers, e.g. "[[2,0],[0,3]]"; "[]" is the empty
// matrix. Rows must be rectangular.
intmat::Mat parse_matrix(const std::string& s);

// View a structured group as a concrete f.g. group (free rank + cyclic
// torsion orders). Throws InvalidArgument when the group is not finitely
// generated, CapError when it is too large for the exact engine.
FgGroup fg_group_of(const StructuredGroup& g);

}  // namespace agt
