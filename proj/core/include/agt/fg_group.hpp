#pragma once

#include <string>
#include <vector>

#include "agt/intmat.hpp"

namespace agt {

// Finitely generated group Z^n + Z(d_1) + ... + Z(d_t), presented as
// Z^D / R with D = n + t and R spanned by the rows [0^n | d_i e_i].
struct FgGroup {
  int free_rank = 0;
  std::vector<long long> torsion_orders;  // each >= 2

  int dim() const { return free_rank + static_cast<int>(torsion_orders.size()); }
  intmat::Mat relation_rows() const;
};

// Subgroup H of an FgGroup, canonically represented by the HNF basis of its
// lift lattice L with R <= L <= Z^D. Equality of subgroups is equality of
// canonical lattices; membership, sums, intersections and indices are exact
// lattice computations.
class FgSubgroup {
 public:
  FgSubgroup() = default;
  static FgSubgroup from_generators(const FgGroup& g, const intmat::Mat& gens);
  static FgSubgroup whole(const FgGroup& g);
  static FgSubgroup zero_subgroup(const FgGroup& g);
  static FgSubgroup multiple_subgroup(const FgGroup& g, const Int& m);  // mG

  const intmat::Mat& lattice() const { return lat_; }
  bool contains(const intmat::Row& elem) const;

  bool operator==(const FgSubgroup& o) const { return lat_ == o.lat_; }
  bool operator!=(const FgSubgroup& o) const { return !(*this == o); }

 private:
  intmat::Mat lat_;  // canonical HNF, contains the relation rows
};

struct IndexValue {
  bool finite = false;
  Int value;  // meaningful when finite
};
std::string to_string(const IndexValue& v);

FgSubgroup subgroup_sum(const FgGroup& g, const FgSubgroup& a, const FgSubgroup& b);
FgSubgroup subgroup_intersect(const FgGroup& g, const FgSubgroup& a,
                              const FgSubgroup& b);
IndexValue index_of(const FgGroup& g, const FgSubgroup& h);

// Invariant-factor shape of G/H.
FgGroup quotient_shape(const FgGroup& g, const FgSubgroup& h);

// All subgroups of index exactly m, deterministically ordered. The budget
// caps the number of candidate HNF matrices visited.
std::vector<FgSubgroup> enumerate_finite_index(const FgGroup& g, const Int& m,
                                               size_t budget = 1u << 22);

// Closure of H in the topology generated by {mG}: equal to H itself for
// every f.g. G (all subgroups are closed); the implementation verifies the
// structural facts that force this rather than assuming it.
FgSubgroup nu_closure(const FgGroup& g, const FgSubgroup& h);

// Some N with H <= N < G of finite index (H must be proper).
FgSubgroup enclosing_finite_index(const FgGroup& g, const FgSubgroup& h);

}  // namespace agt
