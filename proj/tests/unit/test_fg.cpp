#include "doctest.h"

#include <algorithm>

#include "agt/arith.hpp"
#include "agt/error.hpp"
#include "agt/fg_group.hpp"
#include "agt/parse.hpp"

using namespace agt;
using intmat::Mat;
using intmat::Row;

namespace {
Mat m(std::initializer_list<std::initializer_list<long long>> rows) {
  Mat out;
  for (auto& r : rows) {
    Row row;
    for (long long v : r) row.push_back(Int(v));
    out.push_back(row);
  }
  return out;
}
}  // namespace

TEST_CASE("index computation") {
  FgGroup z2{2, {}};
  CHECK(index_of(z2, FgSubgroup::from_generators(z2, m({{2, 0}, {0, 3}}))) .finite);
  IndexValue idx = index_of(z2, FgSubgroup::from_generators(z2, m({{2, 0}, {0, 3}})));
  CHECK(idx.value == Int(6));
  CHECK(!index_of(z2, FgSubgroup::from_generators(z2, m({{1, 0}}))).finite);
  CHECK(index_of(z2, FgSubgroup::whole(z2)).value == Int(1));
}

TEST_CASE("counting subgroups of a given index") {
  FgGroup z1{1, {}}, z2{2, {}};
  CHECK(enumerate_finite_index(z1, Int(5)).size() == 1);
  CHECK(enumerate_finite_index(z2, Int(6)).size() == 12);  // sigma(6)
  auto subs = enumerate_finite_index(z2, Int(2));
  CHECK(subs.size() == 3);
  std::vector<FgSubgroup> expect = {
      FgSubgroup::from_generators(z2, m({{1, 0}, {0, 2}})),
      FgSubgroup::from_generators(z2, m({{1, 1}, {0, 2}})),
      FgSubgroup::from_generators(z2, m({{2, 0}, {0, 1}})),
  };
  for (const FgSubgroup& e : expect)
    CHECK(std::count(subs.begin(), subs.end(), e) == 1);
}

TEST_CASE("sum and intersection of lattice subgroups") {
  FgGroup z2{2, {}};
  FgSubgroup a = FgSubgroup::multiple_subgroup(z2, Int(2));
  FgSubgroup b = FgSubgroup::multiple_subgroup(z2, Int(3));
  CHECK(subgroup_sum(z2, a, b) == FgSubgroup::whole(z2));
  CHECK(subgroup_intersect(z2, a, b) == FgSubgroup::multiple_subgroup(z2, Int(6)));
}

TEST_CASE("quotient shape drops trivial invariant factors") {
  FgGroup z2{2, {}};
  FgGroup q = quotient_shape(z2, FgSubgroup::from_generators(z2, m({{2, 0}, {0, 3}})));
  CHECK(q.free_rank == 0);
  CHECK(q.torsion_orders == std::vector<long long>{6});
  FgGroup q2 = quotient_shape(z2, FgSubgroup::from_generators(z2, m({{1, 0}})));
  CHECK(q2.free_rank == 1);
  CHECK(q2.torsion_orders.empty());
}

TEST_CASE("nu closure fixes every subgroup") {
  FgGroup z1{1, {}}, z2{2, {}};
  FgSubgroup six = FgSubgroup::multiple_subgroup(z1, Int(6));
  CHECK(nu_closure(z1, six) == six);
  FgSubgroup diag = FgSubgroup::from_generators(z2, m({{2, 4}}));
  CHECK(nu_closure(z2, diag) == diag);
  CHECK(nu_closure(z1, FgSubgroup::zero_subgroup(z1)) ==
        FgSubgroup::zero_subgroup(z1));
}

TEST_CASE("proper subgroups sit inside proper finite-index subgroups") {
  FgGroup z2{2, {}};
  FgSubgroup h = FgSubgroup::from_generators(z2, m({{1, 0}}));
  FgSubgroup n = enclosing_finite_index(z2, h);
  CHECK(n.contains(Row{Int(1), Int(0)}));
  CHECK(!(n == FgSubgroup::whole(z2)));
  CHECK(index_of(z2, n).finite);
  CHECK(index_of(z2, n).value == Int(2));

  FgGroup z1{1, {}};
  FgSubgroup n1 = enclosing_finite_index(z1, FgSubgroup::multiple_subgroup(z1, Int(6)));
  CHECK(n1 == FgSubgroup::multiple_subgroup(z1, Int(2)));

  // Z + Z(3), H = 0: the first working prime is 2 and [G : 2G] = 2.
  FgGroup g = fg_group_of(parse_group("Z+Z(3)"));
  FgSubgroup n2 = enclosing_finite_index(g, FgSubgroup::zero_subgroup(g));
  CHECK(index_of(g, n2).value == Int(2));
}

TEST_CASE("chain cofinality: index <= k forces (k!)G inside") {
  FgGroup z2{2, {}};
  for (long long idx = 1; idx <= 6; ++idx) {
    for (const FgSubgroup& sub : enumerate_finite_index(z2, Int(idx))) {
      CHECK(sub.contains(Row{Int(720), Int(0)}));
      CHECK(sub.contains(Row{Int(0), Int(720)}));
    }
  }
}

TEST_CASE("agreement with the brute-force engine on torsion groups") {
  // Z(2) + Z(4): index-2 subgroups both ways.
  FgGroup g{0, {2, 4}};
  CHECK(enumerate_finite_index(g, Int(2)).size() == 3);
  CHECK(enumerate_finite_index(g, Int(4)).size() == 3);
  CHECK(enumerate_finite_index(g, Int(8)).size() == 1);
  CHECK(enumerate_finite_index(g, Int(3)).empty());
}

TEST_CASE("structured groups convert when finitely generated") {
  FgGroup g = fg_group_of(parse_group("Z^2+Z(12)"));
  CHECK(g.free_rank == 2);
  CHECK(g.torsion_orders == std::vector<long long>{4, 3});
  CHECK_THROWS_AS(fg_group_of(parse_group("Q")), InvalidArgument);
  CHECK_THROWS_AS(fg_group_of(parse_group("Z(2^inf)")), InvalidArgument);
  CHECK_THROWS_AS(fg_group_of(parse_group("Z^(aleph0)")), InvalidArgument);
  CHECK_THROWS_AS(fg_group_of(parse_group("J(2)")), InvalidArgument);
}
