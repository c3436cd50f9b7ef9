#include "doctest.h"

#include <set>

#include "agt/error.hpp"
#include "agt/finite_group.hpp"

using namespace agt;

TEST_CASE("element arithmetic in mixed radix") {
  FiniteGroup g({2, 4});
  CHECK(g.size() == 8);
  long long a = g.from_digits({1, 0});
  long long b = g.from_digits({0, 3});
  CHECK(g.digits(g.add(a, b)) == std::vector<long long>{1, 3});
  CHECK(g.add(b, g.neg(b)) == 0);
  CHECK(g.order_of(0) == 1);
  CHECK(g.order_of(a) == 2);
  CHECK(g.order_of(b) == 4);
}

TEST_CASE("trivial group") {
  FiniteGroup g({});
  CHECK(g.size() == 1);
  CHECK(all_subgroups(g).size() == 1);
}

TEST_CASE("cap refuses oversized groups") {
  CHECK_THROWS_AS(FiniteGroup({101}, 100), CapError);
  CHECK_THROWS_AS(FiniteGroup({50, 50}, 100), CapError);
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(FiniteGroup({2, 2})).size() == 5);
  CHECK(all_subgroups(FiniteGroup({4})).size() == 3);
  CHECK(all_subgroups(FiniteGroup({2, 4})).size() == 8);
  CHECK(all_subgroups(FiniteGroup({2, 2, 2})).size() == 16);
  CHECK(all_subgroups(FiniteGroup({6})).size() == 4);  // divisors of 6
  CHECK(all_subgroups(FiniteGroup({2, 3})).size() == 4);  // same group by CRT
}

TEST_CASE("lattice enumeration respects its budget") {
  CHECK_THROWS_AS(all_subgroups(FiniteGroup({2, 2, 2, 2}), 10), CapError);
}

TEST_CASE("subgroup operations") {
  FiniteGroup g({2, 4});
  FinSubgroup whole = FinSubgroup::whole(g);
  FinSubgroup triv = FinSubgroup::trivial(g);
  CHECK(whole.count() == 8);
  CHECK(triv.count() == 1);
  FinSubgroup c = FinSubgroup::cyclic(g, g.from_digits({0, 1}));
  CHECK(c.count() == 4);
  CHECK(c.contains(g.from_digits({0, 2})));
  CHECK(!c.contains(g.from_digits({1, 0})));
  CHECK(c.intersect(whole) == c);
  CHECK(c.join(g, g.from_digits({1, 0})) == whole);
  // Generators regenerate the subgroup.
  FinSubgroup back = FinSubgroup::span(g, c.generators(g));
  CHECK(back == c);
}

TEST_CASE("characters and kernel fibers") {
  FiniteGroup g({2, 4});
  auto chars = all_characters(g);
  CHECK(chars.size() == 8);  // the dual has the same order
  auto fibers = kernel_fiber_map(g);
  long long total = 0;
  for (const FinSubgroup& s : all_subgroups(g)) {
    long long want = kernel_fiber_formula(g, s);
    auto it = fibers.find(s);
    long long got = it == fibers.end() ? 0 : it->second;
    CHECK(got == want);
    total += got;
  }
  CHECK(total == g.size());
  // The only character with kernel G is the trivial one; no character of a
  // non-cyclic group is faithful.
  CHECK(kernel_fiber_count(g, FinSubgroup::whole(g)) == 1);
  CHECK(kernel_fiber_count(g, FinSubgroup::trivial(g)) == 0);
}

TEST_CASE("cyclic quotients match cyclic subgroups by duality") {
  FiniteGroup g({2, 4});
  auto subs = all_subgroups(g);
  long long cyclic_subs = 0;
  for (const FinSubgroup& s : subs)
    for (long long x : s.elements())
      if (g.order_of(x) == s.count()) {
        ++cyclic_subs;
        break;
      }
  CHECK(cyclic_subs == 6);
  CHECK(cyclic_quotient_subgroups(g).size() == 6);
  CHECK(quotient_cyclic(g, FinSubgroup::trivial(g)) == false);
  CHECK(quotient_cyclic(g, FinSubgroup::whole(g)) == true);
}

TEST_CASE("quotient structure") {
  FiniteGroup g({2, 4});
  FinSubgroup k = FinSubgroup::cyclic(g, g.from_digits({0, 2}));
  CHECK(quotient_structure(g, k).orders() == std::vector<long long>{2, 2});
  CHECK(quotient_structure(g, FinSubgroup::whole(g)).orders().empty());
}

TEST_CASE("lattice is meet/join closed") {
  FiniteGroup g({2, 2, 3});
  auto subs = all_subgroups(g);
  std::set<FinSubgroup> lat(subs.begin(), subs.end());
  for (const FinSubgroup& a : subs)
    for (const FinSubgroup& b : subs) {
      CHECK(lat.count(a.intersect(b)) == 1);
      FinSubgroup j = a;
      for (long long x : b.generators(g)) j = j.join(g, x);
      CHECK(lat.count(j) == 1);
    }
}
