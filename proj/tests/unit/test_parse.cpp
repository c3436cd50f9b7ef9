#include "doctest.h"

#include "agt/error.hpp"
#include "agt/parse.hpp"

using namespace agt;

TEST_CASE("group grammar") {
  CHECK(parse_group("0").is_zero());
  CHECK(parse_group("Z") == StructuredGroup::single(Atom::z(), card_one()));
  CHECK(parse_group("Z^3") == StructuredGroup::single(Atom::z(), card_finite(3)));
  CHECK(parse_group("Q") == StructuredGroup::single(Atom::rationals(), card_one()));
  CHECK(parse_group("J(5)") == StructuredGroup::single(Atom::padic(5), card_one()));
  CHECK(parse_group("T(3)") == StructuredGroup::single(Atom::torprod(3), card_one()));
  CHECK(parse_group("Z(7^inf)") ==
        StructuredGroup::single(Atom::prufer(7), card_one()));
  CHECK(parse_group("Z(2^3)") ==
        StructuredGroup::single(Atom::cyc(2, 3), card_one()));
  CHECK(parse_group("Z(2)^(aleph0)") ==
        StructuredGroup::single(Atom::cyc(2, 1), aleph0()));
  CHECK(parse_group("Z(8)^(c)") ==
        StructuredGroup::single(Atom::cyc(2, 3), continuum()));
  CHECK(parse_group(" Z + Z( 2 ) ") == parse_group("Z+Z(2)"));
}

TEST_CASE("composite cyclic orders split by CRT") {
  StructuredGroup want;
  want.add_summand(Atom::cyc(2, 2), card_one());
  want.add_summand(Atom::cyc(3, 1), card_one());
  CHECK(parse_group("Z(12)") == want);
  // The multiplicity applies to each CRT factor.
  StructuredGroup want2;
  want2.add_summand(Atom::cyc(2, 1), aleph0());
  want2.add_summand(Atom::cyc(3, 1), aleph0());
  CHECK(parse_group("Z(6)^(aleph0)") == want2);
}

TEST_CASE("group grammar rejections") {
  CHECK_THROWS_AS(parse_group(""), ParseError);
  CHECK_THROWS_AS(parse_group("Z("), ParseError);
  CHECK_THROWS_AS(parse_group("Z(1)"), ParseError);
  CHECK_THROWS_AS(parse_group("Z(4^2)"), ParseError);   // base must be prime
  CHECK_THROWS_AS(parse_group("Z(2^0)"), ParseError);
  CHECK_THROWS_AS(parse_group("Z(2^inf"), ParseError);
  CHECK_THROWS_AS(parse_group("J(4)"), ParseError);
  CHECK_THROWS_AS(parse_group("T(6)"), ParseError);
  CHECK_THROWS_AS(parse_group("Z^0"), ParseError);      // zero multiplicity
  CHECK_THROWS_AS(parse_group("Z)"), ParseError);       // trailing junk
  CHECK_THROWS_AS(parse_group("0+Z"), ParseError);
  CHECK_THROWS_AS(parse_group("W"), ParseError);
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_group("Z+Z(4^2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at offset") != std::string::npos);
  }
}

TEST_CASE("round trip: parse after render is the identity") {
  for (const char* s :
       {"0", "Z", "Z^2", "Q", "Z(2^inf)", "Z(2)^(aleph0)", "Z(8)^(c)", "J(2)",
        "T(2)", "Q+Z(2)", "Z+Z(6)", "Z(12)+J(3)^2+T(5)^(aleph1)",
        "Z^(2^aleph0)+Z(9)"}) {
    StructuredGroup g = parse_group(s);
    CHECK(parse_group(to_string(g)) == g);
  }
}

TEST_CASE("cardinal grammar") {
  CHECK(parse_cardinal("17") == card_finite(17));
  CHECK(parse_cardinal("aleph0") == aleph0());
  CHECK(parse_cardinal("aleph2") == card_aleph(2));
  CHECK(parse_cardinal("c") == continuum());
  CHECK(parse_cardinal("2^aleph0") == continuum());
  CHECK(parse_cardinal("2^2^aleph0") == exp2(continuum()));
  CHECK(parse_cardinal("2^10") == card_finite(1024));
  // parse normalizes too: aleph1 is absorbed, aleph2 survives
  CHECK(parse_cardinal("sup(aleph1,2^aleph0)") == continuum());
  CHECK(parse_cardinal("sup(aleph2,2^aleph0)") ==
        sup({card_aleph(2), continuum()}));
  CHECK_THROWS_AS(parse_cardinal("3^aleph0"), ParseError);
  CHECK_THROWS_AS(parse_cardinal("aleph"), ParseError);
  CHECK_THROWS_AS(parse_cardinal("sup()"), ParseError);
  CHECK_THROWS_AS(parse_cardinal("c2"), ParseError);
  CHECK(parse_cardinal(to_string(sup({card_aleph(2), continuum()}))) ==
        sup({card_aleph(2), continuum()}));
}

TEST_CASE("topology names") {
  CHECK(parse_topology("gamma") == topo(TopologyKind::Profinite));
  CHECK(parse_topology("nu") == topo(TopologyKind::Natural));
  CHECK(parse_topology("bohr") == topo(TopologyKind::Bohr));
  CHECK(parse_topology("gamma_p:7") == topo_p(TopologyKind::ProfiniteP, 7));
  CHECK(parse_topology("discrete") == topo(TopologyKind::Discrete));
  CHECK(parse_topology("indiscrete") == topo(TopologyKind::Indiscrete));
  CHECK(parse_topology("rho") == topo(TopologyKind::ProCountable));
  CHECK(parse_topology("gbound") == topo(TopologyKind::AlephBounded));
  CHECK_THROWS_AS(parse_topology("nu_p:4"), ParseError);
  CHECK_THROWS_AS(parse_topology("nu_p"), ParseError);
  CHECK_THROWS_AS(parse_topology("gamma:2"), ParseError);
  CHECK_THROWS_AS(parse_topology("metric"), ParseError);
}

TEST_CASE("class names") {
  CHECK(parse_class("narrow") == cls(GroupClassKind::Narrow));
  CHECK(parse_class("bounded_p:2") == cls_p(GroupClassKind::BoundedP, 2));
  CHECK(parse_class("almost_divisible") == cls(GroupClassKind::AlmostDivisible));
  CHECK_THROWS_AS(parse_class("narrow:2"), ParseError);
  CHECK_THROWS_AS(parse_class("bounded_p"), ParseError);
  CHECK_THROWS_AS(parse_class("bounded_p:6"), ParseError);
  CHECK_THROWS_AS(parse_class("huge"), ParseError);
}

TEST_CASE("invariant names") {
  CHECK(parse_invariant("w") == CardinalInvariantKind::Weight);
  CHECK(parse_invariant("chi") == CardinalInvariantKind::Character);
  CHECK(parse_invariant("d") == CardinalInvariantKind::Density);
  CHECK_THROWS_AS(parse_invariant("x"), ParseError);
}

TEST_CASE("matrix literals") {
  intmat::Mat want{{Int(2), Int(0)}, {Int(0), Int(3)}};
  CHECK(parse_matrix("[[2,0],[0,3]]") == want);
  CHECK(parse_matrix("[[ -1, 7 ]]") == intmat::Mat{{Int(-1), Int(7)}});
  CHECK(parse_matrix("[]") == intmat::Mat{});
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,2"), ParseError);
  CHECK(intmat::to_string(parse_matrix("[[2,0],[0,3]]")) == "[[2,0],[0,3]]");
}

TEST_CASE("f.g. conversion caps the total rank") {
  CHECK_THROWS_AS(fg_group_of(parse_group("Z^100")), CapError);
  FgGroup g = fg_group_of(parse_group("Z^64"));
  CHECK(g.free_rank == 64);
}
