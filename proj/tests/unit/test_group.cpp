#include "doctest.h"

#include "agt/group.hpp"

using namespace agt;

namespace {
StructuredGroup one(const Atom& a) { return StructuredGroup::single(a, card_one()); }
}  // namespace

TEST_CASE("sizes") {
  CHECK(size_of(StructuredGroup()) == card_one());
  CHECK(size_of(one(Atom::z())) == aleph0());
  CHECK(size_of(one(Atom::rationals())) == aleph0());
  CHECK(size_of(one(Atom::padic(2))) == continuum());
  CHECK(size_of(one(Atom::torprod(2))) == continuum());
  CHECK(size_of(StructuredGroup::single(Atom::cyc(2, 3), continuum())) ==
        continuum());
  StructuredGroup g;
  g.add_summand(Atom::cyc(2, 1), card_one());
  g.add_summand(Atom::cyc(2, 2), card_one());
  CHECK(is_finite_group(g));
  CHECK(finite_size(g) == Int(8));
}

TEST_CASE("direct sums merge multiplicities") {
  StructuredGroup z = one(Atom::z());
  StructuredGroup z2 = direct_sum(z, z);
  CHECK(z2 == StructuredGroup::single(Atom::z(), card_finite(2)));
  CHECK(to_string(z2) == "Z^2");
}

TEST_CASE("mod-p quotients of the torsion product") {
  StructuredGroup t = one(Atom::torprod(2));
  // T/2T is a countable elementary 2-group: reduction maps T onto the
  // eventually-zero tuples, not the full product.
  CHECK(quotient_mod_pk(t, 2, 1) ==
        StructuredGroup::single(Atom::cyc(2, 1), aleph0()));
  StructuredGroup t4;
  t4.add_summand(Atom::cyc(2, 1), card_one());
  t4.add_summand(Atom::cyc(2, 2), aleph0());
  CHECK(quotient_mod_pk(t, 2, 2) == t4);
  // ...while the socle is the full product: the p-rank is c.
  CHECK(rankp(t, 2) == continuum());
  CHECK(quotient_mod_pk(t, 3, 1).is_zero());
}

TEST_CASE("mod-p quotients of the p-adic integers") {
  StructuredGroup j = one(Atom::padic(2));
  CHECK(quotient_mod_pk(j, 2, 1) == one(Atom::cyc(2, 1)));
  CHECK(quotient_mod_pk(j, 2, 2) == one(Atom::cyc(2, 2)));
  CHECK(quotient_mod_pk(j, 3, 1).is_zero());
  CHECK(rankp(j, 2) == card_zero());  // torsion-free
  CHECK(ulm_subgroup(j).is_zero());
  CHECK(divisible_part(j).is_zero());
}

TEST_CASE("ulm subgroup and hausdorff reflection") {
  StructuredGroup g;
  g.add_summand(Atom::rationals(), card_one());
  g.add_summand(Atom::cyc(2, 1), card_one());
  CHECK(ulm_subgroup(g) == one(Atom::rationals()));
  CHECK(hausdorff_reflection(g) == one(Atom::cyc(2, 1)));

  StructuredGroup h;
  h.add_summand(Atom::prufer(2), card_one());
  h.add_summand(Atom::z(), card_one());
  CHECK(divisible_part(h) == one(Atom::prufer(2)));
  CHECK(ulm_subgroup(ulm_subgroup(h)) == ulm_subgroup(h));
}

TEST_CASE("torsion part") {
  StructuredGroup g;
  g.add_summand(Atom::z(), card_one());
  g.add_summand(Atom::cyc(2, 1), card_one());
  g.add_summand(Atom::cyc(3, 1), card_one());
  StructuredGroup tor;
  tor.add_summand(Atom::cyc(2, 1), card_one());
  tor.add_summand(Atom::cyc(3, 1), card_one());
  CHECK(torsion_part(g) == tor);
}

TEST_CASE("exponent") {
  CHECK(exponent_of(StructuredGroup::single(Atom::cyc(2, 3), continuum())) ==
        Int(8));
  StructuredGroup g;
  g.add_summand(Atom::cyc(2, 1), card_one());
  g.add_summand(Atom::cyc(2, 2), card_one());
  CHECK(exponent_of(g) == Int(4));
  CHECK(!exponent_of(one(Atom::z())).has_value());
  CHECK(!exponent_of(one(Atom::torprod(2))).has_value());
  CHECK(!exponent_of(one(Atom::prufer(2))).has_value());
}

TEST_CASE("witness primes cover a representative fresh prime for Z") {
  StructuredGroup z = one(Atom::z());
  CHECK(atom_primes(z).empty());
  CHECK(witness_primes(z) == std::vector<long long>{2});
  StructuredGroup g;
  g.add_summand(Atom::z(), card_one());
  g.add_summand(Atom::cyc(2, 1), card_one());
  g.add_summand(Atom::cyc(3, 1), card_one());
  CHECK(atom_primes(g) == std::vector<long long>{2, 3});
  CHECK(witness_primes(g) == std::vector<long long>{2, 3, 5});
}

TEST_CASE("quotient by a composite modulus splits by CRT") {
  StructuredGroup q6 = quotient_mod(one(Atom::z()), Int(6));
  StructuredGroup want;
  want.add_summand(Atom::cyc(2, 1), card_one());
  want.add_summand(Atom::cyc(3, 1), card_one());
  CHECK(q6 == want);
}

TEST_CASE("rendering") {
  CHECK(to_string(StructuredGroup()) == "0");
  CHECK(to_string(one(Atom::cyc(2, 3))) == "Z(2^3)");
  CHECK(to_string(one(Atom::prufer(3))) == "Z(3^inf)");
  CHECK(to_string(StructuredGroup::single(Atom::cyc(2, 1), aleph0())) ==
        "Z(2)^(aleph0)");
  StructuredGroup g;
  g.add_summand(Atom::rationals(), card_one());
  g.add_summand(Atom::cyc(2, 1), card_one());
  CHECK(to_string(g) == "Z(2) + Q");  // canonical atom order
}
