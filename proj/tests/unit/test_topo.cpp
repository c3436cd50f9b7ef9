#include "doctest.h"

#include "agt/classify.hpp"
#include "agt/error.hpp"
#include "agt/parse.hpp"
#include "agt/topo_invariants.hpp"

using namespace agt;

namespace {
Cardinal inv(const char* g, const char* t, const char* k) {
  return invariant(parse_group(g), parse_topology(t), parse_invariant(k)).value;
}
std::string basis(const char* g, const char* t, const char* k) {
  return invariant(parse_group(g), parse_topology(t), parse_invariant(k)).basis;
}
}  // namespace

TEST_CASE("profinite weight: spot values") {
  CHECK(inv("Z", "gamma", "w") == aleph0());
  CHECK(inv("Z^2", "gamma", "chi") == aleph0());
  CHECK(inv("Z(2)^(aleph0)", "gamma", "w") == continuum());
  CHECK(inv("Z(8)^(c)", "gamma", "w") == exp2(continuum()));
  CHECK(inv("J(2)", "gamma", "w") == aleph0());
  CHECK(inv("T(2)", "gamma", "w") == continuum());
  CHECK(basis("Z", "gamma", "w") == "profinite-weight-sup");
}

TEST_CASE("almost divisible groups fall back to the finite reflection") {
  CHECK(inv("Q", "gamma", "w") == card_one());
  CHECK(inv("Q+Z(2)", "gamma", "w") == card_finite(2));
  CHECK(inv("Q+Z(2)", "gamma", "d") == card_finite(2));
  CHECK(inv("Z(2^inf)", "nu", "chi") == card_one());
  CHECK(basis("Q+Z(2)", "gamma", "w") == "finite-reflection-count");
  CHECK(basis("Q+Z(2)", "gamma", "d") == "finite-reflection-size");
}

TEST_CASE("natural topology: weight, character, density") {
  CHECK(inv("Z", "nu", "w") == aleph0());
  CHECK(inv("Z", "nu", "chi") == aleph0());
  CHECK(inv("Z(2)^(aleph0)", "nu", "w") == aleph0());
  CHECK(inv("Z(8)^(c)", "nu", "w") == continuum());
  CHECK(inv("Z(8)^(c)", "nu", "chi") == aleph0());
  CHECK(inv("T(2)", "nu", "d") == aleph0());
  CHECK(basis("T(2)", "nu", "d") == "natural-density-sup");
  // The density gap: d(T(2), nu) < |T(2)| = c, provably in ZFC.
  CHECK(cmp(inv("T(2)", "nu", "d"), size_of(parse_group("T(2)")),
            CardinalMode::Zfc) == Ordering::LT);
}

TEST_CASE("bohr topology is maximal: w = chi = 2^|G|, d = |G|") {
  CHECK(inv("Z", "bohr", "w") == continuum());
  CHECK(inv("Z", "bohr", "d") == aleph0());
  CHECK(inv("J(2)", "bohr", "w") == exp2(continuum()));
  CHECK(inv("J(2)", "bohr", "d") == continuum());
  CHECK(inv("Q+Z(2)", "bohr", "w") == continuum());
  CHECK(basis("Z", "bohr", "w") == "bohr-weight");
  CHECK(basis("Z", "bohr", "d") == "bohr-density");
}

TEST_CASE("p-local topologies") {
  CHECK(inv("T(2)", "gamma_p:2", "w") == continuum());
  CHECK(basis("T(2)", "gamma_p:2", "w") == "p-profinite-weight-sup");
  CHECK(inv("Z", "gamma_p:2", "w") == aleph0());
  CHECK(basis("Z", "gamma_p:2", "w") == "p-adic-chain");
  CHECK(inv("J(2)", "gamma_p:2", "w") == aleph0());
  CHECK(inv("Z(2)+Z(4)", "gamma_p:2", "w") == card_finite(8));
  CHECK(basis("Z(2)+Z(4)", "gamma_p:2", "w") == "p-finite-reflection-count");
  CHECK(inv("Z(2)+Z(4)", "gamma_p:3", "w") == card_one());
  CHECK(inv("Z(2)+Z(4)", "gamma_p:2", "d") == card_finite(8));
  CHECK(inv("Z(2)^(aleph0)", "nu_p:2", "w") == aleph0());
  CHECK(inv("Z(2)^(aleph0)", "nu_p:2", "chi") == aleph0());
  CHECK(inv("Z(3)", "nu_p:2", "w") == card_one());
  CHECK(inv("T(2)", "nu_p:2", "d") == aleph0());
}

TEST_CASE("no closed-form rule: refuse rather than guess") {
  CHECK_THROWS_AS(invariant(parse_group("Z"), parse_topology("discrete"),
                            CardinalInvariantKind::Weight),
                  UnsupportedError);
  CHECK_THROWS_AS(invariant(parse_group("Z"), parse_topology("rho"),
                            CardinalInvariantKind::Weight),
                  UnsupportedError);
}

TEST_CASE("closed subgroup counts") {
  CHECK(csize(parse_group("0")) == card_one());
  CHECK(csize(parse_group("Z(2)+Z(4)")) == card_finite(8));
  CHECK(csize(parse_group("Z")) == aleph0());
  CHECK(csize(parse_group("Z(2)^(aleph0)")) == continuum());
  CHECK(csize(parse_group("Z(8)^(c)")) == exp2(continuum()));
  CHECK(csize(parse_group("Q")) == card_one());
  CHECK(csize(parse_group("Q+Z(2)")) == card_finite(2));
}

TEST_CASE("p-local closed subgroup counts") {
  CHECK(csize_p(parse_group("T(2)"), 2) == continuum());
  CHECK(csize_p(parse_group("Z"), 2) == aleph0());
  CHECK(csize_p(parse_group("J(2)"), 2) == aleph0());
  CHECK(csize_p(parse_group("Z(2)+Z(4)"), 2) == card_finite(8));
  CHECK(csize_p(parse_group("Z(2)+Z(4)"), 3) == card_one());
}

TEST_CASE("the finite engine materializes only small groups") {
  FiniteGroup fg = finite_group_of(parse_group("Z(2)^3"), 100);
  CHECK(fg.size() == 8);
  CHECK_THROWS_AS(finite_group_of(parse_group("Z(2)^10"), 100), CapError);
  CHECK_THROWS_AS(csize(parse_group("Q+Z(2)^20"), 100), CapError);
}

TEST_CASE("logarithmic lower bound for the natural weight") {
  CHECK(check_log_bound(parse_group("Z"), CardinalMode::Zfc) == Verdict::True);
  CHECK(check_log_bound(parse_group("Z(2)^(aleph0)"), CardinalMode::Zfc) ==
        Verdict::True);
  // Sharpness: |T(2)| = c while w(T(2), nu) = aleph0, and log c <= aleph0.
  CHECK(check_log_bound(parse_group("T(2)"), CardinalMode::Zfc) ==
        Verdict::True);
  CHECK_THROWS_AS(check_log_bound(parse_group("Q"), CardinalMode::Zfc),
                  InvalidArgument);
  CHECK_THROWS_AS(check_log_bound(parse_group("Z(2)"), CardinalMode::Zfc),
                  InvalidArgument);
}
