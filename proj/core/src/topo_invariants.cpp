#include "agt/topo_invariants.hpp"

#include "agt/arith.hpp"
#include "agt/error.hpp"

namespace agt {

std::string to_string(CardinalInvariantKind k) {
  switch (k) {
    case CardinalInvariantKind::Weight: return "w";
    case CardinalInvariantKind::Character: return "chi";
    case CardinalInvariantKind::Density: return "d";
  }
  throw InternalError("unhandled invariant kind");
}

FiniteGroup finite_group_of(const StructuredGroup& g, long long cap) {
  internal_check(is_finite_group(g), "finite_group_of: group is infinite");
  std::vector<long long> orders;
  long long size = 1;
  for (const auto& [a, mult] : g.summands()) {
    internal_check(a.kind == AtomKind::Cyc, "finite_group_of: non-cyclic atom");
    long long order = 0;
    if (!checked_pow(a.p, a.k, cap, order))
      throw CapError("finite engine: cyclic factor order exceeds cap");
    // mult is finite here; the running cap check bails out long before any
    // large multiplicity could materialize.
    for (Int i = 0; i < mult.finite_value(); ++i) {
      if (size > cap / order)
        throw CapError("finite engine: group order exceeds cap");
      size *= order;
      orders.push_back(order);
    }
  }
  return FiniteGroup(orders, cap);
}

namespace {

void require_prime(long long p) {
  if (p < 2 || !is_prime(p))
    throw InvalidArgument("topology prime must be prime");
}

Int count_subgroups(const StructuredGroup& g, long long cap) {
  FiniteGroup fg = finite_group_of(g, cap);
  return Int(all_subgroups(fg).size());
}

// omega * sup_p |G/pG|. Finite quotients are absorbed by the omega floor,
// so only the infinite ones are materialized.
Cardinal density_sup(const StructuredGroup& g) {
  std::vector<Cardinal> members{aleph0()};
  for (long long q : witness_primes(g)) {
    Cardinal s = size_of(quotient_mod_pk(g, q, 1));
    if (!s.is_finite()) members.push_back(s);
  }
  return sup(std::move(members));
}

struct Tagged {
  Cardinal value;
  const char* basis;
};

// |C_p(G)| with the rule that fired. Three regimes: infinite G/pG
// (exponential), a strictly descending chain p^k G (Z or J_p summand),
// and a finite p-power-index lattice.
Tagged csize_p_tagged(const StructuredGroup& g, long long p, long long cap) {
  Cardinal s = size_of(quotient_mod_pk(g, p, 1));
  if (!s.is_finite()) return {exp2(s), "p-profinite-weight-sup"};
  bool chain = false;
  StructuredGroup ppart;
  for (const auto& [a, mult] : g.summands()) {
    if (a.kind == AtomKind::Z || (a.kind == AtomKind::PAdic && a.p == p))
      chain = true;
    if (a.kind == AtomKind::Cyc && a.p == p) ppart.add_summand(a, mult);
  }
  if (chain) return {aleph0(), "p-adic-chain"};
  return {card_finite(count_subgroups(ppart, cap)), "p-finite-reflection-count"};
}

InvariantResult result(Tagged t) { return {t.value, t.basis}; }

}  // namespace

Cardinal csize(const StructuredGroup& g, long long cap) {
  if (is_in_class(g, cls(GroupClassKind::AlmostDivisible)))
    return card_finite(count_subgroups(hausdorff_reflection(g), cap));
  std::vector<Cardinal> members{aleph0()};
  for (long long q : witness_primes(g)) {
    Cardinal s = size_of(quotient_mod_pk(g, q, 1));
    if (!s.is_finite()) members.push_back(exp2(s));
  }
  return sup(std::move(members));
}

Cardinal csize_p(const StructuredGroup& g, long long p, long long cap) {
  require_prime(p);
  return csize_p_tagged(g, p, cap).value;
}

InvariantResult invariant(const StructuredGroup& g, const TopologyName& t,
                          CardinalInvariantKind inv, long long cap) {
  using T = TopologyKind;
  using I = CardinalInvariantKind;
  const bool weightlike = inv == I::Weight || inv == I::Character;
  switch (t.kind) {
    case T::Profinite: {
      if (is_in_class(g, cls(GroupClassKind::AlmostDivisible))) {
        StructuredGroup r = hausdorff_reflection(g);
        if (weightlike)
          return {card_finite(count_subgroups(r, cap)),
                  "finite-reflection-count"};
        return {card_finite(finite_size(r)), "finite-reflection-size"};
      }
      if (weightlike) return {csize(g, cap), "profinite-weight-sup"};
      return {density_sup(g), "natural-density-sup"};
    }
    case T::Natural: {
      if (is_in_class(g, cls(GroupClassKind::AlmostDivisible))) {
        StructuredGroup r = hausdorff_reflection(g);
        if (weightlike)
          return {card_finite(count_subgroups(r, cap)),
                  "finite-reflection-count"};
        return {card_finite(finite_size(r)), "finite-reflection-size"};
      }
      if (inv == I::Weight) return {density_sup(g), "natural-weight-sup"};
      if (inv == I::Character) return {aleph0(), "natural-countable-base"};
      return {density_sup(g), "natural-density-sup"};
    }
    case T::Bohr: {
      if (weightlike) return {exp2(size_of(g)), "bohr-weight"};
      return {size_of(g), "bohr-density"};
    }
    case T::ProfiniteP: {
      require_prime(t.p);
      if (weightlike) return result(csize_p_tagged(g, t.p, cap));
      StructuredGroup r = p_reflection(g, t.p);
      if (is_finite_group(r))
        return {card_finite(finite_size(r)), "p-finite-reflection-size"};
      return {sup({aleph0(), size_of(quotient_mod_pk(g, t.p, 1))}),
              "p-natural-density-sup"};
    }
    case T::NaturalP: {
      require_prime(t.p);
      StructuredGroup r = p_reflection(g, t.p);
      bool fin = is_finite_group(r);
      if (inv == I::Character) {
        if (fin)
          return {card_finite(count_subgroups(r, cap)),
                  "p-finite-reflection-count"};
        return {aleph0(), "p-natural-countable-base"};
      }
      if (fin)
        return {card_finite(finite_size(r)), "p-finite-reflection-size"};
      Cardinal v = sup({aleph0(), size_of(quotient_mod_pk(g, t.p, 1))});
      if (inv == I::Weight) return {v, "p-natural-weight-sup"};
      return {v, "p-natural-density-sup"};
    }
    default:
      throw UnsupportedError("no closed-form invariant rule for topology " +
                             to_string(t));
  }
}

Verdict check_log_bound(const StructuredGroup& g, CardinalMode mode) {
  if (is_finite_group(g))
    throw InvalidArgument("log-bound is posed for infinite groups only");
  if (!is_in_class(g, cls(GroupClassKind::ResiduallyFinite)))
    throw InvalidArgument("log-bound is posed for residually finite groups");
  Cardinal w = invariant(g, topo(TopologyKind::Natural),
                         CardinalInvariantKind::Weight)
                   .value;
  return leq_log(size_of(g), w, mode);
}

}  // namespace agt
