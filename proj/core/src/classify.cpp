#include "agt/classify.hpp"

#include <algorithm>

#include "agt/arith.hpp"
#include "agt/cardinal.hpp"
#include "agt/error.hpp"

namespace agt {

bool topology_parametric(TopologyKind k) {
  return k == TopologyKind::ProfiniteP || k == TopologyKind::NaturalP ||
         k == TopologyKind::BohrP;
}

std::string to_string(const TopologyName& t) {
  switch (t.kind) {
    case TopologyKind::Profinite: return "gamma";
    case TopologyKind::Natural: return "nu";
    case TopologyKind::Bohr: return "bohr";
    case TopologyKind::ProfiniteP: return "gamma_p:" + std::to_string(t.p);
    case TopologyKind::NaturalP: return "nu_p:" + std::to_string(t.p);
    case TopologyKind::BohrP: return "bohr_p:" + std::to_string(t.p);
    case TopologyKind::Discrete: return "discrete";
    case TopologyKind::Indiscrete: return "indiscrete";
    case TopologyKind::ProCountable: return "rho";
    case TopologyKind::AlephBounded: return "gbound";
  }
  throw InternalError("unhandled topology kind");
}

bool class_parametric(GroupClassKind k) {
  switch (k) {
    case GroupClassKind::FiniteP:
    case GroupClassKind::BoundedP:
    case GroupClassKind::PDivisible:
    case GroupClassKind::TorsionNoP:
    case GroupClassKind::ResiduallyPFinite:
    case GroupClassKind::NarrowP:
      return true;
    default:
      return false;
  }
}

std::vector<GroupClassKind> all_class_kinds() {
  return {
      GroupClassKind::Zero,
      GroupClassKind::Finite,
      GroupClassKind::FiniteP,
      GroupClassKind::Bounded,
      GroupClassKind::BoundedP,
      GroupClassKind::Countable,
      GroupClassKind::Divisible,
      GroupClassKind::PDivisible,
      GroupClassKind::TorsionNoP,
      GroupClassKind::ResiduallyFinite,
      GroupClassKind::ResiduallyPFinite,
      GroupClassKind::Narrow,
      GroupClassKind::NarrowP,
      GroupClassKind::AlmostDivisible,
      GroupClassKind::StronglyNonDivisible,
      GroupClassKind::FiniteRankFree,
  };
}

std::string class_kind_token(GroupClassKind k) {
  switch (k) {
    case GroupClassKind::Zero: return "zero";
    case GroupClassKind::Finite: return "finite";
    case GroupClassKind::FiniteP: return "finite_p";
    case GroupClassKind::Bounded: return "bounded";
    case GroupClassKind::BoundedP: return "bounded_p";
    case GroupClassKind::Countable: return "countable";
    case GroupClassKind::Divisible: return "divisible";
    case GroupClassKind::PDivisible: return "p_divisible";
    case GroupClassKind::TorsionNoP: return "torsion_no_p";
    case GroupClassKind::ResiduallyFinite: return "residually_finite";
    case GroupClassKind::ResiduallyPFinite: return "residually_p_finite";
    case GroupClassKind::Narrow: return "narrow";
    case GroupClassKind::NarrowP: return "narrow_p";
    case GroupClassKind::AlmostDivisible: return "almost_divisible";
    case GroupClassKind::StronglyNonDivisible: return "strongly_non_divisible";
    case GroupClassKind::FiniteRankFree: return "finite_rank_free";
  }
  throw InternalError("unhandled class kind");
}

std::string to_string(const GroupClass& c) {
  std::string s = class_kind_token(c.kind);
  if (class_parametric(c.kind)) s += ":" + std::to_string(c.p);
  return s;
}

namespace {

void require_prime(long long p) {
  if (p < 2 || !is_prime(p)) throw InvalidArgument("class prime must be prime");
}

}  // namespace

bool is_in_class(const StructuredGroup& g, const GroupClass& c) {
  if (class_parametric(c.kind)) require_prime(c.p);
  const auto& parts = g.summands();
  switch (c.kind) {
    case GroupClassKind::Zero:
      return g.is_zero();
    case GroupClassKind::Finite:
      return is_finite_group(g);
    case GroupClassKind::FiniteP:
      if (!is_finite_group(g)) return false;
      return std::all_of(parts.begin(), parts.end(),
                         [&](const auto& s) { return s.first.p == c.p; });
    case GroupClassKind::Bounded:
      return exponent_of(g).has_value();
    case GroupClassKind::BoundedP:
      return std::all_of(parts.begin(), parts.end(), [&](const auto& s) {
        return s.first.kind == AtomKind::Cyc && s.first.p == c.p;
      });
    case GroupClassKind::Countable:
      return leq(size_of(g), aleph0(), CardinalMode::Zfc) == Verdict::True;
    case GroupClassKind::Divisible:
      return std::all_of(parts.begin(), parts.end(),
                         [](const auto& s) { return atom_divisible(s.first); });
    case GroupClassKind::PDivisible:
      return std::all_of(parts.begin(), parts.end(), [&](const auto& s) {
        return atom_p_divisible(s.first, c.p);
      });
    case GroupClassKind::TorsionNoP:
      return std::all_of(parts.begin(), parts.end(), [&](const auto& s) {
        const Atom& a = s.first;
        bool torsion = a.kind == AtomKind::Cyc || a.kind == AtomKind::Prufer ||
                       a.kind == AtomKind::TorProd;
        return torsion && a.p != c.p;
      });
    case GroupClassKind::ResiduallyFinite:
      return ulm_subgroup(g).is_zero();
    case GroupClassKind::ResiduallyPFinite:
      return p_ulm_subgroup(g, c.p).is_zero();
    case GroupClassKind::Narrow: {
      for (long long q : witness_primes(g))
        if (!is_finite_group(quotient_mod_pk(g, q, 1))) return false;
      return true;
    }
    case GroupClassKind::NarrowP:
      return is_finite_group(quotient_mod_pk(g, c.p, 1));
    case GroupClassKind::AlmostDivisible:
      return is_finite_group(hausdorff_reflection(g));
    case GroupClassKind::StronglyNonDivisible: {
      for (const auto& [a, mult] : parts) {
        if (a.kind == AtomKind::Cyc) continue;
        if (a.kind == AtomKind::Z && mult.is_finite()) continue;
        return false;
      }
      return true;
    }
    case GroupClassKind::FiniteRankFree:
      for (const auto& [a, mult] : parts)
        if (a.kind != AtomKind::Z || !mult.is_finite()) return false;
      return true;
  }
  throw InternalError("unhandled class kind");
}

namespace {

bool p_local(TopologyKind k) { return topology_parametric(k); }

// Coincidence criteria for unordered pairs of topologies. Pairs with one
// p-local member inherit its prime; pairs with two share it (callers have
// already rejected mixed primes).
std::optional<GroupClass> pair_rule(TopologyKind a, TopologyKind b,
                                    long long p) {
  auto is = [&](TopologyKind x, TopologyKind y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  using T = TopologyKind;
  using C = GroupClassKind;
  if (is(T::Profinite, T::Natural)) return cls(C::Narrow);
  if (is(T::Natural, T::Bohr)) return cls(C::Narrow);
  if (is(T::Profinite, T::Bohr)) return cls(C::Bounded);
  if (is(T::Natural, T::Discrete)) return cls(C::Bounded);
  if (is(T::Profinite, T::Discrete)) return cls(C::Finite);
  if (is(T::Bohr, T::Discrete)) return cls(C::Finite);
  if (is(T::Natural, T::Indiscrete)) return cls(C::Divisible);
  if (is(T::Profinite, T::Indiscrete)) return cls(C::Divisible);
  if (is(T::Discrete, T::Indiscrete)) return cls(C::Zero);
  if (is(T::ProCountable, T::Indiscrete)) return cls(C::Zero);
  if (is(T::AlephBounded, T::Indiscrete)) return cls(C::Zero);
  if (is(T::AlephBounded, T::Discrete)) return cls(C::Countable);
  if (is(T::ProCountable, T::Discrete)) return cls(C::Countable);
  if (is(T::NaturalP, T::Discrete)) return cls_p(C::BoundedP, p);
  if (is(T::ProfiniteP, T::Discrete)) return cls_p(C::FiniteP, p);
  if (is(T::BohrP, T::Discrete)) return cls_p(C::FiniteP, p);
  if (is(T::ProfiniteP, T::Bohr)) return cls_p(C::BoundedP, p);
  if (is(T::ProfiniteP, T::NaturalP)) return cls_p(C::NarrowP, p);
  if (is(T::NaturalP, T::BohrP)) return cls_p(C::NarrowP, p);
  if (is(T::ProfiniteP, T::BohrP)) return cls_p(C::BoundedP, p);
  if (is(T::NaturalP, T::Indiscrete)) return cls_p(C::PDivisible, p);
  if (is(T::ProfiniteP, T::Indiscrete)) return cls_p(C::PDivisible, p);
  if (is(T::BohrP, T::Indiscrete)) return cls_p(C::TorsionNoP, p);
  return std::nullopt;
}

}  // namespace

EqualizerAnswer equalizer_member(const TopologyName& t, const TopologyName& s,
                                 const StructuredGroup& g) {
  if (p_local(t.kind)) require_prime(t.p);
  if (p_local(s.kind)) require_prime(s.p);
  if (t == s) return {Verdict::True, std::nullopt, "identical topologies"};
  if (p_local(t.kind) && p_local(s.kind) && t.p != s.p)
    return {Verdict::Unknown, std::nullopt,
            "p-local topologies at distinct primes; no criterion recorded"};
  long long p = p_local(t.kind) ? t.p : s.p;
  auto rule = pair_rule(t.kind, s.kind, p);
  if (!rule)
    return {Verdict::Unknown, std::nullopt,
            "no coincidence criterion recorded for this pair"};
  return {verdict_of(is_in_class(g, *rule)), rule, ""};
}

std::optional<GroupClass> hausdorff_class(const TopologyName& t) {
  switch (t.kind) {
    case TopologyKind::Bohr:
    case TopologyKind::ProCountable:
    case TopologyKind::AlephBounded:
      return std::nullopt;  // Hausdorff on every group
    case TopologyKind::Profinite:
    case TopologyKind::Natural:
      return cls(GroupClassKind::ResiduallyFinite);
    case TopologyKind::ProfiniteP:
    case TopologyKind::NaturalP:
      require_prime(t.p);
      return cls_p(GroupClassKind::ResiduallyPFinite, t.p);
    default:
      throw InvalidArgument("hausdorff criterion not posed for " +
                            to_string(t));
  }
}

Verdict is_hausdorff(const TopologyName& t, const StructuredGroup& g) {
  auto c = hausdorff_class(t);
  if (!c) return Verdict::True;
  return verdict_of(is_in_class(g, *c));
}

bool class_quotient_member(const GroupClass& c, const FgGroup& g,
                           const FgSubgroup& h) {
  FgGroup q = quotient_shape(g, h);
  auto all_p_power = [&](long long p) {
    for (long long d : q.torsion_orders) {
      while (d % p == 0) d /= p;
      if (d != 1) return false;
    }
    return true;
  };
  switch (c.kind) {
    case GroupClassKind::Finite:
    case GroupClassKind::Bounded:  // bounded f.g. groups are finite
      return q.free_rank == 0;
    case GroupClassKind::FiniteP:
    case GroupClassKind::BoundedP:
      require_prime(c.p);
      return q.free_rank == 0 && all_p_power(c.p);
    case GroupClassKind::Countable:
      return true;
    case GroupClassKind::FiniteRankFree:
      return q.torsion_orders.empty();
    default:
      throw InvalidArgument("class does not cut out a neighbourhood base: " +
                            to_string(c));
  }
}

}  // namespace agt
