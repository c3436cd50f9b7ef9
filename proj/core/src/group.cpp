#include "agt/group.hpp"

#include <algorithm>
#include <sstream>

#include "agt/arith.hpp"
#include "agt/error.hpp"

namespace agt {

StructuredGroup StructuredGroup::single(const Atom& a, const Cardinal& mult) {
  StructuredGroup g;
  g.add_summand(a, mult);
  return g;
}

void StructuredGroup::add_summand(const Atom& a, const Cardinal& mult) {
  if (mult.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, mult);
  } else {
    it->second = add(it->second, mult);
  }
}

StructuredGroup direct_sum(const StructuredGroup& a, const StructuredGroup& b) {
  StructuredGroup out = a;
  for (const auto& [atom, mult] : b.summands()) out.add_summand(atom, mult);
  return out;
}

Cardinal atom_size(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Z: return aleph0();
    case AtomKind::Cyc: {
      Int v = 1;
      for (int i = 0; i < a.k; ++i) v *= a.p;
      return card_finite(v);
    }
    case AtomKind::Prufer: return aleph0();
    case AtomKind::Q: return aleph0();
    case AtomKind::PAdic: return continuum();
    case AtomKind::TorProd: return continuum();
  }
  throw InternalError("atom_size: bad kind");
}

Cardinal atom_rank0(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Z: return card_one();
    case AtomKind::Q: return card_one();
    case AtomKind::PAdic: return continuum();
    default: return card_zero();
  }
}

Cardinal atom_rankp(const Atom& a, long long p) {
  // r_p = dimension of the socle a[p] over F_p. J_p is torsion-free, so its
  // p-rank is 0; T_p[p] = prod_n Z(p^n)[p] has dimension continuum.
  switch (a.kind) {
    case AtomKind::Cyc: return a.p == p ? card_one() : card_zero();
    case AtomKind::Prufer: return a.p == p ? card_one() : card_zero();
    case AtomKind::TorProd: return a.p == p ? continuum() : card_zero();
    default: return card_zero();
  }
}

bool atom_divisible(const Atom& a) {
  return a.kind == AtomKind::Prufer || a.kind == AtomKind::Q;
}

bool atom_p_divisible(const Atom& a, long long p) {
  switch (a.kind) {
    case AtomKind::Z: return false;
    case AtomKind::Cyc: return a.p != p;  // p invertible mod q^k
    case AtomKind::Prufer: return true;   // divisible
    case AtomKind::Q: return true;
    case AtomKind::PAdic: return a.p != p;
    case AtomKind::TorProd: return a.p != p;
  }
  throw InternalError("atom_p_divisible: bad kind");
}

StructuredGroup atom_quotient_pk(const Atom& a, long long p, int k) {
  internal_check(k >= 1, "atom_quotient_pk: k must be positive");
  StructuredGroup out;
  switch (a.kind) {
    case AtomKind::Z:
      out.add_summand(Atom::cyc(p, k), card_one());
      return out;
    case AtomKind::Cyc:
      if (a.p == p)
        out.add_summand(Atom::cyc(p, std::min(a.k, k)), card_one());
      return out;
    case AtomKind::Prufer:
    case AtomKind::Q:
      return out;  // divisible
    case AtomKind::PAdic:
      if (a.p == p) out.add_summand(Atom::cyc(p, k), card_one());
      return out;
    case AtomKind::TorProd:
      // T/p^kT: an element killed by p^j has coordinates in p^k Z(p^n) from
      // n = j+k on, so the image in prod_n Z(p^min(n,k)) is the direct sum;
      // lifting finitely many coordinates stays bounded, so the map is onto
      // it with kernel exactly p^k T.
      if (a.p == p) {
        for (int n = 1; n < k; ++n) out.add_summand(Atom::cyc(p, n), card_one());
        out.add_summand(Atom::cyc(p, k), aleph0());
      }
      return out;
  }
  throw InternalError("atom_quotient_pk: bad kind");
}

namespace {
// Size of a summand a^(mult): |a|^m exactly for finite m, max otherwise
// (direct sums take finite-support tuples).
Cardinal term_size(const Atom& a, const Cardinal& mult) {
  Cardinal s = atom_size(a);
  if (mult.is_finite()) {
    const Int& m = mult.finite_value();
    internal_check(m >= 1, "term_size: zero multiplicity");
    if (!s.is_finite()) return s;
    const Int& base = s.finite_value();
    Int bits = Int(boost::multiprecision::msb(base) + 1) * m;
    if (bits > (Int(1) << 20))
      throw CapError("group size exceeds 2^20-bit cap");
    return card_finite(boost::multiprecision::pow(base, m.convert_to<unsigned>()));
  }
  return sup({s, mult});
}

// mult copies of a cardinal-valued atom invariant, as a cardinal sum.
Cardinal scale(const Cardinal& value, const Cardinal& mult) {
  if (value.is_zero()) return card_zero();
  return mul(value, mult);
}
}  // namespace

Cardinal size_of(const StructuredGroup& g) {
  Cardinal total = card_one();
  for (const auto& [a, mult] : g.summands()) total = mul(total, term_size(a, mult));
  return total;
}

Cardinal rank0(const StructuredGroup& g) {
  Cardinal total = card_zero();
  for (const auto& [a, mult] : g.summands())
    total = add(total, scale(atom_rank0(a), mult));
  return total;
}

Cardinal rankp(const StructuredGroup& g, long long p) {
  Cardinal total = card_zero();
  for (const auto& [a, mult] : g.summands())
    total = add(total, scale(atom_rankp(a, p), mult));
  return total;
}

StructuredGroup quotient_mod_pk(const StructuredGroup& g, long long p, int k) {
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands()) {
    StructuredGroup q = atom_quotient_pk(a, p, k);
    for (const auto& [qa, qmult] : q.summands())
      out.add_summand(qa, mul(qmult, mult));
  }
  return out;
}

StructuredGroup quotient_mod(const StructuredGroup& g, const Int& m) {
  if (m <= 0) throw InvalidArgument("quotient modulus must be positive");
  if (m > Int(std::numeric_limits<long long>::max()))
    throw CapError("quotient modulus too large to factor");
  long long mv = m.convert_to<long long>();
  if (mv == 1) return StructuredGroup{};
  // G/mG decomposes by CRT over the prime powers of m.
  StructuredGroup out;
  for (const auto& [p, k] : factorize(mv))
    out = direct_sum(out, quotient_mod_pk(g, p, k));
  return out;
}

StructuredGroup ulm_subgroup(const StructuredGroup& g) {
  // Atomwise: divisible atoms are their own first Ulm subgroup, the rest
  // (Z, Cyc, J_p, T_p) have trivial intersection of the chains mG.
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands())
    if (atom_divisible(a)) out.add_summand(a, mult);
  return out;
}

StructuredGroup p_ulm_subgroup(const StructuredGroup& g, long long p) {
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands())
    if (atom_p_divisible(a, p)) out.add_summand(a, mult);
  return out;
}

StructuredGroup divisible_part(const StructuredGroup& g) {
  return ulm_subgroup(g);  // coincides on the atom universe
}

StructuredGroup torsion_part(const StructuredGroup& g) {
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands())
    if (a.kind == AtomKind::Cyc || a.kind == AtomKind::Prufer ||
        a.kind == AtomKind::TorProd)
      out.add_summand(a, mult);
  return out;
}

StructuredGroup hausdorff_reflection(const StructuredGroup& g) {
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands())
    if (!atom_divisible(a)) out.add_summand(a, mult);
  return out;
}

StructuredGroup p_reflection(const StructuredGroup& g, long long p) {
  StructuredGroup out;
  for (const auto& [a, mult] : g.summands())
    if (!atom_p_divisible(a, p)) out.add_summand(a, mult);
  return out;
}

std::optional<Int> exponent_of(const StructuredGroup& g) {
  Int e = 1;
  for (const auto& [a, mult] : g.summands()) {
    if (a.kind != AtomKind::Cyc) return std::nullopt;
    Int q = 1;
    for (int i = 0; i < a.k; ++i) q *= a.p;
    e = boost::multiprecision::lcm(e, q);
  }
  return e;
}

bool is_finite_group(const StructuredGroup& g) {
  for (const auto& [a, mult] : g.summands())
    if (a.kind != AtomKind::Cyc || !mult.is_finite()) return false;
  return true;
}

Int finite_size(const StructuredGroup& g) {
  internal_check(is_finite_group(g), "finite_size on infinite group");
  Cardinal s = size_of(g);
  return s.finite_value();
}

std::vector<long long> atom_primes(const StructuredGroup& g) {
  std::vector<long long> ps;
  for (const auto& [a, mult] : g.summands())
    if (a.p != 0) ps.push_back(a.p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

long long generic_prime(const StructuredGroup& g) {
  auto ps = atom_primes(g);
  long long c = 2;
  while (std::find(ps.begin(), ps.end(), c) != ps.end()) c = next_prime_after(c);
  return c;
}

std::vector<long long> witness_primes(const StructuredGroup& g) {
  std::vector<long long> ps = atom_primes(g);
  if (contains_kind(g, AtomKind::Z)) ps.push_back(generic_prime(g));
  return ps;
}

bool contains_kind(const StructuredGroup& g, AtomKind k) {
  for (const auto& [a, mult] : g.summands())
    if (a.kind == k) return true;
  return false;
}

InvariantsRecord invariants(const StructuredGroup& g) {
  InvariantsRecord r;
  r.size = size_of(g);
  r.rank0 = rank0(g);
  for (long long p : atom_primes(g)) {
    r.rankp[p] = rankp(g, p);
    r.mod_p[p] = quotient_mod_pk(g, p, 1);
    r.ulm_p[p] = p_ulm_subgroup(g, p);
  }
  r.ulm = ulm_subgroup(g);
  r.divisible = divisible_part(g);
  r.torsion = torsion_part(g);
  r.exponent = exponent_of(g);
  return r;
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Z: return "Z";
    case AtomKind::Cyc:
      if (a.k == 1) return "Z(" + std::to_string(a.p) + ")";
      return "Z(" + std::to_string(a.p) + "^" + std::to_string(a.k) + ")";
    case AtomKind::Prufer: return "Z(" + std::to_string(a.p) + "^inf)";
    case AtomKind::Q: return "Q";
    case AtomKind::PAdic: return "J(" + std::to_string(a.p) + ")";
    case AtomKind::TorProd: return "T(" + std::to_string(a.p) + ")";
  }
  throw InternalError("to_string: bad atom kind");
}

std::string to_string(const StructuredGroup& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, mult] : g.summands()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(a);
    if (mult.is_finite()) {
      if (mult.finite_value() != 1) os << "^" << mult.finite_value().str();
    } else {
      os << "^(" << to_string(mult) << ")";
    }
  }
  return os.str();
}

}  // namespace agt
