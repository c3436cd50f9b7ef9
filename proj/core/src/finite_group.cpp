#include "agt/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "agt/arith.hpp"
#include "agt/error.hpp"
#include "agt/intmat.hpp"

namespace agt {

FiniteGroup::FiniteGroup(std::vector<long long> orders, long long cap)
    : orders_(std::move(orders)) {
  for (long long d : orders_) {
    if (d < 2) throw InvalidArgument("cyclic factor orders must be >= 2");
    if (size_ > cap / d) throw CapError("finite group exceeds element cap");
    size_ *= d;
  }
  strides_.resize(orders_.size());
  long long s = 1;
  // Last coordinate varies fastest.
  for (size_t i = orders_.size(); i-- > 0;) {
    strides_[i] = s;
    s *= orders_[i];
  }
}

std::vector<long long> FiniteGroup::digits(long long x) const {
  std::vector<long long> d(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    d[i] = (x / strides_[i]) % orders_[i];
  }
  return d;
}

long long FiniteGroup::from_digits(const std::vector<long long>& d) const {
  internal_check(d.size() == orders_.size(), "from_digits: arity mismatch");
  long long x = 0;
  for (size_t i = 0; i < d.size(); ++i) x += (d[i] % orders_[i]) * strides_[i];
  return x;
}

long long FiniteGroup::add(long long x, long long y) const {
  long long out = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long a = (x / strides_[i]) % orders_[i];
    long long b = (y / strides_[i]) % orders_[i];
    out += ((a + b) % orders_[i]) * strides_[i];
  }
  return out;
}

long long FiniteGroup::neg(long long x) const {
  long long out = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long a = (x / strides_[i]) % orders_[i];
    out += ((orders_[i] - a) % orders_[i]) * strides_[i];
  }
  return out;
}

long long FiniteGroup::order_of(long long x) const {
  long long ord = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long a = (x / strides_[i]) % orders_[i];
    long long o = orders_[i] / std::gcd(orders_[i], a);
    ord = std::lcm(ord, o);
  }
  return ord;
}

void FinSubgroup::set(long long x) {
  size_t w = static_cast<size_t>(x) >> 6, b = static_cast<size_t>(x) & 63;
  if (w >= bits_.size()) bits_.resize(w + 1, 0);
  uint64_t m = uint64_t(1) << b;
  if (!(bits_[w] & m)) {
    bits_[w] |= m;
    ++count_;
  }
}

bool FinSubgroup::contains(long long x) const {
  size_t w = static_cast<size_t>(x) >> 6, b = static_cast<size_t>(x) & 63;
  return w < bits_.size() && (bits_[w] >> b) & 1;
}

long long FinSubgroup::count() const { return count_; }

std::vector<long long> FinSubgroup::elements() const {
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(count_));
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t v = bits_[w];
    while (v) {
      unsigned b = static_cast<unsigned>(__builtin_ctzll(v));
      out.push_back(static_cast<long long>((w << 6) + b));
      v &= v - 1;
    }
  }
  return out;
}

FinSubgroup FinSubgroup::trivial(const FiniteGroup& g) {
  FinSubgroup s;
  s.bits_.assign((static_cast<size_t>(g.size()) + 63) / 64, 0);
  s.count_ = 0;
  s.set(0);
  return s;
}

FinSubgroup FinSubgroup::join(const FiniteGroup& g, long long x) const {
  // this + <x> = union of translates this + k*x; a subgroup since both are.
  FinSubgroup out = *this;
  std::vector<long long> base = elements();
  long long t = x;
  while (t != 0) {
    for (long long e : base) out.set(g.add(e, t));
    t = g.add(t, x);
  }
  return out;
}

FinSubgroup FinSubgroup::from_closed_set(const FiniteGroup& g,
                                         const std::vector<long long>& elems) {
  FinSubgroup s = trivial(g);
  for (long long e : elems) s.set(e);
  return s;
}

FinSubgroup FinSubgroup::cyclic(const FiniteGroup& g, long long x) {
  return trivial(g).join(g, x);
}

FinSubgroup FinSubgroup::span(const FiniteGroup& g,
                              const std::vector<long long>& gens) {
  FinSubgroup s = trivial(g);
  for (long long x : gens) s = s.join(g, x);
  return s;
}

FinSubgroup FinSubgroup::whole(const FiniteGroup& g) {
  FinSubgroup s = trivial(g);
  s.bits_.assign(s.bits_.size(), 0);
  s.count_ = 0;
  for (long long x = 0; x < g.size(); ++x) s.set(x);
  return s;
}

FinSubgroup FinSubgroup::intersect(const FinSubgroup& o) const {
  FinSubgroup out;
  size_t n = std::min(bits_.size(), o.bits_.size());
  out.bits_.assign(std::max(bits_.size(), o.bits_.size()), 0);
  long long c = 0;
  for (size_t w = 0; w < n; ++w) {
    out.bits_[w] = bits_[w] & o.bits_[w];
    c += __builtin_popcountll(out.bits_[w]);
  }
  out.count_ = c;
  return out;
}

std::vector<long long> FinSubgroup::generators(const FiniteGroup& g) const {
  std::vector<long long> gens;
  FinSubgroup have = trivial(g);
  for (long long e : elements()) {
    if (e == 0 || have.contains(e)) continue;
    gens.push_back(e);
    have = have.join(g, e);
    if (have.count() == count_) break;
  }
  return gens;
}

bool FinSubgroup::operator<(const FinSubgroup& o) const {
  if (count_ != o.count_) return count_ < o.count_;
  return bits_ < o.bits_;
}

size_t FinSubgroup::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t w : bits_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::vector<FinSubgroup> all_subgroups(const FiniteGroup& g, size_t budget) {
  // Distinct cyclic subgroups with a chosen generator.
  std::vector<std::pair<FinSubgroup, long long>> cyclics;
  {
    std::unordered_set<FinSubgroup, FinSubgroupHash> seen;
    for (long long x = 0; x < g.size(); ++x) {
      FinSubgroup c = FinSubgroup::cyclic(g, x);
      if (seen.insert(c).second) cyclics.emplace_back(std::move(c), x);
    }
  }
  // Join-close: every subgroup is a join of cyclic ones, so closing the set
  // of cyclics under join-with-a-cyclic reaches the full lattice.
  std::unordered_set<FinSubgroup, FinSubgroupHash> lattice;
  std::deque<FinSubgroup> work;
  for (const auto& [c, x] : cyclics)
    if (lattice.insert(c).second) work.push_back(c);
  while (!work.empty()) {
    FinSubgroup s = std::move(work.front());
    work.pop_front();
    for (const auto& [c, x] : cyclics) {
      if (s.contains(x)) continue;
      FinSubgroup j = s.join(g, x);
      if (lattice.insert(j).second) {
        if (lattice.size() > budget)
          throw CapError("subgroup lattice exceeds enumeration budget");
        work.push_back(j);
      }
    }
  }
  std::vector<FinSubgroup> out(lattice.begin(), lattice.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinCharacter> all_characters(const FiniteGroup& g) {
  std::vector<FinCharacter> out;
  out.reserve(static_cast<size_t>(g.size()));
  size_t n = g.orders().size();
  std::vector<long long> nums(n, 0);
  for (;;) {
    out.push_back(FinCharacter{nums});
    size_t i = n;
    while (i > 0) {
      --i;
      if (++nums[i] < g.orders()[i]) break;
      nums[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;  // trivial group: single character
  }
}

FinSubgroup character_kernel(const FiniteGroup& g, const FinCharacter& chi) {
  // chi(x) = sum x_i * nums_i / d_i in Q/Z; zero iff the sum over the common
  // denominator L = lcm(d_i) vanishes mod L.
  long long L = 1;
  for (long long d : g.orders()) L = std::lcm(L, d);
  std::vector<long long> w(g.orders().size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = chi.nums[i] * (L / g.orders()[i]);
  std::vector<long long> zeros;
  for (long long x = 0; x < g.size(); ++x) {
    auto d = g.digits(x);
    long long acc = 0;
    for (size_t i = 0; i < w.size(); ++i) acc = (acc + d[i] % L * (w[i] % L)) % L;
    if (acc == 0) zeros.push_back(x);
  }
  return FinSubgroup::from_closed_set(g, zeros);
}

std::unordered_map<FinSubgroup, long long, FinSubgroupHash>
kernel_fiber_map(const FiniteGroup& g) {
  std::unordered_map<FinSubgroup, long long, FinSubgroupHash> out;
  for (const auto& chi : all_characters(g)) ++out[character_kernel(g, chi)];
  return out;
}

long long kernel_fiber_count(const FiniteGroup& g, const FinSubgroup& n) {
  long long c = 0;
  for (const auto& chi : all_characters(g))
    if (character_kernel(g, chi) == n) ++c;
  return c;
}

long long kernel_fiber_formula(const FiniteGroup& g, const FinSubgroup& n) {
  long long index = g.size() / n.count();
  if (index == 1) return 1;
  return quotient_cyclic(g, n) ? euler_phi(index) : 0;
}

FiniteGroup quotient_structure(const FiniteGroup& g, const FinSubgroup& n) {
  // Relation matrix of G/N on the cyclic generators: diag(orders) plus the
  // digit rows of a generating set of N.
  size_t k = g.orders().size();
  intmat::Mat rel;
  for (size_t i = 0; i < k; ++i) {
    intmat::Row r(k, 0);
    r[i] = g.orders()[i];
    rel.push_back(std::move(r));
  }
  for (long long x : n.generators(g)) {
    auto d = g.digits(x);
    intmat::Row r(k);
    for (size_t i = 0; i < k; ++i) r[i] = d[i];
    rel.push_back(std::move(r));
  }
  std::vector<long long> orders;
  for (const Int& d : intmat::snf_diagonal(std::move(rel)))
    if (d > 1) orders.push_back(d.convert_to<long long>());
  // Quotient of a capped group stays under the cap.
  return FiniteGroup(orders, g.size() == 0 ? 1 : g.size());
}

bool quotient_cyclic(const FiniteGroup& g, const FinSubgroup& n) {
  return quotient_structure(g, n).orders().size() <= 1;
}

std::vector<FinSubgroup> cyclic_quotient_subgroups(const FiniteGroup& g) {
  std::vector<FinSubgroup> out;
  for (const auto& s : all_subgroups(g))
    if (quotient_cyclic(g, s)) out.push_back(s);
  return out;
}

}  // namespace agt
