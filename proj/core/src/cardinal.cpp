#include "agt/cardinal.hpp"

#include <algorithm>
#include <sstream>

#include "agt/error.hpp"

namespace agt {

namespace {
// 2^n stays symbolic past this bit count; exp2(Finite n) below must fold
// to an exact integer, so we guard against pathological inputs.
constexpr unsigned kMaxFiniteExp2 = 1u << 20;
}  // namespace

struct Cardinal::Node {
  Kind kind;
  Int finite;           // Kind::Finite
  unsigned aleph = 0;   // Kind::Aleph
  Cardinal exp{nullptr};  // Kind::Exp (argument; unset otherwise)
  std::vector<Cardinal> sup;  // Kind::Sup

  explicit Node(Kind k) : kind(k) {}
};

Cardinal::Cardinal() { *this = card_finite(0); }

Cardinal::Kind Cardinal::kind() const { return node_->kind; }

bool Cardinal::is_zero() const {
  return node_->kind == Kind::Finite && node_->finite == 0;
}

const Int& Cardinal::finite_value() const {
  internal_check(kind() == Kind::Finite, "finite_value on non-finite cardinal");
  return node_->finite;
}

unsigned Cardinal::aleph_index() const {
  internal_check(kind() == Kind::Aleph, "aleph_index on non-aleph cardinal");
  return node_->aleph;
}

const Cardinal& Cardinal::exp_arg() const {
  internal_check(kind() == Kind::Exp, "exp_arg on non-exp cardinal");
  return node_->exp;
}

const std::vector<Cardinal>& Cardinal::sup_members() const {
  internal_check(kind() == Kind::Sup, "sup_members on non-sup cardinal");
  return node_->sup;
}

int Cardinal::structural_cmp(const Cardinal& a, const Cardinal& b) {
  if (a.node_ == b.node_) return 0;
  auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Finite:
      if (a.node_->finite == b.node_->finite) return 0;
      return a.node_->finite < b.node_->finite ? -1 : 1;
    case Kind::Aleph:
      if (a.node_->aleph == b.node_->aleph) return 0;
      return a.node_->aleph < b.node_->aleph ? -1 : 1;
    case Kind::Exp:
      return structural_cmp(a.node_->exp, b.node_->exp);
    case Kind::Sup: {
      const auto& xs = a.node_->sup;
      const auto& ys = b.node_->sup;
      size_t n = std::min(xs.size(), ys.size());
      for (size_t i = 0; i < n; ++i) {
        int c = structural_cmp(xs[i], ys[i]);
        if (c != 0) return c;
      }
      if (xs.size() == ys.size()) return 0;
      return xs.size() < ys.size() ? -1 : 1;
    }
  }
  return 0;  // unreachable
}

bool Cardinal::operator==(const Cardinal& o) const {
  return structural_cmp(*this, o) == 0;
}

Cardinal card_finite(Int n) {
  internal_check(n >= 0, "negative finite cardinal");
  auto node = std::make_shared<Cardinal::Node>(Cardinal::Kind::Finite);
  node->finite = std::move(n);
  return Cardinal(std::move(node));
}

Cardinal card_aleph(unsigned index) {
  auto node = std::make_shared<Cardinal::Node>(Cardinal::Kind::Aleph);
  node->aleph = index;
  return Cardinal(std::move(node));
}

namespace {

// Provability kernel: two sound semi-deciders for <= and < in ZFC.
// Both only ever answer "yes, provable" (true) or "not proved" (false).
bool provable_leq(const Cardinal& a, const Cardinal& b);
bool provable_lt(const Cardinal& a, const Cardinal& b);

bool provable_leq(const Cardinal& a, const Cardinal& b) {
  using K = Cardinal::Kind;
  if (a == b) return true;
  // Sup on either side reduces to members first.
  if (a.kind() == K::Sup) {
    for (const auto& m : a.sup_members())
      if (!provable_leq(m, b)) return false;
    return true;
  }
  if (b.kind() == K::Sup) {
    for (const auto& m : b.sup_members())
      if (provable_leq(a, m)) return true;
    return false;
  }
  if (a.kind() == K::Finite) {
    if (b.kind() == K::Finite) return a.finite_value() <= b.finite_value();
    return true;  // any normalized non-finite cardinal is infinite
  }
  if (b.kind() == K::Finite) return false;  // infinite <= finite never
  if (a.kind() == K::Aleph && b.kind() == K::Aleph)
    return a.aleph_index() <= b.aleph_index();
  if (b.kind() == K::Exp) {
    // a <= d  ==>  a <= 2^d   (Cantor composed with monotonicity)
    if (provable_leq(a, b.exp_arg())) return true;
    // aleph_{i} <= 2^c whenever aleph_{i-1} <= c (successor bound).
    if (a.kind() == K::Aleph) {
      unsigned i = a.aleph_index();
      if (i >= 1 && provable_leq(card_aleph(i - 1), b.exp_arg())) return true;
    }
    // 2^c <= 2^d if c <= d.
    if (a.kind() == K::Exp && provable_leq(a.exp_arg(), b.exp_arg()))
      return true;
  }
  return false;
}

bool provable_lt(const Cardinal& a, const Cardinal& b) {
  using K = Cardinal::Kind;
  if (a.kind() == K::Sup) {
    for (const auto& m : a.sup_members())
      if (!provable_lt(m, b)) return false;
    return true;
  }
  if (b.kind() == K::Sup) {
    for (const auto& m : b.sup_members())
      if (provable_lt(a, m)) return true;
    return false;
  }
  if (a.kind() == K::Finite) {
    if (b.kind() == K::Finite) return a.finite_value() < b.finite_value();
    return true;
  }
  if (b.kind() == K::Finite) return false;
  if (a.kind() == K::Aleph && b.kind() == K::Aleph)
    return a.aleph_index() < b.aleph_index();
  if (b.kind() == K::Exp) {
    // Cantor: a <= d < 2^d <= 2^d.
    if (provable_leq(a, b.exp_arg())) return true;
  }
  // NOTE: no strict monotonicity for Exp (2^c < 2^d from c < d is not a
  // theorem of ZFC), and no rule puts an Exp strictly below an Aleph.
  return false;
}

}  // namespace

// Under GCH every normalized cardinal collapses to Finite or Aleph.
Cardinal gch_reduce(const Cardinal& c) {
  using K = Cardinal::Kind;
  switch (c.kind()) {
    case K::Finite:
    case K::Aleph:
      return c;
    case K::Exp: {
      Cardinal arg = gch_reduce(c.exp_arg());
      internal_check(arg.kind() == K::Aleph, "gch_reduce: exp of non-aleph");
      return card_aleph(arg.aleph_index() + 1);
    }
    case K::Sup: {
      unsigned best = 0;
      for (const auto& m : c.sup_members()) {
        Cardinal r = gch_reduce(m);
        internal_check(r.kind() == K::Aleph, "gch_reduce: sup of non-aleph");
        best = std::max(best, r.aleph_index());
      }
      return card_aleph(best);
    }
  }
  return c;  // unreachable
}

Cardinal exp2(const Cardinal& k) {
  using K = Cardinal::Kind;
  if (k.kind() == K::Finite) {
    const Int& n = k.finite_value();
    if (n > kMaxFiniteExp2)
      throw CapError("exp2: finite exponent exceeds cap of 2^20 bits");
    return card_finite(Int(1) << static_cast<unsigned>(n));
  }
  if (k.kind() == K::Sup) {
    // 2^sup(xs) = sup(2^x) for an increasing union realized by a finite set:
    // the sup of finitely many cardinals is their max, and 2^- is monotone.
    std::vector<Cardinal> xs;
    xs.reserve(k.sup_members().size());
    for (const auto& m : k.sup_members()) xs.push_back(exp2(m));
    return sup(std::move(xs));
  }
  auto node = std::make_shared<Cardinal::Node>(K::Exp);
  node->exp = k;
  return Cardinal(std::move(node));
}

Cardinal sup(std::vector<Cardinal> xs) {
  using K = Cardinal::Kind;
  internal_check(!xs.empty(), "sup of empty set");
  // Flatten nested sups.
  std::vector<Cardinal> flat;
  for (auto& x : xs) {
    if (x.kind() == K::Sup) {
      for (const auto& m : x.sup_members()) flat.push_back(m);
    } else {
      flat.push_back(std::move(x));
    }
  }
  // Fold finite members to their max; drop them if any infinite member exists.
  Int fin_max = -1;
  std::vector<Cardinal> inf;
  for (auto& x : flat) {
    if (x.kind() == K::Finite) {
      fin_max = std::max(fin_max, x.finite_value());
    } else {
      inf.push_back(std::move(x));
    }
  }
  if (inf.empty()) return card_finite(fin_max);
  // Dedupe structurally, then drop members provably dominated by another.
  std::sort(inf.begin(), inf.end());
  inf.erase(std::unique(inf.begin(), inf.end(),
                        [](const Cardinal& a, const Cardinal& b) { return a == b; }),
            inf.end());
  std::vector<Cardinal> keep;
  for (size_t i = 0; i < inf.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < inf.size() && !dominated; ++j) {
      if (i == j) continue;
      // Keep j over i when i <= j provably; break symmetric ties by index.
      if (provable_leq(inf[i], inf[j]) &&
          !(provable_leq(inf[j], inf[i]) && j > i))
        dominated = true;
    }
    if (!dominated) keep.push_back(inf[i]);
  }
  internal_check(!keep.empty(), "sup normalization dropped all members");
  if (keep.size() == 1) return keep[0];
  auto node = std::make_shared<Cardinal::Node>(K::Sup);
  node->sup = std::move(keep);
  return Cardinal(std::move(node));
}

const Cardinal& card_zero() {
  static const Cardinal c = card_finite(0);
  return c;
}

const Cardinal& card_one() {
  static const Cardinal c = card_finite(1);
  return c;
}

const Cardinal& aleph0() {
  static const Cardinal c = card_aleph(0);
  return c;
}

const Cardinal& continuum() {
  static const Cardinal c = exp2(card_aleph(0));
  return c;
}

Cardinal add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite())
    return card_finite(a.finite_value() + b.finite_value());
  return sup({a, b});
}

Cardinal mul(const Cardinal& a, const Cardinal& b) {
  if (a.is_zero() || b.is_zero()) return card_zero();
  if (a.is_finite() && b.is_finite())
    return card_finite(a.finite_value() * b.finite_value());
  return sup({a, b});
}

Ordering cmp(const Cardinal& a, const Cardinal& b, CardinalMode mode) {
  if (mode == CardinalMode::Gch)
    return cmp(gch_reduce(a), gch_reduce(b), CardinalMode::Zfc);
  bool ab = provable_leq(a, b);
  bool ba = provable_leq(b, a);
  if (ab && ba) return Ordering::EQ;
  if (provable_lt(a, b)) return Ordering::LT;
  if (provable_lt(b, a)) return Ordering::GT;
  return Ordering::Unknown;
}

Verdict leq(const Cardinal& a, const Cardinal& b, CardinalMode mode) {
  if (mode == CardinalMode::Gch)
    return leq(gch_reduce(a), gch_reduce(b), CardinalMode::Zfc);
  if (provable_leq(a, b)) return Verdict::True;
  if (provable_lt(b, a)) return Verdict::False;
  return Verdict::Unknown;
}

Verdict leq_log(const Cardinal& a, const Cardinal& b, CardinalMode mode) {
  // log a <= b  iff  a <= 2^b; the right side is always formable.
  return leq(a, exp2(b), mode);
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "<";
    case Ordering::EQ: return "=";
    case Ordering::GT: return ">";
    case Ordering::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const Cardinal& c) {
  using K = Cardinal::Kind;
  switch (c.kind()) {
    case K::Finite:
      return c.finite_value().str();
    case K::Aleph:
      return "aleph" + std::to_string(c.aleph_index());
    case K::Exp:
      return "2^" + to_string(c.exp_arg());
    case K::Sup: {
      std::ostringstream os;
      os << "sup(";
      bool first = true;
      for (const auto& m : c.sup_members()) {
        if (!first) os << ",";
        os << to_string(m);
        first = false;
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

}  // namespace agt
