#include "agt/parse.hpp"

#include <cctype>
#include <limits>

#include "agt/arith.hpp"
#include "agt/error.hpp"

namespace agt {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    skip_ws();
    size_t n = std::char_traits<char>::length(w);
    if (s.compare(pos, n, w) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  Int read_int() {
    if (!at_digit()) fail("expected an integer");
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return Int(s.substr(start, pos - start));
  }
  long long read_ll(const char* what) {
    Int v = read_int();
    if (v > std::numeric_limits<long long>::max())
      fail(std::string(what) + " is too large");
    return static_cast<long long>(v);
  }
};

constexpr unsigned kMaxAlephIndex = 1000000;

Cardinal parse_cardinal_at(Cursor& c);

Cardinal parse_cardinal_body(Cursor& c) {
  if (c.eat_word("aleph")) {
    size_t at = c.pos;
    long long idx = c.read_ll("aleph index");
    if (idx > kMaxAlephIndex) throw ParseError("aleph index is too large", at);
    return card_aleph(static_cast<unsigned>(idx));
  }
  if (c.eat_word("sup")) {
    c.expect('(');
    std::vector<Cardinal> xs;
    xs.push_back(parse_cardinal_at(c));
    while (c.eat(',')) xs.push_back(parse_cardinal_at(c));
    c.expect(')');
    return sup(std::move(xs));
  }
  if (c.eat_word("c")) return continuum();
  if (c.at_digit()) {
    Int v = c.read_int();
    if (c.eat('^')) {
      if (v != 2) c.fail("only base-2 exponentials are supported");
      return exp2(parse_cardinal_at(c));
    }
    return card_finite(v);
  }
  c.fail("expected a cardinal");
}

Cardinal parse_cardinal_at(Cursor& c) { return parse_cardinal_body(c); }

// Multiplicity after '^': bare digits or a parenthesized cardinal.
Cardinal parse_mult(Cursor& c) {
  size_t at = c.pos;
  Cardinal m = card_one();
  if (c.eat('(')) {
    m = parse_cardinal_at(c);
    c.expect(')');
  } else {
    m = card_finite(c.read_int());
  }
  if (m == card_zero()) throw ParseError("multiplicity must be nonzero", at);
  return m;
}

void add_term(StructuredGroup& g, const Atom& a, const Cardinal& mult) {
  g.add_summand(a, mult);
}

// One atom, possibly expanding a composite Z(n) into prime-power parts.
void parse_term(Cursor& c, StructuredGroup& g) {
  std::vector<Atom> atoms;
  if (c.eat_word("Z")) {
    if (c.eat('(')) {
      size_t at = c.pos;
      long long n = c.read_ll("cyclic order");
      if (c.eat('^')) {
        if (!is_prime(n))
          throw ParseError("exponent base must be prime", at);
        if (c.eat_word("inf")) {
          atoms.push_back(Atom::prufer(n));
        } else {
          size_t kat = c.pos;
          long long k = c.read_ll("exponent");
          if (k < 1) throw ParseError("exponent must be positive", kat);
          if (k > 62) throw ParseError("exponent is too large", kat);
          atoms.push_back(Atom::cyc(n, static_cast<int>(k)));
        }
      } else {
        if (n < 2) throw ParseError("cyclic order must be at least 2", at);
        for (auto [p, e] : factorize(n)) atoms.push_back(Atom::cyc(p, e));
      }
      c.expect(')');
    } else {
      atoms.push_back(Atom::z());
    }
  } else if (c.eat_word("Q")) {
    atoms.push_back(Atom::rationals());
  } else if (c.eat_word("J") || c.eat_word("T")) {
    char kind = c.s[c.pos - 1];
    c.expect('(');
    size_t at = c.pos;
    long long p = c.read_ll("prime");
    if (!is_prime(p)) throw ParseError("argument must be prime", at);
    c.expect(')');
    atoms.push_back(kind == 'J' ? Atom::padic(p) : Atom::torprod(p));
  } else {
    c.fail("expected an atom (Z, Z(...), Q, J(p), T(p))");
  }
  Cardinal mult = card_one();
  if (c.eat('^')) mult = parse_mult(c);
  for (const Atom& a : atoms) add_term(g, a, mult);
}

}  // namespace

Cardinal parse_cardinal(const std::string& s) {
  Cursor c{s};
  Cardinal v = parse_cardinal_at(c);
  if (!c.done()) c.fail("trailing characters after cardinal");
  return v;
}

StructuredGroup parse_group(const std::string& s) {
  Cursor c{s};
  c.skip_ws();
  if (c.eat('0')) {
    if (!c.done()) c.fail("trailing characters after zero group");
    return StructuredGroup{};
  }
  StructuredGroup g;
  parse_term(c, g);
  while (c.eat('+')) parse_term(c, g);
  if (!c.done()) c.fail("trailing characters after group expression");
  return g;
}

TopologyName parse_topology(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  auto with_p = [&](TopologyKind k) {
    if (colon == std::string::npos)
      throw ParseError("p-local topology needs ':<prime>'", s.size());
    Cursor c{s};
    c.pos = colon + 1;
    long long p = c.read_ll("prime");
    if (!c.done() || !is_prime(p))
      throw ParseError("topology prime must be prime", colon + 1);
    return topo_p(k, p);
  };
  if (head == "gamma_p") return with_p(TopologyKind::ProfiniteP);
  if (head == "nu_p") return with_p(TopologyKind::NaturalP);
  if (head == "bohr_p") return with_p(TopologyKind::BohrP);
  if (colon != std::string::npos)
    throw ParseError("unexpected ':' in topology name", colon);
  if (head == "gamma") return topo(TopologyKind::Profinite);
  if (head == "nu") return topo(TopologyKind::Natural);
  if (head == "bohr") return topo(TopologyKind::Bohr);
  if (head == "discrete") return topo(TopologyKind::Discrete);
  if (head == "indiscrete") return topo(TopologyKind::Indiscrete);
  if (head == "rho") return topo(TopologyKind::ProCountable);
  if (head == "gbound") return topo(TopologyKind::AlephBounded);
  throw ParseError("unknown topology '" + s + "'", 0);
}

GroupClass parse_class(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  for (GroupClassKind k : all_class_kinds()) {
    if (head != class_kind_token(k)) continue;
    if (class_parametric(k)) {
      if (colon == std::string::npos)
        throw ParseError("class needs ':<prime>'", s.size());
      Cursor c{s};
      c.pos = colon + 1;
      long long p = c.read_ll("prime");
      if (!c.done() || !is_prime(p))
        throw ParseError("class prime must be prime", colon + 1);
      return cls_p(k, p);
    }
    if (colon != std::string::npos)
      throw ParseError("class does not take a prime", colon);
    return cls(k);
  }
  throw ParseError("unknown class '" + s + "'", 0);
}

CardinalInvariantKind parse_invariant(const std::string& s) {
  if (s == "w") return CardinalInvariantKind::Weight;
  if (s == "chi") return CardinalInvariantKind::Character;
  if (s == "d") return CardinalInvariantKind::Density;
  throw ParseError("unknown invariant '" + s + "' (expected w, chi or d)", 0);
}

intmat::Mat parse_matrix(const std::string& s) {
  Cursor c{s};
  c.expect('[');
  intmat::Mat m;
  if (!c.eat(']')) {
    do {
      c.expect('[');
      intmat::Row row;
      if (!c.eat(']')) {
        do {
          bool neg = c.eat('-');
          Int v = c.read_int();
          row.push_back(neg ? -v : v);
        } while (c.eat(','));
        c.expect(']');
      }
      if (!m.empty() && row.size() != m[0].size())
        c.fail("matrix rows must have equal length");
      m.push_back(std::move(row));
    } while (c.eat(','));
    c.expect(']');
  }
  if (!c.done()) c.fail("trailing characters after matrix");
  return m;
}

FgGroup fg_group_of(const StructuredGroup& g) {
  constexpr int kMaxDim = 64;
  FgGroup r;
  for (const auto& [a, mult] : g.summands()) {
    if (!mult.is_finite())
      throw InvalidArgument("not finitely generated: infinite multiplicity");
    Int mi = mult.finite_value();
    if (mi > kMaxDim) throw CapError("f.g. engine: rank cap exceeded");
    int m = static_cast<int>(mi);
    switch (a.kind) {
      case AtomKind::Z:
        r.free_rank += m;
        break;
      case AtomKind::Cyc: {
        long long order = 0;
        if (!checked_pow(a.p, a.k, 1000000000000000000LL, order))
          throw CapError("f.g. engine: torsion order too large");
        for (int i = 0; i < m; ++i) r.torsion_orders.push_back(order);
        break;
      }
      default:
        throw InvalidArgument("not finitely generated: " + to_string(a));
    }
    if (r.dim() > kMaxDim) throw CapError("f.g. engine: rank cap exceeded");
  }
  return r;
}

}  // namespace agt
