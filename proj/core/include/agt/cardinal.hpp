#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "agt/verdict.hpp"

namespace agt {

using Int = boost::multiprecision::cpp_int;

// Evaluation mode for comparisons. Zfc decides only what the implemented ZFC
// rules prove and answers Unknown otherwise; Gch additionally rewrites
// 2^aleph_i -> aleph_{i+1}, which makes every comparison total.
enum class CardinalMode { Zfc, Gch };

enum class Ordering { LT, EQ, GT, Unknown };

std::string to_string(Ordering o);

// Symbolic cardinal in normal form. Values are immutable; every factory
// normalizes:
//   - exp2(Finite n) is rewritten to Finite(2^n)
//   - exp2 distributes over Sup (2^max = max of 2^members)
//   - Sup sets are flattened, deduplicated, finite members folded into a
//     maximum, members dominated under a decided ZFC comparison removed,
//     singletons collapsed
// Hence: Exp arguments are Aleph or Exp; Sup members are Aleph or Exp,
// pairwise ZFC-incomparable, at least two of them.
class Cardinal {
 public:
  enum class Kind { Finite, Aleph, Exp, Sup };

  Cardinal();  // Finite(0)

  Kind kind() const;
  bool is_finite() const { return kind() == Kind::Finite; }
  bool is_zero() const;

  const Int& finite_value() const;                 // Kind::Finite
  unsigned aleph_index() const;                    // Kind::Aleph
  const Cardinal& exp_arg() const;                 // Kind::Exp
  const std::vector<Cardinal>& sup_members() const;  // Kind::Sup

  bool operator==(const Cardinal& o) const;
  bool operator!=(const Cardinal& o) const { return !(*this == o); }

  // Total structural order used for canonical storage, not cardinality.
  static int structural_cmp(const Cardinal& a, const Cardinal& b);
  bool operator<(const Cardinal& o) const { return structural_cmp(*this, o) < 0; }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit Cardinal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  // Tag ctor for Node's embedded slot: no allocation, so building a Node
  // cannot itself build a Node.
  explicit Cardinal(std::nullptr_t) noexcept {}

  friend Cardinal card_finite(Int n);
  friend Cardinal card_aleph(unsigned index);
  friend Cardinal exp2(const Cardinal& k);
  friend Cardinal sup(std::vector<Cardinal> xs);
};

Cardinal card_finite(Int n);  // n >= 0
Cardinal card_aleph(unsigned index);
Cardinal exp2(const Cardinal& k);
Cardinal sup(std::vector<Cardinal> xs);  // xs nonempty

const Cardinal& card_zero();
const Cardinal& card_one();
const Cardinal& aleph0();
const Cardinal& continuum();  // 2^aleph0

// Cardinal sum/product: exact on finite pairs, max (as a sup) otherwise.
Cardinal add(const Cardinal& a, const Cardinal& b);
Cardinal mul(const Cardinal& a, const Cardinal& b);

Ordering cmp(const Cardinal& a, const Cardinal& b, CardinalMode mode);

// Three-valued "a <= b". In Zfc mode True means provable from the rules,
// False means "b < a" is provable; Unknown otherwise. Total in Gch mode.
Verdict leq(const Cardinal& a, const Cardinal& b, CardinalMode mode);

// "log a <= b", decided as "a <= 2^b" without ever forming a logarithm.
Verdict leq_log(const Cardinal& a, const Cardinal& b, CardinalMode mode);

// Collapse to the aleph scale assuming GCH (2^aleph_i = aleph_{i+1}).
Cardinal gch_reduce(const Cardinal& c);

std::string to_string(const Cardinal& c);

}  // namespace agt
