#pragma once
// Subsets of a finite group as 64-bit masks over element indices, plus
// translation, the product-with-multiplicity check, normalization, and the
// lexicographic stream of identity-containing Lagrange subsets.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouptile/common.hpp"

namespace grouptile {

class GroupTable;

// Value type: a set of element indices of a group of order n <= 64.
// No bit above position n-1 is ever set.
class Subset {
 public:
  Subset() = default;
  Subset(int group_order, uint64_t bits);

  static Subset empty(int group_order) { return Subset(group_order, 0); }
  static Subset full(int group_order);
  static Subset of(int group_order, std::initializer_list<Elem> xs);
  static Subset from_elements(int group_order, const std::vector<Elem>& xs);

  int group_order() const { return n_; }
  uint64_t bits() const { return bits_; }
  int size() const;
  bool empty_set() const { return bits_ == 0; }
  bool contains(Elem x) const { return (bits_ >> x) & 1u; }
  void add(Elem x);
  void remove(Elem x);
  Elem min_element() const;            // requires a nonempty set
  std::vector<Elem> elements() const;  // ascending index order

  bool disjoint_with(const Subset& o) const { return (bits_ & o.bits_) == 0; }
  bool contains_all(const Subset& o) const { return (o.bits_ & ~bits_) == 0; }
  Subset unite(const Subset& o) const { return Subset(n_, bits_ | o.bits_); }
  Subset intersect(const Subset& o) const { return Subset(n_, bits_ & o.bits_); }
  Subset difference(const Subset& o) const { return Subset(n_, bits_ & ~o.bits_); }

  bool operator==(const Subset&) const = default;

  // Order matching the enumeration streams: compare the ascending element
  // tuples lexicographically. Both sets must have the same cardinality.
  static bool lex_less(const Subset& a, const Subset& b);

 private:
  uint64_t bits_ = 0;
  int n_ = 0;
};

// First collision found when products repeat: `product` = first.a*first.b
// = second.a*second.b, with `first` the earlier pair in the lexicographic
// (a, b) scan.
struct Collision {
  Elem product = 0;
  std::pair<Elem, Elem> first{0, 0};
  std::pair<Elem, Elem> second{0, 0};
  bool operator==(const Collision&) const = default;
};

struct ProductCheck {
  Subset coverage;  // the set A*B
  bool unique = false;
  std::optional<Collision> collision;
};

// {u*a : a in A}
Subset translate_left(const GroupTable& g, Elem u, const Subset& a);
// {a*v : a in A}
Subset translate_right(const GroupTable& g, const Subset& a, Elem v);

// Scans all |A|*|B| products in lexicographic (a, b) order. unique is true
// exactly when they are pairwise distinct; otherwise the first collision is
// reported.
ProductCheck product_check(const GroupTable& g, const Subset& a, const Subset& b);

// u^-1 * A for u = the smallest-index element of A. The result contains the
// identity; idempotent. Empty sets pass through unchanged.
Subset normalize_to_identity(const GroupTable& g, const Subset& a);

// C(n-1, d-1): the number of size-d subsets of an order-n group that contain
// the identity.
uint64_t lagrange_subset_count(int n, int d);

// Lazily yields every size-d subset containing the identity, in lexicographic
// order over ascending element tuples. One representative per left-translation
// class; throws NotLagrange unless d divides the group order.
class LagrangeSubsetStream {
 public:
  LagrangeSubsetStream(const GroupTable& g, int d);
  std::optional<Subset> next();

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Elem> comb_;
  bool exhausted_ = false;
};

// CLI subset syntax: comma-separated element names or indices inside braces,
// e.g. "{a,a^2,a^4}" or "{1,2,4}". Commas nested in parentheses belong to a
// single name, so product-group names like "(a,e)" resolve.
Subset parse_subset_text(const GroupTable& g, const std::string& text);
std::string subset_to_text(const GroupTable& g, const Subset& a);

}  // namespace grouptile
