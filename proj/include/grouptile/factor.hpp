#pragma once
// Factor decisions by exact cover over translates: universe = G, candidate
// tiles = {A*b : b in G} (left side) or {b*A : b} (right side), seeking
// |G|/|A| pairwise-disjoint tiles that cover G. Also complement enumeration
// and the ordered k-factorization search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Verdict for "is A a factor?". is_factor=false together with exhausted=true
// is a proven refusal (every branch was visited); exhausted=false without a
// factor means the node budget ran out and the answer is unknown.
struct FactorResult {
  bool is_factor = false;
  std::optional<Subset> complement;
  Side side = Side::Left;
  uint64_t nodes_explored = 0;  // tile placements performed during the search
  bool exhausted = false;
  std::string reason;  // "size-not-dividing" / "node-budget-exceeded" / ""

  bool unknown() const { return !is_factor && !exhausted; }
};

// Exact cover branching on the smallest uncovered element, candidate
// translates tried in ascending b. On success the complement is re-verified
// with product_check before returning.
FactorResult is_left_factor(const GroupTable& g, const Subset& a,
                            std::optional<uint64_t> node_budget = std::nullopt);
FactorResult is_right_factor(const GroupTable& g, const Subset& a,
                             std::optional<uint64_t> node_budget = std::nullopt);
FactorResult is_factor(const GroupTable& g, const Subset& a, Side side,
                       std::optional<uint64_t> node_budget = std::nullopt);

// Every complement containing the identity (one representative per
// right-translation class), in depth-first search order. Throws NotLagrange
// when |A| does not divide |G|.
std::vector<Subset> find_all_complements(const GroupTable& g, const Subset& a,
                                         Side side = Side::Left);

// Ordered factorization G = A1 A2 ... Ak with |Ai| = sizes[i] and every
// element uniquely represented.
struct KFactorization {
  std::vector<Subset> parts;
  std::vector<int> sizes;
};

struct KFactorizationResult {
  std::optional<KFactorization> factorization;
  uint64_t nodes_explored = 0;  // candidate part subsets examined
  bool exhausted = false;
  std::string reason;

  bool found() const { return factorization.has_value(); }
  bool unknown() const { return !found() && !exhausted; }
};

// Backtracking over parts left to right; every part is normalized to contain
// the identity (chain translation preserves the product, so this loses no
// solutions). Returns a verified factorization or an exhaustion proof.
// Throws SizeMismatch unless the sizes multiply to |G|.
KFactorizationResult find_factorization(const GroupTable& g, const std::vector<int>& sizes,
                                        std::optional<uint64_t> node_budget = std::nullopt);

// Evaluates all product tuples and checks the map onto G is a bijection.
bool is_valid_factorization(const GroupTable& g, const std::vector<Subset>& parts);

}  // namespace grouptile
