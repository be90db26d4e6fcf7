#pragma once
// Strong CFS decision per group (every Lagrange subset is a factor) and the
// classification sweep over the catalog.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouptile/catalog.hpp"
#include "grouptile/factor.hpp"
#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

// Full automorphism group as permutations of element indices; identity first,
// sorted. Used only for the optional orbit pruning below.
std::vector<std::vector<Elem>> automorphisms(const GroupTable& g);

struct ClassifierOptions {
  // Skip subsets that are not the lexicographic minimum of their orbit under
  // Aut(G). Off by default; verdicts and witnesses are unchanged because
  // factor status is Aut-invariant and the first nonfactor in stream order is
  // always canonical. Ignored in census mode, which reports exact counts.
  bool aut_prune = false;
  // Per-query node budget; exceeding it aborts with an unknown verdict.
  std::optional<uint64_t> node_budget;
};

struct SizeCensus {
  int d = 0;
  uint64_t tested = 0;
  uint64_t nonfactors = 0;
  std::vector<Subset> nonfactor_examples;  // stream order, complete
};

struct CfsReport {
  std::string group;
  int order = 0;
  std::vector<std::string> element_names;
  bool holds = false;
  bool unknown = false;  // node budget aborted before a verdict was reached
  std::optional<Subset> witness;  // first non-factor Lagrange subset found
  std::optional<FactorResult> witness_result;
  std::vector<int> skipped_sizes;  // sizes 1 and |G|: always factors
  bool census = false;
  std::vector<SizeCensus> per_size;  // filled in census mode
  uint64_t subsets_tested = 0;
  uint64_t nodes_explored = 0;
};

// Iterates divisor sizes in increasing order and, within a size, streams
// identity-containing subsets in lexicographic order through is_left_factor.
// Short-circuits on the first failure unless census is set.
CfsReport check_strong_cfs(const GroupTable& g, bool census = false,
                           const ClassifierOptions& opt = {});

// Exact counts over identity-containing subsets of size d.
SizeCensus nonfactor_census(const GroupTable& g, int d, const ClassifierOptions& opt = {});

struct TheoremGroupLine {
  std::string name;
  bool trivial = false;        // order 1, excluded from the positive set
  bool expected_holds = false;
  CfsReport report;
};

struct TheoremReport {
  int max_order = 0;
  bool census = false;
  std::vector<TheoremGroupLine> groups;          // catalog order
  std::vector<std::string> expected_positive;    // nontrivial groups expected to hold
  std::vector<std::string> actual_positive;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Runs check_strong_cfs on every catalog group of order <= max_order and
// compares the positives against the expected list: cyclic groups of prime
// order plus C4, C2^2, C2^3 and C3^2. Throws CatalogBoundExceeded.
TheoremReport verify_theorem(int max_order, bool census = false,
                             const ClassifierOptions& opt = {});

}  // namespace grouptile
