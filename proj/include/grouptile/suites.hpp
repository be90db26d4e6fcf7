#pragma once
// Exhaustive verification suites for the constructive-complement rules and
// the non-factor witness constructions, shared by the verify-lemmas command
// and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "grouptile/group.hpp"

namespace grouptile::suites {

struct SuiteLine {
  std::string label;
  uint64_t checked = 0;
  uint64_t failures = 0;
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteLine> lines;

  bool pass() const {
    for (const auto& l : lines)
      if (l.failures) return false;
    return true;
  }
  uint64_t total_checked() const {
    uint64_t t = 0;
    for (const auto& l : lines) t += l.checked;
    return t;
  }
};

// {e,x} is a factor iff x has even order; both directions, every non-identity
// element of every even-order catalog group up to max_order. The forward
// direction also cross-checks the constructed even-power complement.
SuiteResult small_subset_i(int max_order = 16);

// Every size-4 subset of C2^2, C2^3, C2^4 containing the identity: the
// constructed complement verifies and the engine agrees.
SuiteResult small_subset_ii();

// Every size-3 subset of C3 and C3^2 containing the identity, plus an evenly
// spaced sample from C3^3.
SuiteResult small_subset_iii(uint64_t c33_sample = 100);

// Every subgroup of every catalog group up to max_order is a factor, with the
// coset representatives as the engine's complement.
SuiteResult subgroup_factors(int max_order = 12);

// Every admissible large-subgroup witness tuple over catalog groups of order
// <= 16 plus C3^3 builds a non-factor.
SuiteResult main_witness_sweep();

// Every admissible order-8 witness pair over the order-8 catalog groups (plus
// the C4xC2 labeling) builds a non-factor; groups with a single cyclic
// subgroup of order 4 contribute zero pairs.
SuiteResult order8_witness_sweep();

// The D4/C8/C9 case witnesses fail the factor check, including the exact
// intermediate translate and residue facts for C9.
SuiteResult theorem_case_checks();

std::vector<SuiteResult> run_all_suites();

}  // namespace grouptile::suites
