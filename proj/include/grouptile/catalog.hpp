#pragma once
// Built-in group catalog: every group of order <= 12 up to isomorphism, plus
// C16, C2^4 and C3^3 as stress cases for the lemma sweeps.

#include <string>
#include <vector>

#include "grouptile/group.hpp"

namespace grouptile {

struct CatalogEntry {
  std::string name;  // canonical spec expression
  GroupTable table;
};

// Entries in ascending group order; deterministic.
const std::vector<CatalogEntry>& catalog();

// Largest order verify_theorem accepts.
int catalog_bound();

// Throws BadParams when the name is unknown.
const GroupTable& catalog_group(const std::string& name);

}  // namespace grouptile
