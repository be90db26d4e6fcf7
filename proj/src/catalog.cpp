#include "grouptile/catalog.hpp"

namespace grouptile {

namespace {

std::vector<CatalogEntry> build_catalog() {
  const char* specs[] = {
      "C1",   "C2",  "C3",  "C4",  "C2^2", "C5",   "C6",  "S3",   "C7",
      "C8",   "C2xC4", "C2^3", "D4", "Q8",  "C9",   "C3^2", "C10", "D5",
      "C11",  "C12", "C2xC6", "D6", "Dic3", "A4",   "C16", "C2^4", "C3^3",
  };
  std::vector<CatalogEntry> out;
  for (const char* s : specs) out.push_back({s, parse_group_spec(s)});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

int catalog_bound() { return 16; }

const GroupTable& catalog_group(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.table;
  throw Error(Errc::BadParams, "no catalog group named '" + name + "'");
}

}  // namespace grouptile
