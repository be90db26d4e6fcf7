#pragma once
// Structured reports: one JSON document per CLI invocation with the fields
// {command, inputs, verdict, witness?, complement?, stats, version}, plus the
// serializers for subsets, factor results and classifier reports.

#include <optional>
#include <string>

#include <json.hpp>

#include "grouptile/classify.hpp"
#include "grouptile/factor.hpp"
#include "grouptile/group.hpp"
#include "grouptile/subset.hpp"

namespace grouptile {

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::string verdict;
  std::optional<Json> witness;
  std::optional<Json> complement;
  Json stats = Json::object();
  std::string version = kVersion;

  Json to_json() const;
  static Report from_json(const Json& j);
  std::string dump() const { return to_json().dump(2) + "\n"; }
  bool operator==(const Report&) const = default;
};

Json subset_json(const std::vector<std::string>& names, const Subset& a);
Json subset_json(const GroupTable& g, const Subset& a);
Json factor_result_json(const std::vector<std::string>& names, const FactorResult& r);
Json size_census_json(const std::vector<std::string>& names, const SizeCensus& sc);
Json cfs_report_json(const CfsReport& r);
Json theorem_report_json(const TheoremReport& r);

}  // namespace grouptile
