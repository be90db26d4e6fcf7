#include "grouptile/report.hpp"

namespace grouptile {

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = verdict;
  if (witness) j["witness"] = *witness;
  if (complement) j["complement"] = *complement;
  j["stats"] = stats;
  j["version"] = version;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.verdict = j.at("verdict").get<std::string>();
  if (j.contains("witness")) r.witness = j.at("witness");
  if (j.contains("complement")) r.complement = j.at("complement");
  r.stats = j.at("stats");
  r.version = j.at("version").get<std::string>();
  return r;
}

Json subset_json(const std::vector<std::string>& names, const Subset& a) {
  Json j = Json::object();
  Json idx = Json::array();
  Json nm = Json::array();
  for (Elem x : a.elements()) {
    idx.push_back(x);
    nm.push_back(names[static_cast<size_t>(x)]);
  }
  j["indices"] = idx;
  j["names"] = nm;
  return j;
}

Json subset_json(const GroupTable& g, const Subset& a) { return subset_json(g.names(), a); }

Json factor_result_json(const std::vector<std::string>& names, const FactorResult& r) {
  Json j = Json::object();
  j["is_factor"] = r.is_factor;
  j["side"] = side_name(r.side);
  j["exhausted"] = r.exhausted;
  j["nodes_explored"] = r.nodes_explored;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.complement) j["complement"] = subset_json(names, *r.complement);
  return j;
}

Json size_census_json(const std::vector<std::string>& names, const SizeCensus& sc) {
  Json j = Json::object();
  j["size"] = sc.d;
  j["tested"] = sc.tested;
  j["nonfactors"] = sc.nonfactors;
  Json ex = Json::array();
  for (const Subset& s : sc.nonfactor_examples) ex.push_back(subset_json(names, s));
  j["examples"] = ex;
  return j;
}

Json cfs_report_json(const CfsReport& r) {
  Json j = Json::object();
  j["group"] = r.group;
  j["order"] = r.order;
  j["verdict"] = r.unknown ? "unknown" : (r.holds ? "holds" : "fails");
  if (r.witness) {
    Json w = Json::object();
    w["subset"] = subset_json(r.element_names, *r.witness);
    if (r.witness_result) w["result"] = factor_result_json(r.element_names, *r.witness_result);
    j["witness"] = w;
  }
  j["skipped_sizes"] = r.skipped_sizes;
  j["census"] = r.census;
  if (r.census) {
    Json per = Json::array();
    for (const SizeCensus& sc : r.per_size) per.push_back(size_census_json(r.element_names, sc));
    j["per_size"] = per;
  }
  j["subsets_tested"] = r.subsets_tested;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json theorem_report_json(const TheoremReport& r) {
  Json j = Json::object();
  j["max_order"] = r.max_order;
  j["census"] = r.census;
  Json groups = Json::array();
  for (const TheoremGroupLine& line : r.groups) {
    Json lj = Json::object();
    lj["name"] = line.name;
    lj["expected"] = line.trivial ? "trivial" : (line.expected_holds ? "holds" : "fails");
    lj["report"] = cfs_report_json(line.report);
    groups.push_back(lj);
  }
  j["groups"] = groups;
  j["expected_positive"] = r.expected_positive;
  j["actual_positive"] = r.actual_positive;
  j["mismatches"] = r.mismatches;
  j["verdict"] = r.ok() ? "ok" : "mismatch";
  return j;
}

}  // namespace grouptile
