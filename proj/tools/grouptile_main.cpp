// grouptile: factor checks, complement search, strong CFS classification and
// k-factorization search for small finite groups.
//
// Exit codes: 0 affirmative, 2 exhausted-negative, 3 unknown (node budget), 1
// usage or input error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grouptile/catalog.hpp"
#include "grouptile/classify.hpp"
#include "grouptile/construct.hpp"
#include "grouptile/factor.hpp"
#include "grouptile/report.hpp"
#include "grouptile/suites.hpp"
#include "grouptile/witness.hpp"

namespace {

using namespace grouptile;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNegative = 2;
constexpr int kExitUnknown = 3;

void write_report(const Report& rep, const std::string& json_path) {
  if (json_path.empty()) return;
  if (json_path == "-") {
    std::cout << rep.dump();
    return;
  }
  std::ofstream out(json_path);
  if (!out) throw Error(Errc::IoError, "cannot write '" + json_path + "'");
  out << rep.dump();
}

std::optional<uint64_t> budget_of(const CLI::Option* opt, uint64_t value) {
  if (opt->count() == 0) return std::nullopt;
  return value;
}

struct Cmd {
  std::string group_spec;
  std::string subset_text;
  std::string side = "left";
  std::string json_path;
  std::string sizes_text;
  std::string file_path;
  uint64_t node_budget = 0;
  int max_order = 12;
  bool census = false;
  bool aut_prune = false;
};

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (cur.empty()) throw Error(Errc::SizeMismatch, "empty entry in size list '" + text + "'");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      cur += text[i];
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      throw Error(Errc::SizeMismatch, "bad character in size list '" + text + "'");
    }
  }
  return out;
}

int run_is_factor(const Cmd& c, std::optional<uint64_t> budget) {
  GroupTable g = parse_group_spec(c.group_spec);
  Subset a = parse_subset_text(g, c.subset_text);
  Side side = c.side == "right" ? Side::Right : Side::Left;
  FactorResult r = is_factor(g, a, side, budget);

  Report rep;
  rep.command = "is-factor";
  rep.inputs = {{"group", g.display_name()},
                {"subset", subset_json(g, a)},
                {"side", side_name(side)}};
  rep.verdict = r.is_factor ? "factor" : (r.unknown() ? "unknown" : "not-a-factor");
  if (r.complement) rep.complement = subset_json(g, *r.complement);
  rep.stats = {{"nodes_explored", r.nodes_explored},
               {"exhausted", r.exhausted},
               {"reason", r.reason}};
  write_report(rep, c.json_path);

  std::cout << "group " << g.display_name() << " (order " << g.order() << ")\n";
  std::cout << "A = " << subset_to_text(g, a) << " (size " << a.size() << ")\n";
  if (r.is_factor) {
    std::cout << "verdict: " << side_name(side) << " factor, complement B = "
              << subset_to_text(g, *r.complement) << "\n";
  } else if (r.unknown()) {
    std::cout << "verdict: unknown (" << r.reason << ")\n";
  } else {
    std::cout << "verdict: not a " << side_name(side) << " factor ("
              << (r.reason.empty() ? "search exhausted" : r.reason) << ")\n";
  }
  std::cout << "nodes explored: " << r.nodes_explored << "\n";
  return r.is_factor ? kExitOk : (r.unknown() ? kExitUnknown : kExitNegative);
}

int run_find_complements(const Cmd& c) {
  GroupTable g = parse_group_spec(c.group_spec);
  Subset a = parse_subset_text(g, c.subset_text);
  Side side = c.side == "right" ? Side::Right : Side::Left;
  std::vector<Subset> all = find_all_complements(g, a, side);

  Report rep;
  rep.command = "find-complements";
  rep.inputs = {{"group", g.display_name()},
                {"subset", subset_json(g, a)},
                {"side", side_name(side)}};
  rep.verdict = all.empty() ? "none" : "found";
  Json list = Json::array();
  for (const Subset& b : all) list.push_back(subset_json(g, b));
  rep.complement = list;
  rep.stats = {{"count", all.size()}};
  write_report(rep, c.json_path);

  std::cout << "group " << g.display_name() << ", A = " << subset_to_text(g, a) << "\n";
  std::cout << all.size() << " complement(s) containing the identity\n";
  for (const Subset& b : all) std::cout << "  B = " << subset_to_text(g, b) << "\n";
  return all.empty() ? kExitNegative : kExitOk;
}

int run_check_cfs(const Cmd& c, std::optional<uint64_t> budget) {
  GroupTable g = parse_group_spec(c.group_spec);
  ClassifierOptions opt;
  opt.aut_prune = c.aut_prune;
  opt.node_budget = budget;
  CfsReport r = check_strong_cfs(g, c.census, opt);

  Report rep;
  rep.command = "check-cfs";
  rep.inputs = {{"group", g.display_name()},
                {"census", c.census},
                {"aut_prune", c.aut_prune}};
  rep.verdict = r.unknown ? "unknown" : (r.holds ? "holds" : "fails");
  if (r.witness) {
    Json w = Json::object();
    w["subset"] = subset_json(g, *r.witness);
    w["result"] = factor_result_json(g.names(), *r.witness_result);
    rep.witness = w;
  }
  rep.stats = cfs_report_json(r);
  write_report(rep, c.json_path);

  std::cout << "group " << g.display_name() << " (order " << g.order() << "): strong CFS "
            << rep.verdict << "\n";
  if (r.witness) {
    std::cout << "first non-factor Lagrange subset: " << subset_to_text(g, *r.witness)
              << " (size " << r.witness->size() << ")\n";
  }
  if (r.census) {
    for (const SizeCensus& sc : r.per_size)
      std::cout << "  size " << sc.d << ": tested " << sc.tested << ", non-factors "
                << sc.nonfactors << "\n";
  }
  std::cout << "subsets tested: " << r.subsets_tested << ", nodes: " << r.nodes_explored << "\n";
  return r.unknown ? kExitUnknown : (r.holds ? kExitOk : kExitNegative);
}

int run_verify_theorem(const Cmd& c, std::optional<uint64_t> budget) {
  ClassifierOptions opt;
  opt.aut_prune = c.aut_prune;
  opt.node_budget = budget;
  TheoremReport r = verify_theorem(c.max_order, c.census, opt);

  Report rep;
  rep.command = "verify-theorem";
  rep.inputs = {{"max_order", c.max_order},
                {"census", c.census},
                {"aut_prune", c.aut_prune}};
  rep.verdict = r.ok() ? "ok" : "mismatch";
  rep.stats = theorem_report_json(r);
  write_report(rep, c.json_path);

  for (const TheoremGroupLine& line : r.groups) {
    std::cout << line.name << " (order " << line.report.order << "): "
              << (line.report.unknown ? "unknown" : (line.report.holds ? "holds" : "fails"));
    if (line.trivial) std::cout << " (trivial, excluded)";
    if (line.report.witness)
      std::cout << ", witness "
                << subset_to_text(catalog_group(line.name), *line.report.witness);
    std::cout << "\n";
  }
  std::cout << "positives: ";
  for (const auto& n : r.actual_positive) std::cout << n << " ";
  std::cout << "\nmismatches: ";
  if (r.mismatches.empty()) std::cout << "none";
  for (const auto& n : r.mismatches) std::cout << n << " ";
  std::cout << "\n";
  return r.ok() ? kExitOk : kExitNegative;
}

int run_verify_lemmas(const Cmd& c) {
  auto results = suites::run_all_suites();
  bool all_pass = true;

  Report rep;
  rep.command = "verify-lemmas";
  rep.inputs = Json::object();
  Json stats = Json::array();
  for (const auto& res : results) {
    all_pass = all_pass && res.pass();
    Json lines = Json::array();
    for (const auto& l : res.lines) {
      Json lj = {{"label", l.label}, {"checked", l.checked}, {"failures", l.failures}};
      if (!l.note.empty()) lj["note"] = l.note;
      lines.push_back(lj);
    }
    stats.push_back({{"suite", res.name}, {"pass", res.pass()}, {"lines", lines}});
  }
  rep.verdict = all_pass ? "pass" : "fail";
  rep.stats = {{"suites", stats}};
  write_report(rep, c.json_path);

  for (const auto& res : results) {
    std::cout << (res.pass() ? "PASS" : "FAIL") << " " << res.name << " ("
              << res.total_checked() << " checks)\n";
    for (const auto& l : res.lines) {
      std::cout << "  " << l.label << ": " << l.checked << " checked, " << l.failures
                << " failures";
      if (!l.note.empty()) std::cout << " [" << l.note << "]";
      std::cout << "\n";
    }
  }
  return all_pass ? kExitOk : kExitNegative;
}

int run_find_factorization(const Cmd& c, std::optional<uint64_t> budget) {
  GroupTable g = parse_group_spec(c.group_spec);
  std::vector<int> sizes = parse_sizes(c.sizes_text);
  KFactorizationResult r = find_factorization(g, sizes, budget);

  Report rep;
  rep.command = "find-factorization";
  rep.inputs = {{"group", g.display_name()}, {"sizes", sizes}};
  rep.verdict = r.found() ? "found" : (r.unknown() ? "unknown" : "none");
  if (r.found()) {
    Json parts = Json::array();
    for (const Subset& p : r.factorization->parts) parts.push_back(subset_json(g, p));
    rep.complement = parts;
  }
  rep.stats = {{"nodes_explored", r.nodes_explored}, {"exhausted", r.exhausted}};
  write_report(rep, c.json_path);

  std::cout << "group " << g.display_name() << ", sizes";
  for (int s : sizes) std::cout << " " << s;
  std::cout << "\n";
  if (r.found()) {
    std::cout << "factorization found:\n";
    for (const Subset& p : r.factorization->parts)
      std::cout << "  " << subset_to_text(g, p) << "\n";
  } else if (r.unknown()) {
    std::cout << "unknown (" << r.reason << ")\n";
  } else {
    std::cout << "no factorization exists (search exhausted)\n";
  }
  std::cout << "nodes explored: " << r.nodes_explored << "\n";
  return r.found() ? kExitOk : (r.unknown() ? kExitUnknown : kExitNegative);
}

void print_group_info(const GroupTable& g, const Cmd& c) {
  Report rep;
  rep.command = "group-info";
  rep.inputs = {{"group", g.display_name()}};
  rep.verdict = "ok";
  Json elems = Json::array();
  for (Elem x = 0; x < g.order(); ++x)
    elems.push_back({{"index", x},
                     {"name", g.name(x)},
                     {"order", element_order(g, x)},
                     {"inverse", g.inverse(x)}});
  size_t n_subgroups = all_subgroups(g).size();
  rep.stats = {{"order", g.order()}, {"elements", elems}, {"subgroups", n_subgroups}};
  write_report(rep, c.json_path);

  std::cout << "group " << g.display_name() << ", order " << g.order() << ", "
            << n_subgroups << " subgroups\n";
  std::cout << "idx  name  order  inverse\n";
  for (Elem x = 0; x < g.order(); ++x)
    std::cout << x << "  " << g.name(x) << "  " << element_order(g, x) << "  "
              << g.name(g.inverse(x)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factor and tiling checks for small finite groups"};
  app.require_subcommand(1);
  Cmd c;

  auto* is_factor_cmd = app.add_subcommand("is-factor", "decide whether a subset is a factor");
  is_factor_cmd->add_option("group", c.group_spec, "group spec, e.g. C9 or C4xC2")->required();
  is_factor_cmd->add_option("subset", c.subset_text, "subset, e.g. {a,a^2,a^4} or {1,2,4}")
      ->required();
  is_factor_cmd->add_option("--side", c.side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  is_factor_cmd->add_option("--json", c.json_path, "write the report to this path ('-' = stdout)");
  auto* b1 = is_factor_cmd->add_option("--node-budget", c.node_budget, "abort after this many nodes");

  auto* fc_cmd = app.add_subcommand("find-complements", "list all identity-containing complements");
  fc_cmd->add_option("group", c.group_spec)->required();
  fc_cmd->add_option("subset", c.subset_text)->required();
  fc_cmd->add_option("--side", c.side)->check(CLI::IsMember({"left", "right"}));
  fc_cmd->add_option("--json", c.json_path);

  auto* cfs_cmd = app.add_subcommand("check-cfs", "decide the strong CFS property");
  cfs_cmd->add_option("group", c.group_spec)->required();
  cfs_cmd->add_flag("--census", c.census, "full per-size counts instead of short-circuiting");
  cfs_cmd->add_flag("--aut-prune", c.aut_prune, "skip automorphism-orbit duplicates");
  cfs_cmd->add_option("--json", c.json_path);
  auto* b2 = cfs_cmd->add_option("--node-budget", c.node_budget);

  auto* vt_cmd = app.add_subcommand("verify-theorem", "classify all catalog groups");
  vt_cmd->add_option("--max-order", c.max_order, "largest group order to include");
  vt_cmd->add_flag("--census", c.census);
  vt_cmd->add_flag("--aut-prune", c.aut_prune);
  vt_cmd->add_option("--json", c.json_path);
  auto* b3 = vt_cmd->add_option("--node-budget", c.node_budget);

  auto* vl_cmd = app.add_subcommand("verify-lemmas", "run the exhaustive lemma suites");
  vl_cmd->add_option("--json", c.json_path);

  auto* ff_cmd = app.add_subcommand("find-factorization", "search for an ordered factorization");
  ff_cmd->add_option("group", c.group_spec)->required();
  ff_cmd->add_option("sizes", c.sizes_text, "comma-separated part sizes, e.g. 2,3,2")->required();
  ff_cmd->add_option("--json", c.json_path);
  auto* b4 = ff_cmd->add_option("--node-budget", c.node_budget);

  auto* gi_cmd = app.add_subcommand("group-info", "print order, element orders and inverses");
  gi_cmd->add_option("group", c.group_spec)->required();
  gi_cmd->add_option("--json", c.json_path);

  auto* ft_cmd = app.add_subcommand("from-table", "validate a Cayley table file");
  ft_cmd->add_option("file", c.file_path, "table file: order, rows, optional names")->required();
  ft_cmd->add_option("--json", c.json_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (is_factor_cmd->parsed()) return run_is_factor(c, budget_of(b1, c.node_budget));
    if (fc_cmd->parsed()) return run_find_complements(c);
    if (cfs_cmd->parsed()) return run_check_cfs(c, budget_of(b2, c.node_budget));
    if (vt_cmd->parsed()) return run_verify_theorem(c, budget_of(b3, c.node_budget));
    if (vl_cmd->parsed()) return run_verify_lemmas(c);
    if (ff_cmd->parsed()) return run_find_factorization(c, budget_of(b4, c.node_budget));
    if (gi_cmd->parsed()) {
      print_group_info(parse_group_spec(c.group_spec), c);
      return kExitOk;
    }
    if (ft_cmd->parsed()) {
      print_group_info(load_cayley_file(c.file_path), c);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
