// Command-line front end: JSON reports on stdout, a readable table on stderr.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaintopo/chaintopo.hpp"

namespace {

using namespace chaintopo;

struct Options {
  bool json_only = false;
  std::uint64_t seed = 0;
  std::size_t min_n = 1;
  std::size_t max_n = 7;
  std::vector<std::string> chains;
  std::vector<std::string> claims;
  std::vector<std::string> inject;
};

faults parse_faults(const std::vector<std::string>& names) {
  faults f;
  for (const auto& k : names) {
    if (k == "scott") f.scott = true;
    else if (k == "way_below") f.way_below = true;
    else if (k == "normalize") f.normalize = true;
    else throw error(errc::invalid_argument, "unknown fault kernel '" + k + "'");
  }
  return f;
}

std::string load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

FinitePoset load_poset(const std::string& path) { return poset_from_json(parse_json_text(load(path))).poset; }
Topology load_topology(const std::string& path) { return topology_from_json(parse_json_text(load(path))); }

class Output {
 public:
  explicit Output(const Options& o) : quiet_(o.json_only) {}
  void row(const std::string& key, const std::string& value) {
    if (!quiet_) std::fprintf(stderr, "  %-28s %s\n", key.c_str(), value.c_str());
  }
  void line(const std::string& text) {
    if (!quiet_) std::fprintf(stderr, "%s\n", text.c_str());
  }
  static void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

 private:
  bool quiet_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_poset_check(const Options& o, const std::string& path) {
  Output out(o);
  const auto doc = poset_from_json(parse_json_text(load(path)));
  out.row("points", std::to_string(doc.poset.size()));
  out.row("relation pairs", std::to_string(doc.poset.relation_size()));
  out.row("covers", std::to_string(doc.poset.covers().size()));
  Output::emit(json{{"valid", true}, {"poset", poset_to_json(doc.poset, doc.labels)}});
  return 0;
}

int cmd_poset_classify(const Options& o, const std::string& path) {
  Output out(o);
  const auto c = classify(load_poset(path));
  const auto j = classification_to_json(c);
  for (auto& [k, v] : j.items()) out.row(k, yes(v.get<bool>()));
  Output::emit(j);
  return 0;
}

int cmd_poset_maxchains(const Options& o, const std::string& path) {
  Output out(o);
  json chains = json::array();
  for (const auto& c : maximal_chains(load_poset(path))) {
    out.line("  " + c.to_string());
    chains.push_back(set_to_json(c));
  }
  Output::emit(json{{"maximal_chains", chains}});
  return 0;
}

int cmd_topo_make(const Options& o, const std::string& path, const std::string& kind) {
  Output out(o);
  const auto t = canonical_topology(load_poset(path), parse_named_topology(kind), parse_faults(o.inject));
  out.row("topology", kind);
  out.row("open sets", std::to_string(t.size()));
  Output::emit(topology_to_json(t));
  return 0;
}

int cmd_topo_join(const Options& o, const std::string& a, const std::string& b) {
  Output out(o);
  const auto t = join_topologies(load_topology(a), load_topology(b));
  out.row("open sets", std::to_string(t.size()));
  Output::emit(topology_to_json(t));
  return 0;
}

int cmd_topo_equal(const Options& o, const std::string& a, const std::string& b) {
  Output out(o);
  const auto ta = load_topology(a);
  const auto tb = load_topology(b);
  const bool eq = topology_equal(ta, tb);
  out.row("equal", yes(eq));
  json j{{"equal", eq}};
  if (!eq) {
    const auto d = topology_diff(ta, tb);
    json left = json::array(), right = json::array();
    for (auto u : d.only_left) left.push_back(set_to_json(u));
    for (auto u : d.only_right) right.push_back(set_to_json(u));
    j["only_left"] = left;
    j["only_right"] = right;
    out.row("difference", d.to_string());
  }
  Output::emit(j);
  return eq ? 0 : 1;
}

int cmd_topo_report(const Options& o, const std::string& path) {
  Output out(o);
  const auto r = separation_report(load_topology(path));
  const auto j = separation_report_to_json(r);
  for (auto& [k, v] : j.items()) out.row(k, yes(v.get<bool>()));
  Output::emit(j);
  return 0;
}

int cmd_waybelow(const Options& o, const std::string& path) {
  Output out(o);
  const auto p = load_poset(path);
  const auto r = way_below_report(p, parse_faults(o.inject));
  for (std::size_t x = 0; x < r.n; ++x) {
    std::string row;
    for (std::size_t y = 0; y < r.n; ++y) row += r.holds(x, y) ? "1 " : ". ";
    out.row(std::to_string(x) + " <<", row);
  }
  out.row("compact", r.compact.to_string());
  Output::emit(way_below_report_to_json(r));
  return 0;
}

int cmd_suite(const Options& o) {
  Output out(o);
  SuiteConfig cfg;
  cfg.min_n = o.min_n;
  cfg.max_n = o.max_n;
  cfg.seed = o.seed;
  if (!o.chains.empty()) cfg.chains = o.chains;
  cfg.claims = o.claims;
  cfg.inject = parse_faults(o.inject);
  const auto r = run_suite(cfg);
  for (const auto& c : r.claims) {
    out.row(c.id, std::string(c.pass() ? "pass" : "FAIL") + "  instances=" + std::to_string(c.instances) +
                      "  failures=" + std::to_string(c.failures));
    for (const auto& w : c.witnesses) out.line("      " + w);
  }
  Output::emit(suite_report_to_json(r));
  return r.pass() ? 0 : 1;
}

int cmd_search(const Options& o, const std::string& target, std::size_t max_instances) {
  Output out(o);
  SearchConfig cfg;
  cfg.target = parse_search_target(target);
  cfg.min_n = o.min_n;
  cfg.max_n = o.max_n;
  cfg.seed = o.seed;
  cfg.max_instances = max_instances;
  const auto r = find_counterexample(cfg);
  json j{{"target", target}, {"found", r.found}, {"instances", r.instances}};
  out.row("target", target);
  out.row("found", yes(r.found));
  out.row("instances tried", std::to_string(r.instances));
  if (r.found) {
    j["poset"] = poset_to_json(*r.poset);
    j["witness"] = r.summary;
    if (r.element) j["element"] = *r.element;
    if (r.pair) j["pair"] = json::array({r.pair->first, r.pair->second});
    out.row("witness", r.summary);
  }
  Output::emit(j);
  return r.found ? 0 : 1;
}

int cmd_decompose(const Options& o, const std::string& chain_id, const std::string& literal) {
  Output out(o);
  const auto c = make_chain(chain_id);
  const auto s = parse_interval_list(c, literal);
  const auto f = parse_faults(o.inject);
  const auto components = convex_components(s, f);
  const auto verdict = is_order_convex(s, f);
  json parts = json::array();
  for (const auto& k : components) {
    parts.push_back(k.to_string());
    out.line("  " + k.to_string());
  }
  out.row("convex", yes(verdict.convex));
  json j{{"chain", c.id()}, {"input", s.to_string()}, {"normalized", normalize(s, f).to_string()},
         {"components", parts}, {"convex", verdict.convex}};
  if (verdict.witness) j["gap_witness"] = c.format(*verdict.witness);
  Output::emit(j);
  return 0;
}

int cmd_separate(const Options& o, const std::string& chain_id, const std::string& literal,
                 const std::string& point, bool upper, std::size_t samples) {
  Output out(o);
  const auto c = make_chain(chain_id);
  const auto a = parse_interval_list(c, literal);
  const auto x = c.parse(point);
  const auto f = upper ? separate_from_upper(c, a, x) : separate_from_lower(c, a, x);
  std::size_t k = samples;
  if (c.kind() == chain_kind::finite) k = std::min(k, c.finite_size());
  const auto check = verify_separating(c, f, a, x, c.sample(o.seed, k));
  out.row("construction", std::string(to_string(f.how())));
  out.row("cuts", std::to_string(f.cuts().size()));
  const auto verdict = separation_check_to_json(check);
  for (auto& [key, v] : verdict.items()) out.row(key, yes(v.get<bool>()));
  Output::emit(json{{"function", separating_function_to_json(f)}, {"check", verdict}});
  return check.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite posets, chain catalogs and their order topologies"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_only, "Suppress the table on stderr");
  app.add_option("--seed", o.seed, "Seed for sampling and search");
  app.add_option("--min-n", o.min_n, "Smallest finite chain or poset size");
  app.add_option("--max-n", o.max_n, "Largest finite chain or poset size");
  app.add_option("--chains", o.chains, "Catalog chain ids")->delimiter(',');
  app.add_option("--inject-fault", o.inject, "Corrupt a kernel: scott, way_below, normalize")->delimiter(',');
  app.fallthrough();

  std::string path, path2, kind = "intrinsic", target, chain_id, literal, point;
  std::size_t max_instances = 20000, samples = 200;
  bool upper = false;
  std::function<int()> action;

  auto* poset = app.add_subcommand("poset", "Validate and inspect a poset document");
  poset->require_subcommand(1);
  auto* check = poset->add_subcommand("check", "Parse, validate and print the canonical form");
  check->add_option("file", path, "Poset JSON, or - for stdin")->required();
  check->callback([&] { action = [&] { return cmd_poset_check(o, path); }; });
  auto* cls = poset->add_subcommand("classify", "Chain, lattice, density and completeness flags");
  cls->add_option("file", path)->required();
  cls->callback([&] { action = [&] { return cmd_poset_classify(o, path); }; });
  auto* mc = poset->add_subcommand("maxchains", "List all maximal chains");
  mc->add_option("file", path)->required();
  mc->callback([&] { action = [&] { return cmd_poset_maxchains(o, path); }; });

  auto* topo = app.add_subcommand("topo", "Build and compare finite topologies");
  topo->require_subcommand(1);
  auto* make = topo->add_subcommand("make", "Named topology of a poset");
  make->add_option("file", path, "Poset JSON")->required();
  make->add_option("--kind", kind, "upper, lower, scott, dual_scott, intrinsic, interval, open_interval, "
                                   "order, lawson, dual_lawson, bi_scott");
  make->callback([&] { action = [&] { return cmd_topo_make(o, path, kind); }; });
  auto* join = topo->add_subcommand("join", "Coarsest topology finer than both");
  join->add_option("first", path)->required();
  join->add_option("second", path2)->required();
  join->callback([&] { action = [&] { return cmd_topo_join(o, path, path2); }; });
  auto* equal = topo->add_subcommand("equal", "Structural equality with a difference on failure");
  equal->add_option("first", path)->required();
  equal->add_option("second", path2)->required();
  equal->callback([&] { action = [&] { return cmd_topo_equal(o, path, path2); }; });
  auto* report = topo->add_subcommand("report", "Separation axioms of a topology dump");
  report->add_option("file", path)->required();
  report->callback([&] { action = [&] { return cmd_topo_report(o, path); }; });

  auto* wb = app.add_subcommand("waybelow", "Way-below matrix and compact elements");
  wb->add_option("file", path)->required();
  wb->callback([&] { action = [&] { return cmd_waybelow(o, path); }; });

  auto* suite = app.add_subcommand("suite", "Claim suite");
  suite->require_subcommand(1);
  auto* run = suite->add_subcommand("run", "Run the selected claims");
  run->add_option("--claims", o.claims, "Claim ids to run")->delimiter(',');
  run->callback([&] { action = [&] { return cmd_suite(o); }; });

  auto* search = app.add_subcommand("search", "Counterexample search over random posets");
  search->add_option("--target", target, "completely_distributive_fails, pospace_fails_for_upper, "
                                         "conditional_completeness_fails, normality_fails_for_topology")
      ->required();
  search->add_option("--max-instances", max_instances);
  search->callback([&] { action = [&] { return cmd_search(o, target, max_instances); }; });

  auto* dec = app.add_subcommand("decompose", "Maximal convex components of an interval set");
  dec->add_option("--chain", chain_id)->required();
  dec->add_option("--set", literal, "e.g. \"[1,3],[4,6]\"")->required();
  dec->callback([&] { action = [&] { return cmd_decompose(o, chain_id, literal); }; });

  auto* sep = app.add_subcommand("separate", "Monotone separating function for a closed ray");
  sep->add_option("--chain", chain_id)->required();
  sep->add_option("--set", literal, "Closed lower (or, with --upper, upper) set")->required();
  sep->add_option("--point", point)->required();
  sep->add_flag("--upper", upper);
  sep->add_option("--samples", samples);
  sep->callback([&] { action = [&] { return cmd_separate(o, chain_id, literal, point, upper, samples); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action ? action() : 2;
  } catch (const error& e) {
    const std::string code(to_string(e.code()));
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", {{"code", code}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
}
