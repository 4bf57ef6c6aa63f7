#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/convexity.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/order_relations.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/separation.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

using json = nlohmann::ordered_json;

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw error(errc::schema_error, path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw error(errc::schema_error, path + "/" + key + ": missing");
  return *it;
}

inline std::size_t require_index_value(const json& j, const std::string& path) {
  if (!j.is_number_unsigned())
    throw error(errc::schema_error, path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

// ---------------------------------------------------------------- posets

struct PosetDocument {
  FinitePoset poset;
  std::optional<std::vector<std::string>> labels;
};

inline PosetDocument poset_from_json(const json& j, std::size_t cap = default_poset_cap) {
  const auto n = detail::require_index_value(detail::require_field(j, "n", ""), "/n");
  const auto& mode_field = detail::require_field(j, "mode", "");
  if (!mode_field.is_string() || (mode_field != "hasse" && mode_field != "full"))
    throw error(errc::schema_error, "/mode: expected \"hasse\" or \"full\"");
  const auto mode = mode_field == "hasse" ? build_mode::hasse_covers : build_mode::full_relation;
  const auto& pairs_field = detail::require_field(j, "pairs", "");
  if (!pairs_field.is_array()) throw error(errc::schema_error, "/pairs: expected an array");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pairs_field.size(); ++i) {
    const auto& p = pairs_field[i];
    const auto path = "/pairs/" + std::to_string(i);
    // An entry that is not an [x, y] pair is malformed input, not a schema mismatch.
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw error(errc::parse_error, path + ": malformed pair " + p.dump());
    pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  PosetDocument doc{build_poset(n, pairs, mode, cap), std::nullopt};
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || it->size() != n)
      throw error(errc::schema_error, "/labels: expected " + std::to_string(n) + " strings");
    std::vector<std::string> labels;
    for (const auto& l : *it) {
      if (!l.is_string()) throw error(errc::schema_error, "/labels: expected strings");
      labels.push_back(l.get<std::string>());
    }
    doc.labels = std::move(labels);
  }
  return doc;
}

/// Canonical form: Hasse covers in lexicographic order.
inline json poset_to_json(const FinitePoset& p,
                          const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  json pairs = json::array();
  for (auto [x, y] : p.covers()) pairs.push_back(json::array({x, y}));
  json j{{"n", p.size()}, {"mode", "hasse"}, {"pairs", pairs}};
  if (labels) j["labels"] = *labels;
  return j;
}

inline json set_to_json(std::uint64_t mask) { return json(mask_members(mask)); }
inline json set_to_json(const ElementSet& s) { return json(s.members()); }

inline std::uint64_t set_from_json(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw error(errc::schema_error, path + ": expected an index array");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto x = detail::require_index_value(j[i], path + "/" + std::to_string(i));
    if (x >= n) throw error(errc::schema_error, path + "/" + std::to_string(i) + ": index out of range");
    mask |= bit(x);
  }
  return mask;
}

inline json classification_to_json(const PosetClassification& c) {
  return json{{"is_chain", c.is_chain},
              {"is_lattice", c.is_lattice},
              {"order_dense", c.order_dense},
              {"complete", c.complete},
              {"conditionally_complete", c.conditionally_complete},
              {"up_complete", c.up_complete}};
}

// ---------------------------------------------------------------- topologies

inline json topology_to_json(const Topology& t) {
  json opens = json::array();
  for (auto u : t.opens()) opens.push_back(set_to_json(u));
  return json{{"n", t.carrier()}, {"opens", opens}};
}

inline Topology topology_from_json(const json& j) {
  const auto n = detail::require_index_value(detail::require_field(j, "n", ""), "/n");
  if (n > max_carrier) throw error(errc::schema_error, "/n: carrier exceeds 64");
  const auto& opens = detail::require_field(j, "opens", "");
  if (!opens.is_array()) throw error(errc::schema_error, "/opens: expected an array");
  std::vector<std::uint64_t> family;
  for (std::size_t i = 0; i < opens.size(); ++i)
    family.push_back(set_from_json(opens[i], n, "/opens/" + std::to_string(i)));
  try {
    return Topology::from_family(n, std::move(family));
  } catch (const error& e) {
    throw error(errc::schema_error, std::string("/opens: ") + e.what());
  }
}

inline json separation_report_to_json(const SeparationReport& r) {
  return json{{"t1", r.t1}, {"hausdorff", r.hausdorff}, {"normal", r.normal},
              {"completely_normal", r.completely_normal}};
}

// ---------------------------------------------------------------- order reports

inline json way_below_report_to_json(const WayBelowReport& r) {
  json ll = json::array();
  for (std::size_t x = 0; x < r.n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < r.n; ++y) row.push_back(r.holds(x, y));
    ll.push_back(row);
  }
  return json{{"n", r.n}, {"ll", ll}, {"compact", set_to_json(r.compact)}};
}

inline json corollary3_to_json(const Corollary3Report& r) {
  return json{{"cond1", r.cond1},
              {"cond2", r.cond2},
              {"order_dense", r.order_dense},
              {"conditionally_complete", r.conditionally_complete},
              {"points_examined", r.points_examined}};
}

// ---------------------------------------------------------------- chains and intervals

/// Parses "(a,b)", "[a,b]", "(-inf,b]", "[a,+inf)" and comma-separated lists thereof.
inline IntervalSet parse_interval_list(const Chain& c, std::string_view text) {
  std::vector<Interval> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw error(errc::parse_error, "interval literal at " + std::to_string(pos) + ": " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  skip();
  while (pos < text.size()) {
    const char open = text[pos];
    if (open != '(' && open != '[') fail("expected '(' or '['");
    const auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) fail("missing ','");
    const auto close = text.find_first_of(")]", comma);
    if (close == std::string_view::npos) fail("missing ')' or ']'");
    const auto lo = trim(text.substr(pos + 1, comma - pos - 1));
    const auto hi = trim(text.substr(comma + 1, close - comma - 1));
    Interval i;
    if (lo == "-inf") {
      if (open != '(') fail("-inf needs '('");
    } else {
      i.lower = c.parse(lo);
      i.lower_open = open == '(';
    }
    if (hi == "+inf" || hi == "inf") {
      if (text[close] != ')') fail("+inf needs ')'");
    } else {
      i.upper = c.parse(hi);
      i.upper_open = text[close] == ')';
    }
    out.push_back(std::move(i));
    pos = close + 1;
    skip();
  }
  return IntervalSet(c, std::move(out));
}

inline json interval_set_to_json(const IntervalSet& s) {
  json items = json::array();
  for (const auto& i : s.intervals()) {
    json item;
    item["lower"] = i.lower ? json(s.chain().format(*i.lower)) : json("-inf");
    item["lower_open"] = i.lower ? i.lower_open : true;
    item["upper"] = i.upper ? json(s.chain().format(*i.upper)) : json("+inf");
    item["upper_open"] = i.upper ? i.upper_open : true;
    items.push_back(item);
  }
  return json{{"chain", s.chain().id()}, {"literal", s.to_string()}, {"intervals", items}};
}

inline json local_structure_to_json(const LocalStructure& s) {
  return json{{"has_immediate_pred", s.has_immediate_pred},
              {"has_immediate_succ", s.has_immediate_succ},
              {"is_sup_of_strict_downset", s.is_sup_of_strict_downset},
              {"is_compact", s.is_compact}};
}

// ---------------------------------------------------------------- separating functions

inline json separating_function_to_json(const SeparatingFunction& f) {
  const auto& c = f.cut_chain();
  json cuts = json::array();
  for (const auto& cut : f.cuts())
    cuts.push_back(json{{"threshold", c.format(cut.threshold)},
                        {"side", cut.side == cut_side::at_or_below ? "<=" : "<"},
                        {"value", format_rational(cut.value)},
                        {"segment", cut.shape == segment_shape::step ? "step" : "ramp"}});
  return json{{"chain", c.id()},
              {"dual", f.dual()},
              {"construction", std::string(to_string(f.how()))},
              {"cuts", cuts},
              {"default", format_rational(f.default_value())}};
}

inline SeparatingFunction separating_function_from_json(const json& j) {
  const auto& chain_field = detail::require_field(j, "chain", "");
  if (!chain_field.is_string()) throw error(errc::schema_error, "/chain: expected a string");
  const auto c = make_chain(chain_field.get<std::string>());
  const auto& cuts_field = detail::require_field(j, "cuts", "");
  if (!cuts_field.is_array()) throw error(errc::schema_error, "/cuts: expected an array");
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < cuts_field.size(); ++i) {
    const auto path = "/cuts/" + std::to_string(i);
    const auto& item = cuts_field[i];
    auto text = [&](const char* key) {
      const auto& v = detail::require_field(item, key, path);
      if (!v.is_string()) throw error(errc::schema_error, path + "/" + key + ": expected a string");
      return v.get<std::string>();
    };
    const auto side = text("side");
    const auto segment = text("segment");
    if (side != "<=" && side != "<") throw error(errc::schema_error, path + "/side: expected <= or <");
    if (segment != "step" && segment != "ramp")
      throw error(errc::schema_error, path + "/segment: expected step or ramp");
    cuts.push_back(Cut{c.parse(text("threshold")),
                       side == "<=" ? cut_side::at_or_below : cut_side::strictly_below,
                       parse_rational(text("value")),
                       segment == "step" ? segment_shape::step : segment_shape::ramp});
  }
  const auto& def = detail::require_field(j, "default", "");
  if (!def.is_string()) throw error(errc::schema_error, "/default: expected a fraction string");
  construction how = construction::constant;
  if (auto it = j.find("construction"); it != j.end() && it->is_string()) {
    if (*it == "gap_step") how = construction::gap_step;
    if (*it == "density_ramp") how = construction::density_ramp;
  }
  const bool dual = j.contains("dual") && j["dual"].is_boolean() && j["dual"].get<bool>();
  return SeparatingFunction(c, std::move(cuts), parse_rational(def.get<std::string>()), how, dual);
}

inline json separation_check_to_json(const SeparationCheck& r) {
  return json{{"monotone_ok", r.monotone_ok},
              {"zero_on_A_ok", r.zero_on_A_ok},
              {"one_at_x_ok", r.one_at_x_ok},
              {"continuity_ok", r.continuity_ok}};
}

// ---------------------------------------------------------------- round trip

/// Parses a poset or topology document and re-serializes it canonically.
inline json io_roundtrip(std::string_view text) {
  const auto j = parse_json_text(text);
  if (j.is_object() && j.contains("opens")) return topology_to_json(topology_from_json(j));
  if (j.is_object() && j.contains("cuts"))
    return separating_function_to_json(separating_function_from_json(j));
  const auto doc = poset_from_json(j);
  return poset_to_json(doc.poset, doc.labels);
}

}  // namespace chaintopo
