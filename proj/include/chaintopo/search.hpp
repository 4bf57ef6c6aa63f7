#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaintopo/error.hpp"
#include "chaintopo/order_relations.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

enum class search_target {
  completely_distributive_fails,
  pospace_fails_for_upper,
  conditional_completeness_fails,
  normality_fails_for_topology,
};

inline constexpr std::array all_search_targets{
    search_target::completely_distributive_fails, search_target::pospace_fails_for_upper,
    search_target::conditional_completeness_fails, search_target::normality_fails_for_topology};

constexpr std::string_view to_string(search_target t) noexcept {
  switch (t) {
    case search_target::completely_distributive_fails: return "completely_distributive_fails";
    case search_target::pospace_fails_for_upper: return "pospace_fails_for_upper";
    case search_target::conditional_completeness_fails: return "conditional_completeness_fails";
    case search_target::normality_fails_for_topology: return "normality_fails_for_topology";
  }
  return "?";
}

inline search_target parse_search_target(std::string_view name) {
  for (auto t : all_search_targets)
    if (to_string(t) == name) return t;
  throw error(errc::unknown_target, "unknown search target '" + std::string(name) + "'");
}

struct SearchConfig {
  search_target target = search_target::completely_distributive_fails;
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  std::uint64_t seed = 0;
  std::size_t max_instances = 20000;
  double edge_probability = 0.5;
};

struct SearchResult {
  bool found = false;
  std::size_t instances = 0;
  std::optional<FinitePoset> poset;
  std::optional<std::size_t> element;                         // distributivity failure point
  std::optional<std::pair<std::size_t, std::size_t>> pair;    // pospace failure
  std::uint64_t subset = 0;                                   // approximants / unbounded set
  std::uint64_t second = 0;                                   // second closed set
  std::string summary;
};

/// Random DAG over the index order by edge probability, then transitive closure.
inline FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double edge_probability) {
  std::bernoulli_distribution edge(edge_probability);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(i, j);
  return build_poset(n, pairs, build_mode::hasse_covers);
}

namespace detail {

// A nonempty subset bounded above without a supremum, or bounded below without an infimum.
inline std::optional<std::uint64_t> completeness_gap(const FinitePoset& p) {
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (bounds_mask(p, s, bound_dir::upper) != 0 && !extremum_mask(p, s, extremum_kind::sup))
      return s;
    if (bounds_mask(p, s, bound_dir::lower) != 0 && !extremum_mask(p, s, extremum_kind::inf))
      return s;
  }
  return std::nullopt;
}

}  // namespace detail

/// Seeded search over random posets, smallest sizes first with an equal share
/// of the instance budget each. Targets that contrast chain-only claims skip
/// chains; the pospace target admits them, and the distributivity target only
/// considers lattices.
inline SearchResult find_counterexample(const SearchConfig& cfg) {
  if (cfg.min_n == 0 || cfg.min_n > cfg.max_n)
    throw error(errc::invalid_argument, "empty size range");
  const std::size_t cap =
      cfg.target == search_target::normality_fails_for_topology ? default_hereditary_cap
                                                                : default_exhaustive_cap;
  if (cfg.max_n > cap)
    throw error(errc::cap_exceeded, "search size " + std::to_string(cfg.max_n) + " exceeds cap " +
                                        std::to_string(cap));
  std::mt19937_64 rng(cfg.seed);
  const std::size_t span = cfg.max_n - cfg.min_n + 1;
  const std::size_t per_size = std::max<std::size_t>(1, cfg.max_instances / span);
  SearchResult r;
  for (std::size_t tries = 0; tries < per_size * span && r.instances < cfg.max_instances; ++tries) {
    const std::size_t n = cfg.min_n + tries / per_size;
    auto p = random_poset(rng, n, cfg.edge_probability);
    ++r.instances;
    const bool chain = is_chain(p);
    switch (cfg.target) {
      case search_target::completely_distributive_fails: {
        if (chain || !is_lattice(p)) continue;
        if (auto w = complete_distributivity_witness(p)) {
          r.element = w->element;
          r.subset = w->approximants;
          r.summary = "element " + std::to_string(w->element) + " is not the supremum of " +
                      mask_to_string(w->approximants);
        }
        break;
      }
      case search_target::pospace_fails_for_upper: {
        if (auto w = pospace_witness(p, canonical_topology(p, named_topology::upper))) {
          r.pair = w;
          r.summary = "pair (" + std::to_string(w->first) + "," + std::to_string(w->second) +
                      ") lies in the closure of the order";
        }
        break;
      }
      case search_target::conditional_completeness_fails: {
        if (chain) continue;
        if (auto w = detail::completeness_gap(p)) {
          r.subset = *w;
          r.summary = mask_to_string(*w) + " is bounded without an extremum";
        }
        break;
      }
      case search_target::normality_fails_for_topology: {
        if (chain) continue;
        const auto t = canonical_topology(p, named_topology::upper);
        if (auto w = normality_witness(t, t.carrier_mask())) {
          r.subset = w->first;
          r.second = w->second;
          r.summary = "closed sets " + mask_to_string(w->first) + " and " +
                      mask_to_string(w->second) + " cannot be separated";
        }
        break;
      }
    }
    if (!r.summary.empty()) {
      r.found = true;
      r.poset = std::move(p);
      return r;
    }
  }
  return r;
}

}  // namespace chaintopo
