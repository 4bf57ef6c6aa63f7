#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/element_set.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

namespace detail {

// x << y against a precomputed directed-with-sup list. The faulty variant
// asks for x < d instead of x <= d.
inline bool way_below_in(const FinitePoset& p, const std::vector<SubsetWithExtremum>& directed,
                         std::size_t x, std::size_t y, bool faulty) {
  const auto needed = faulty ? p.strict_up(x) : p.up(x);
  for (const auto& d : directed)
    if (p.leq(y, d.extremum) && (d.members & needed) == 0) return false;
  return true;
}

}  // namespace detail

/// Brute-force way-below: every directed subset with a supremum above y
/// contains an element above x.
inline bool way_below(const FinitePoset& p, std::size_t x, std::size_t y,
                      const faults& inject = {}, std::size_t cap = default_exhaustive_cap) {
  require_index(p, x);
  require_index(p, y);
  return detail::way_below_in(p, directed_subsets_with_sup(p, cap), x, y, inject.way_below);
}

struct WayBelowReport {
  std::size_t n = 0;
  std::vector<std::uint64_t> ll;  // row x holds {y : x << y}
  ElementSet compact;

  bool holds(std::size_t x, std::size_t y) const noexcept { return (ll[x] & bit(y)) != 0; }
};

inline WayBelowReport way_below_report(const FinitePoset& p, const faults& inject = {},
                                       std::size_t cap = default_exhaustive_cap) {
  const auto directed = directed_subsets_with_sup(p, cap);
  WayBelowReport r{p.size(), std::vector<std::uint64_t>(p.size(), 0), ElementSet(p.size())};
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (detail::way_below_in(p, directed, x, y, inject.way_below)) r.ll[x] |= bit(y);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (r.holds(x, x)) r.compact.insert(x);
  return r;
}

namespace detail {

inline std::vector<SubsetWithExtremum> subsets_with_sup(const FinitePoset& p, std::size_t cap) {
  require_exhaustive(p, cap);
  std::vector<SubsetWithExtremum> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 0; s < total; ++s)
    if (auto sup = extremum_mask(p, s, extremum_kind::sup)) out.push_back({s, *sup});
  return out;
}

inline bool way_way_below_in(const FinitePoset& p, const std::vector<SubsetWithExtremum>& all,
                             std::size_t x, std::size_t y) {
  for (const auto& b : all)
    if (p.leq(y, b.extremum) && (b.members & p.up(x)) == 0) return false;
  return true;
}

}  // namespace detail

/// Like way-below, but quantifying over arbitrary subsets with a supremum.
inline bool way_way_below(const FinitePoset& p, std::size_t x, std::size_t y,
                          std::size_t cap = default_exhaustive_cap) {
  require_index(p, x);
  require_index(p, y);
  return detail::way_way_below_in(p, detail::subsets_with_sup(p, cap), x, y);
}

/// Element x with x != sup{y : y <<< x}; none when the poset is completely distributive.
struct DistributivityWitness {
  std::size_t element;
  std::uint64_t approximants;
  std::optional<std::size_t> approximant_sup;
};

inline std::optional<DistributivityWitness> complete_distributivity_witness(
    const FinitePoset& p, std::size_t cap = default_exhaustive_cap) {
  const auto all = detail::subsets_with_sup(p, cap);
  // Scanned from the highest index down, so a lattice built over its index
  // order reports failures nearest the top first.
  for (std::size_t x = p.size(); x-- > 0;) {
    std::uint64_t approx = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (detail::way_way_below_in(p, all, y, x)) approx |= bit(y);
    const auto sup = extremum_mask(p, approx, extremum_kind::sup);
    if (sup != x) return DistributivityWitness{x, approx, sup};
  }
  return std::nullopt;
}

inline bool is_completely_distributive(const FinitePoset& p,
                                       std::size_t cap = default_exhaustive_cap) {
  return !complete_distributivity_witness(p, cap).has_value();
}

inline bool is_continuous_poset(const FinitePoset& p, const faults& inject = {},
                                std::size_t cap = default_exhaustive_cap) {
  const auto report = way_below_report(p, inject, cap);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::uint64_t waydown = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (report.holds(y, x)) waydown |= bit(y);
    if (!is_directed_mask(p, waydown) || extremum_mask(p, waydown, extremum_kind::sup) != x)
      return false;
  }
  return true;
}

/// y < x in the hypercontinuity sense: x is interior to the principal filter
/// of y, interiors taken in the upper topology.
inline bool hyper_prec(const FinitePoset& p, const Topology& upper, std::size_t y, std::size_t x) {
  require_index(p, x);
  require_index(p, y);
  require_same_carrier(p, upper);
  return (hull_mask(upper, p.up(y), hull_kind::interior) & bit(x)) != 0;
}

inline bool hyper_prec(const FinitePoset& p, std::size_t y, std::size_t x) {
  return hyper_prec(p, canonical_topology(p, named_topology::upper), y, x);
}

inline bool is_hypercontinuous(const FinitePoset& p) {
  const auto upper = canonical_topology(p, named_topology::upper);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::uint64_t approx = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (hyper_prec(p, upper, y, x)) approx |= bit(y);
    if (!is_directed_mask(p, approx) || extremum_mask(p, approx, extremum_kind::sup) != x)
      return false;
  }
  return true;
}

enum class dichotomy { compact, sup_of_strict_downset };

constexpr std::string_view to_string(dichotomy d) noexcept {
  return d == dichotomy::compact ? "Compact" : "SupOfStrictDownset";
}

/// Every point of a chain is compact or the supremum of its (nonempty) strict
/// downset, never both. Both sides are computed and their exclusivity asserted.
inline dichotomy theorem2_dichotomy(const FinitePoset& p, std::size_t x,
                                    const faults& inject = {}) {
  require_chain(p);
  require_index(p, x);
  const bool compact = way_below(p, x, x, inject);
  const auto below = p.strict_down(x);
  const bool sup_of_downset =
      below != 0 && extremum_mask(p, below, extremum_kind::sup) == std::optional<std::size_t>(x);
  if (compact == sup_of_downset)
    throw error(errc::invariant_violation,
                "dichotomy fails at " + std::to_string(x) + (compact ? " (both)" : " (neither)"));
  return compact ? dichotomy::compact : dichotomy::sup_of_strict_downset;
}

inline dichotomy theorem2_dichotomy(const Chain& c, const ChainElement& x) {
  const auto s = c.local_structure(x);
  if (s.is_compact == s.is_sup_of_strict_downset)
    throw error(errc::invariant_violation, "dichotomy fails at " + c.format(x) + " in " + c.id());
  return s.is_compact ? dichotomy::compact : dichotomy::sup_of_strict_downset;
}

/// Way-below on a chain: strict order off the diagonal, compactness on it.
inline bool chain_way_below(const Chain& c, const ChainElement& x, const ChainElement& y) {
  const auto order = c.compare(x, y);
  if (order < 0) return true;
  if (order > 0) return false;
  return c.local_structure(x).is_compact;
}

struct Corollary3Report {
  bool cond1 = false;  // < and << agree away from the least element
  bool cond2 = false;  // no compact element other than the least one
  bool order_dense = false;
  bool conditionally_complete = false;
  std::size_t points_examined = 0;

  friend bool operator==(const Corollary3Report&, const Corollary3Report&) = default;
};

namespace detail {

inline void check_corollary3(const Corollary3Report& r, const std::string& where) {
  if (r.cond1 != r.cond2)
    throw error(errc::invariant_violation, "cond1 != cond2 on " + where);
  if (r.cond1 && !r.order_dense)
    throw error(errc::invariant_violation, "conditions hold but not order-dense on " + where);
  if (r.conditionally_complete && r.order_dense && !r.cond1)
    throw error(errc::invariant_violation,
                "conditionally complete and order-dense but conditions fail on " + where);
}

}  // namespace detail

/// Finite chain: cond1 from the full way-below relation, cond2 from the
/// supremum test of the dichotomy, both excluding the least element.
inline Corollary3Report corollary3_report(const FinitePoset& p, const faults& inject = {}) {
  require_chain(p);
  const auto wb = way_below_report(p, inject);
  const auto bottom = least(p);
  Corollary3Report r;
  r.points_examined = p.size();
  r.cond1 = true;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == bottom || y == bottom) continue;
      if (p.lt(x, y) != wb.holds(x, y)) r.cond1 = false;
    }
  r.cond2 = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (x == bottom) continue;
    const auto below = p.strict_down(x);
    const bool sup_of_downset = below != 0 && extremum_mask(p, below, extremum_kind::sup) == x;
    if (!sup_of_downset) r.cond2 = false;
  }
  const auto cls = classify(p);
  r.order_dense = cls.order_dense;
  r.conditionally_complete = cls.conditionally_complete;
  detail::check_corollary3(r, "finite chain of " + std::to_string(p.size()));
  return r;
}

/// Catalog chain: global flags come from the handle's declared metadata; cond1
/// and cond2 are evaluated on a seeded sample plus the landmarks, and sampled
/// pairs spot-check the declared density.
inline Corollary3Report corollary3_report(const Chain& c, std::uint64_t seed = 0,
                                          std::size_t k = 64) {
  auto points = c.landmarks();
  if (c.kind() == chain_kind::finite) k = std::min(k, c.finite_size());
  for (auto& e : c.sample(seed, k)) points.push_back(std::move(e));
  std::vector<ChainElement> unique;
  for (auto& e : points)
    if (std::none_of(unique.begin(), unique.end(), [&](const auto& u) { return u == e; }))
      unique.push_back(e);

  const auto flags = c.flags();
  Corollary3Report r;
  r.points_examined = unique.size();
  r.order_dense = flags.declared_order_dense;
  r.conditionally_complete = flags.declared_conditionally_complete;
  r.cond1 = true;
  r.cond2 = true;
  for (const auto& x : unique) {
    if (c.is_least(x)) continue;
    // Compactness certified through a gap below x rather than through the
    // local-structure flag used by chain_way_below.
    const auto pred = c.immediate_predecessor(x);
    if (pred && c.between(*pred, x).is_gap()) r.cond2 = false;
    for (const auto& y : unique) {
      if (c.is_least(y)) continue;
      if (c.less(x, y) != chain_way_below(c, x, y)) r.cond1 = false;
      if (flags.declared_order_dense && c.less(x, y) && c.between(x, y).is_gap())
        throw error(errc::invariant_violation, c.id() + " declared dense but gap between " +
                                                   c.format(x) + " and " + c.format(y));
    }
  }
  detail::check_corollary3(r, c.id());
  return r;
}

}  // namespace chaintopo
