#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <iterator>
#include <vector>

#include "chaintopo/element_set.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/poset.hpp"

namespace chaintopo {

inline constexpr std::size_t default_family_cap = std::size_t{1} << 22;
inline constexpr std::size_t default_hereditary_cap = 8;

/// A topology on the carrier 0..n-1, held as its full family of open sets in
/// canonical order (cardinality, then lexicographic). Minimal open
/// neighbourhoods are cached alongside, since every finite topology is
/// determined by them.
class Topology {
 public:
  Topology() = default;

  /// Validates the family: it must contain the empty set and the carrier and
  /// be closed under pairwise unions and intersections.
  static Topology from_family(std::size_t n, std::vector<std::uint64_t> family) {
    if (n > max_carrier) throw error(errc::cap_exceeded, "carrier exceeds 64 points");
    const auto full = full_mask(n);
    std::unordered_set<std::uint64_t> seen;
    for (auto u : family) {
      if ((u & ~full) != 0)
        throw error(errc::index_out_of_range, "open set " + mask_to_string(u) +
                                                  " outside carrier of " + std::to_string(n));
      seen.insert(u);
    }
    if (!seen.contains(0)) throw error(errc::invalid_argument, "family lacks the empty set");
    if (!seen.contains(full)) throw error(errc::invalid_argument, "family lacks the carrier");
    std::vector<std::uint64_t> unique(seen.begin(), seen.end());
    for (auto a : unique)
      for (auto b : unique) {
        if (!seen.contains(a | b))
          throw error(errc::invalid_argument, "family not closed under union: " +
                                                  mask_to_string(a) + " | " + mask_to_string(b));
        if (!seen.contains(a & b))
          throw error(errc::invalid_argument, "family not closed under intersection: " +
                                                  mask_to_string(a) + " & " +
                                                  mask_to_string(b));
      }
    return Topology(n, std::move(unique));
  }

  static Topology discrete(std::size_t n);
  static Topology indiscrete(std::size_t n);

  std::size_t carrier() const noexcept { return n_; }
  std::uint64_t carrier_mask() const noexcept { return full_mask(n_); }
  const std::vector<std::uint64_t>& opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }

  /// Smallest open set containing x.
  std::uint64_t neighbourhood(std::size_t x) const noexcept { return nbhd_[x]; }

  std::uint64_t neighbourhood_of_set(std::uint64_t s) const noexcept {
    std::uint64_t out = 0;
    for (auto x : mask_members(s)) out |= nbhd_[x];
    return out;
  }

  bool is_open(std::uint64_t s) const noexcept {
    return std::binary_search(opens_.begin(), opens_.end(), s, canonical_less);
  }
  bool is_closed(std::uint64_t s) const noexcept { return is_open(~s & carrier_mask()); }

  std::vector<std::uint64_t> closed_sets() const {
    std::vector<std::uint64_t> out;
    out.reserve(opens_.size());
    for (auto u : opens_) out.push_back(~u & carrier_mask());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  friend Topology topology_from_neighbourhoods(std::size_t, const std::vector<std::uint64_t>&,
                                               std::size_t);

  Topology(std::size_t n, std::vector<std::uint64_t> opens) : n_(n), opens_(std::move(opens)) {
    std::sort(opens_.begin(), opens_.end(), canonical_less);
    nbhd_.assign(n_, full_mask(n_));
    for (auto u : opens_)
      for (auto x : mask_members(u)) nbhd_[x] &= u;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> opens_;
  std::vector<std::uint64_t> nbhd_;
};

/// All unions of the given minimal neighbourhoods (nbhd[x] must contain x).
inline Topology topology_from_neighbourhoods(std::size_t n, const std::vector<std::uint64_t>& nbhd,
                                             std::size_t family_cap = default_family_cap) {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> family{0};
  while (!frontier.empty()) {
    const auto u = frontier.back();
    frontier.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if ((u & bit(x)) != 0) continue;
      const auto v = u | nbhd[x];
      if (seen.insert(v).second) {
        if (seen.size() > family_cap)
          throw error(errc::cap_exceeded,
                      "open family exceeds " + std::to_string(family_cap) + " sets");
        frontier.push_back(v);
        family.push_back(v);
      }
    }
  }
  return Topology(n, std::move(family));
}

/// Smallest topology containing the subbasis.
inline Topology generate_topology(std::size_t n, const std::vector<std::uint64_t>& subbasis,
                                  std::size_t family_cap = default_family_cap) {
  if (n > max_carrier) throw error(errc::cap_exceeded, "carrier exceeds 64 points");
  const auto full = full_mask(n);
  // Each point's minimal neighbourhood is the intersection of the subbasic
  // sets containing it; the topology is the set of unions of these.
  std::vector<std::uint64_t> nbhd(n, full);
  for (auto s : subbasis) {
    if ((s & ~full) != 0)
      throw error(errc::index_out_of_range,
                  "subbasic set " + mask_to_string(s) + " outside carrier of " + std::to_string(n));
    for (auto x : mask_members(s)) nbhd[x] &= s;
  }
  return topology_from_neighbourhoods(n, nbhd, family_cap);
}

inline Topology generate_topology(std::size_t n, const std::vector<ElementSet>& subbasis) {
  std::vector<std::uint64_t> masks;
  for (const auto& s : subbasis) {
    if (s.carrier() != n) throw error(errc::carrier_mismatch, "subbasis member over other carrier");
    masks.push_back(s.bits());
  }
  return generate_topology(n, masks);
}

inline Topology Topology::discrete(std::size_t n) {
  std::vector<std::uint64_t> singletons;
  for (std::size_t x = 0; x < n; ++x) singletons.push_back(bit(x));
  return generate_topology(n, singletons);
}

inline Topology Topology::indiscrete(std::size_t n) { return generate_topology(n, std::vector<std::uint64_t>{}); }

inline void require_same_carrier(const Topology& a, const Topology& b) {
  if (a.carrier() != b.carrier())
    throw error(errc::carrier_mismatch, "carriers of size " + std::to_string(a.carrier()) +
                                            " and " + std::to_string(b.carrier()));
}

inline void require_same_carrier(const FinitePoset& p, const Topology& t) {
  if (p.size() != t.carrier())
    throw error(errc::carrier_mismatch, "poset of " + std::to_string(p.size()) +
                                            " points with topology on " +
                                            std::to_string(t.carrier()));
}

inline Topology join_topologies(const Topology& a, const Topology& b) {
  require_same_carrier(a, b);
  std::vector<std::uint64_t> subbasis;
  for (std::size_t x = 0; x < a.carrier(); ++x) {
    subbasis.push_back(a.neighbourhood(x));
    subbasis.push_back(b.neighbourhood(x));
  }
  return generate_topology(a.carrier(), subbasis);
}

inline bool topology_equal(const Topology& a, const Topology& b) {
  require_same_carrier(a, b);
  return a == b;
}

/// Open sets present in one family but not the other, for diagnostics.
struct TopologyDiff {
  std::vector<std::uint64_t> only_left;
  std::vector<std::uint64_t> only_right;

  bool empty() const noexcept { return only_left.empty() && only_right.empty(); }
  std::string to_string() const {
    std::string s = "only-left [";
    for (std::size_t i = 0; i < only_left.size(); ++i)
      s += (i ? " " : "") + mask_to_string(only_left[i]);
    s += "] only-right [";
    for (std::size_t i = 0; i < only_right.size(); ++i)
      s += (i ? " " : "") + mask_to_string(only_right[i]);
    return s + "]";
  }
};

inline TopologyDiff topology_diff(const Topology& a, const Topology& b) {
  require_same_carrier(a, b);
  TopologyDiff d;
  std::set_difference(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end(),
                      std::back_inserter(d.only_left), canonical_less);
  std::set_difference(b.opens().begin(), b.opens().end(), a.opens().begin(), a.opens().end(),
                      std::back_inserter(d.only_right), canonical_less);
  return d;
}

enum class hull_kind { interior, closure };

inline std::uint64_t hull_mask(const Topology& t, std::uint64_t s, hull_kind kind) noexcept {
  const auto full = t.carrier_mask();
  if (kind == hull_kind::closure) return ~hull_mask(t, ~s & full, hull_kind::interior) & full;
  std::uint64_t out = 0;
  for (auto u : t.opens())
    if ((u & ~s) == 0) out |= u;
  return out;
}

inline ElementSet hull(const Topology& t, const ElementSet& s, hull_kind kind) {
  if (s.carrier() != t.carrier()) throw error(errc::carrier_mismatch, "set over another carrier");
  return ElementSet(t.carrier(), hull_mask(t, s.bits(), kind));
}

enum class named_topology {
  upper,
  lower,
  scott,
  dual_scott,
  intrinsic,
  interval,
  open_interval,
  order,
  lawson,
  dual_lawson,
  bi_scott,
};

inline constexpr named_topology all_named_topologies[] = {
    named_topology::upper,     named_topology::lower,         named_topology::scott,
    named_topology::dual_scott, named_topology::intrinsic,    named_topology::interval,
    named_topology::open_interval, named_topology::order,     named_topology::lawson,
    named_topology::dual_lawson, named_topology::bi_scott,
};

constexpr std::string_view to_string(named_topology t) noexcept {
  switch (t) {
    case named_topology::upper: return "upper";
    case named_topology::lower: return "lower";
    case named_topology::scott: return "scott";
    case named_topology::dual_scott: return "dual_scott";
    case named_topology::intrinsic: return "intrinsic";
    case named_topology::interval: return "interval";
    case named_topology::open_interval: return "open_interval";
    case named_topology::order: return "order";
    case named_topology::lawson: return "lawson";
    case named_topology::dual_lawson: return "dual_lawson";
    case named_topology::bi_scott: return "bi_scott";
  }
  return "?";
}

inline named_topology parse_named_topology(std::string_view name) {
  for (auto t : all_named_topologies)
    if (to_string(t) == name) return t;
  throw error(errc::invalid_argument, "unknown topology selector '" + std::string(name) + "'");
}

namespace detail {

// Upper sets U such that every directed set whose supremum lies in U meets U.
// The faulty variant demands containment instead of meeting.
inline Topology scott_from_definition(const FinitePoset& p, bool faulty) {
  const auto directed = directed_subsets_with_sup(p);
  std::vector<std::uint64_t> family;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t u = 0; u < total; ++u) {
    if (!is_upper_set_mask(p, u)) continue;
    bool inaccessible = true;
    for (const auto& d : directed) {
      if ((u & bit(d.extremum)) == 0) continue;
      const bool ok = faulty ? (d.members & ~u) == 0 : (d.members & u) != 0;
      if (!ok) {
        inaccessible = false;
        break;
      }
    }
    if (inaccessible) family.push_back(u);
  }
  return Topology::from_family(p.size(), std::move(family));
}

inline Topology dual_scott_from_definition(const FinitePoset& p) {
  const auto filtered = filtered_subsets_with_inf(p);
  std::vector<std::uint64_t> family;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t l = 0; l < total; ++l) {
    if (!is_lower_set_mask(p, l)) continue;
    bool inaccessible = true;
    for (const auto& f : filtered)
      if ((l & bit(f.extremum)) != 0 && (f.members & l) == 0) {
        inaccessible = false;
        break;
      }
    if (inaccessible) family.push_back(l);
  }
  return Topology::from_family(p.size(), std::move(family));
}

inline std::vector<std::uint64_t> upper_subbasis(const FinitePoset& p) {
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(p.carrier_mask() & ~p.down(x));
  return out;
}

inline std::vector<std::uint64_t> lower_subbasis(const FinitePoset& p) {
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(p.carrier_mask() & ~p.up(x));
  return out;
}

inline std::vector<std::uint64_t> ray_subbasis(const FinitePoset& p) {
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    out.push_back(p.strict_up(x));
    out.push_back(p.strict_down(x));
  }
  return out;
}

}  // namespace detail

/// The named topologies of a finite poset. The upper topology is generated by
/// complements of principal ideals and the lower one by complements of
/// principal filters; Scott opens are computed from the directed-supremum
/// definition rather than taken to be all upper sets.
inline Topology canonical_topology(const FinitePoset& p, named_topology name,
                                   const faults& inject = {}) {
  switch (name) {
    case named_topology::upper: return generate_topology(p.size(), detail::upper_subbasis(p));
    case named_topology::lower: return generate_topology(p.size(), detail::lower_subbasis(p));
    case named_topology::scott: return detail::scott_from_definition(p, inject.scott);
    case named_topology::dual_scott: return detail::dual_scott_from_definition(p);
    case named_topology::intrinsic:
      return join_topologies(canonical_topology(p, named_topology::upper),
                             canonical_topology(p, named_topology::lower));
    case named_topology::interval: {
      // Closed subbasis: principal ideals and principal filters.
      auto subbasis = detail::upper_subbasis(p);
      auto lower = detail::lower_subbasis(p);
      subbasis.insert(subbasis.end(), lower.begin(), lower.end());
      return generate_topology(p.size(), subbasis);
    }
    case named_topology::order: return generate_topology(p.size(), detail::ray_subbasis(p));
    case named_topology::open_interval: {
      auto subbasis = detail::ray_subbasis(p);
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
          subbasis.push_back(p.strict_up(a) & p.strict_down(b));
      return generate_topology(p.size(), subbasis);
    }
    case named_topology::lawson:
      return join_topologies(canonical_topology(p, named_topology::scott, inject),
                             canonical_topology(p, named_topology::lower));
    case named_topology::dual_lawson:
      return join_topologies(canonical_topology(p, named_topology::dual_scott),
                             canonical_topology(p, named_topology::upper));
    case named_topology::bi_scott:
      return join_topologies(canonical_topology(p, named_topology::scott, inject),
                             canonical_topology(p, named_topology::dual_scott));
  }
  throw error(errc::invalid_argument, "unknown topology selector");
}

inline ElementSet scott_closure(const FinitePoset& p, const ElementSet& a,
                                const faults& inject = {}) {
  require_valid(p, a);
  return hull(canonical_topology(p, named_topology::scott, inject), a, hull_kind::closure);
}

/// Subspace topology on S, re-indexed so that the i-th smallest member of S becomes i.
inline Topology subspace_topology(const Topology& t, const ElementSet& s) {
  if (s.carrier() != t.carrier()) throw error(errc::carrier_mismatch, "subspace over other carrier");
  const auto members = s.members();
  std::vector<std::uint64_t> nbhd;
  for (auto x : members) {
    const auto trace = t.neighbourhood(x) & s.bits();
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((trace & bit(members[i])) != 0) packed |= bit(i);
    nbhd.push_back(packed);
  }
  return topology_from_neighbourhoods(members.size(), nbhd);
}

/// Index of (i, j) in the product carrier.
constexpr std::size_t product_index(std::size_t i, std::size_t j, std::size_t m) noexcept {
  return i * m + j;
}

/// Product topology on the n*m carrier; point (i, j) is index i*m + j.
inline Topology product_topology(const Topology& a, const Topology& b,
                                 std::size_t family_cap = default_family_cap) {
  const auto n = a.carrier();
  const auto m = b.carrier();
  if (n * m > max_carrier)
    throw error(errc::cap_exceeded, "product carrier of " + std::to_string(n * m) +
                                        " points exceeds 64");
  std::vector<std::uint64_t> nbhd(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t rect = 0;
      for (auto k : mask_members(a.neighbourhood(i)))
        for (auto l : mask_members(b.neighbourhood(j))) rect |= bit(product_index(k, l, m));
      nbhd[product_index(i, j, m)] = rect;
    }
  return topology_from_neighbourhoods(n * m, nbhd, family_cap);
}

/// Whether {(i, j) : member(i, j)} is open in the product of a and b, i.e. a
/// union of open rectangles. Works for carriers whose product exceeds 64 points.
template <class Member>
bool is_open_in_product(const Topology& a, const Topology& b, Member&& member) {
  for (std::size_t i = 0; i < a.carrier(); ++i)
    for (std::size_t j = 0; j < b.carrier(); ++j) {
      if (!member(i, j)) continue;
      for (auto k : mask_members(a.neighbourhood(i)))
        for (auto l : mask_members(b.neighbourhood(j)))
          if (!member(k, l)) return false;
    }
  return true;
}

struct SeparationReport {
  bool t1 = false;
  bool hausdorff = false;
  bool normal = false;
  bool completely_normal = false;

  bool all() const noexcept { return t1 && hausdorff && normal && completely_normal; }
  friend bool operator==(const SeparationReport&, const SeparationReport&) = default;
};

/// Two disjoint closed sets that cannot be separated by disjoint opens.
struct NormalityWitness {
  std::uint64_t subspace;
  std::uint64_t first;
  std::uint64_t second;
};

/// Checks normality of the subspace S of t, in the coordinates of t.
inline std::optional<NormalityWitness> normality_witness(const Topology& t, std::uint64_t s) {
  std::vector<std::uint64_t> closed;
  {
    std::unordered_set<std::uint64_t> seen;
    for (auto u : t.opens()) {
      const auto c = s & ~u;
      if (c != 0 && seen.insert(c).second) closed.push_back(c);
    }
  }
  std::sort(closed.begin(), closed.end(), canonical_less);
  std::vector<std::uint64_t> reach;
  reach.reserve(closed.size());
  for (auto c : closed) reach.push_back(t.neighbourhood_of_set(c) & s);
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = i + 1; j < closed.size(); ++j)
      if ((closed[i] & closed[j]) == 0 && (reach[i] & reach[j]) != 0)
        return NormalityWitness{s, closed[i], closed[j]};
  return std::nullopt;
}

inline SeparationReport separation_report(const Topology& t,
                                          std::size_t cap = default_hereditary_cap) {
  if (t.carrier() > cap)
    throw error(errc::cap_exceeded, "hereditary normality on " + std::to_string(t.carrier()) +
                                        " points exceeds cap " + std::to_string(cap));
  SeparationReport r;
  const auto full = t.carrier_mask();
  r.t1 = true;
  for (std::size_t x = 0; x < t.carrier(); ++x)
    if (!t.is_closed(bit(x))) r.t1 = false;
  r.hausdorff = true;
  for (std::size_t x = 0; x < t.carrier() && r.hausdorff; ++x)
    for (std::size_t y = x + 1; y < t.carrier(); ++y)
      if ((t.neighbourhood(x) & t.neighbourhood(y)) != 0) {
        r.hausdorff = false;
        break;
      }
  r.normal = !normality_witness(t, full).has_value();
  r.completely_normal = r.normal;
  for (std::uint64_t s = 0; s <= full && r.completely_normal; ++s) {
    if (normality_witness(t, s)) r.completely_normal = false;
    if (s == full) break;
  }
  return r;
}

/// A pair (x, y) with x not below y that lies in the closure of the order.
inline std::optional<std::pair<std::size_t, std::size_t>> pospace_witness(const FinitePoset& p,
                                                                          const Topology& t) {
  require_same_carrier(p, t);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) continue;
      for (auto a : mask_members(t.neighbourhood(x)))
        if ((t.neighbourhood(y) & p.up(a)) != 0) return std::pair{x, y};
    }
  return std::nullopt;
}

/// The order is closed in the product, i.e. its complement is a union of open rectangles.
inline bool is_pospace(const FinitePoset& p, const Topology& t) {
  require_same_carrier(p, t);
  return is_open_in_product(t, t, [&](std::size_t x, std::size_t y) { return !p.leq(x, y); });
}

/// Meet and join are continuous from the product topology to t.
inline bool is_topological_lattice(const FinitePoset& p, const Topology& t) {
  require_same_carrier(p, t);
  if (p.size() == 0 || !is_lattice(p))
    throw error(errc::not_a_lattice, "pairwise meets or joins missing");
  const auto n = p.size();
  std::vector<std::size_t> meet(n * n), join(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      meet[x * n + y] = *extremum_mask(p, bit(x) | bit(y), extremum_kind::inf);
      join[x * n + y] = *extremum_mask(p, bit(x) | bit(y), extremum_kind::sup);
    }
  // A map between finite spaces is continuous iff it sends each minimal
  // neighbourhood into the minimal neighbourhood of the image point.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto nm = t.neighbourhood(meet[x * n + y]);
      const auto nj = t.neighbourhood(join[x * n + y]);
      for (auto a : mask_members(t.neighbourhood(x)))
        for (auto b : mask_members(t.neighbourhood(y))) {
          if ((nm & bit(meet[a * n + b])) == 0) return false;
          if ((nj & bit(join[a * n + b])) == 0) return false;
        }
    }
  return true;
}

/// Every open U around x contains an open order-convex V around x.
inline bool has_order_convex_basis(const FinitePoset& p, const Topology& t) {
  require_same_carrier(p, t);
  std::vector<std::uint64_t> convex;
  for (auto u : t.opens())
    if (is_order_convex_mask(p, u)) convex.push_back(u);
  for (auto u : t.opens())
    for (auto x : mask_members(u)) {
      bool found = false;
      for (auto v : convex)
        if ((v & bit(x)) != 0 && (v & ~u) == 0) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

/// Every lower set open in the intrinsic topology is open in the lower
/// topology; equivalently, intrinsic-closed upper sets are closed in the lower
/// topology, whose closed sets are always upper sets.
inline bool xu_condition(const FinitePoset& p) {
  const auto intrinsic = canonical_topology(p, named_topology::intrinsic);
  const auto lower = canonical_topology(p, named_topology::lower);
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t l = 0; l < total; ++l)
    if (is_lower_set_mask(p, l) && intrinsic.is_open(l) && !lower.is_open(l)) return false;
  return true;
}

}  // namespace chaintopo
