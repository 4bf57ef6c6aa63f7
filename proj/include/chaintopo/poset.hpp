#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chaintopo/element_set.hpp"
#include "chaintopo/error.hpp"

namespace chaintopo {

inline constexpr std::size_t default_poset_cap = 16;
inline constexpr std::size_t default_exhaustive_cap = 16;

class FinitePoset;
enum class build_mode { full_relation, hasse_covers };
FinitePoset build_poset(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                        build_mode mode, std::size_t cap = default_poset_cap);

/// An order relation on the points 0..n-1. Row `up(x)` holds {y : x <= y}.
/// Instances only come out of `build_poset`, so the three axioms always hold.
class FinitePoset {
 public:
  std::size_t size() const noexcept { return up_.size(); }

  bool leq(std::size_t x, std::size_t y) const noexcept { return (up_[x] & bit(y)) != 0; }
  bool lt(std::size_t x, std::size_t y) const noexcept { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }

  std::uint64_t up(std::size_t x) const noexcept { return up_[x]; }
  std::uint64_t down(std::size_t x) const noexcept { return down_[x]; }
  std::uint64_t strict_up(std::size_t x) const noexcept { return up_[x] & ~bit(x); }
  std::uint64_t strict_down(std::size_t x) const noexcept { return down_[x] & ~bit(x); }
  std::uint64_t carrier_mask() const noexcept { return full_mask(size()); }

  /// Number of true entries of the relation matrix, diagonal included.
  std::size_t relation_size() const noexcept {
    std::size_t total = 0;
    for (auto row : up_) total += static_cast<std::size_t>(std::popcount(row));
    return total;
  }

  /// Hasse covers (x, y) with x < y and nothing strictly between, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (lt(x, y) && (strict_up(x) & strict_down(y)) == 0) out.emplace_back(x, y);
    return out;
  }

  FinitePoset dual() const {
    FinitePoset d;
    d.up_ = down_;
    d.down_ = up_;
    return d;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  FinitePoset() = default;
  explicit FinitePoset(std::vector<std::uint64_t> up) : up_(std::move(up)), down_(up_.size(), 0) {
    for (std::size_t x = 0; x < up_.size(); ++x)
      for (auto y : mask_members(up_[x])) down_[y] |= bit(x);
  }

  friend FinitePoset build_poset(std::size_t, std::span<const std::pair<std::size_t, std::size_t>>,
                                 build_mode, std::size_t);

  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

inline FinitePoset build_poset(std::size_t n,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs,
                               build_mode mode, std::size_t cap) {
  if (n > cap)
    throw error(errc::cap_exceeded,
                "poset of " + std::to_string(n) + " points exceeds cap " + std::to_string(cap));
  if (n > max_carrier) throw error(errc::cap_exceeded, "poset exceeds 64 points");
  std::vector<std::uint64_t> up(n, 0);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw error(errc::index_out_of_range, "pair (" + std::to_string(x) + "," +
                                                std::to_string(y) + ") outside 0.." +
                                                std::to_string(n == 0 ? 0 : n - 1));
    up[x] |= bit(y);
  }
  if (mode == build_mode::hasse_covers) {
    for (std::size_t x = 0; x < n; ++x) up[x] |= bit(x);
    // Warshall over bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if ((up[x] & bit(k)) != 0) up[x] |= up[k];
  }
  // Antisymmetry first so that a two-cycle is reported as such, with the
  // lexicographically smallest witness.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if ((up[x] & bit(y)) != 0 && (up[y] & bit(x)) != 0)
        throw axiom_violation(axiom::antisymmetric, x, y);
  for (std::size_t x = 0; x < n; ++x)
    if ((up[x] & bit(x)) == 0) throw axiom_violation(axiom::reflexive, x, x);
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : mask_members(up[x]))
      if ((up[y] & ~up[x]) != 0) {
        const auto z = static_cast<std::size_t>(std::countr_zero(up[y] & ~up[x]));
        throw axiom_violation(axiom::transitive, x, z);
      }
  return FinitePoset(std::move(up));
}

inline FinitePoset build_poset(std::size_t n,
                               std::initializer_list<std::pair<std::size_t, std::size_t>> pairs,
                               build_mode mode = build_mode::hasse_covers,
                               std::size_t cap = default_poset_cap) {
  std::vector<std::pair<std::size_t, std::size_t>> v(pairs);
  return build_poset(n, std::span<const std::pair<std::size_t, std::size_t>>(v), mode, cap);
}

/// Small named posets used throughout tests, the suite and the CLI.
namespace shapes {

inline FinitePoset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return build_poset(n, covers, build_mode::hasse_covers);
}

inline FinitePoset antichain(std::size_t n) {
  return build_poset(n, std::span<const std::pair<std::size_t, std::size_t>>{},
                     build_mode::hasse_covers);
}

/// Diamond: 0 < {1,2,3} < 4.
inline FinitePoset m3() {
  return build_poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

/// Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
inline FinitePoset n5() { return build_poset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

/// Two minimal points 0,1 below two maximal points 2,3.
inline FinitePoset bowtie() { return build_poset(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace shapes

inline void require_exhaustive(const FinitePoset& p, std::size_t cap) {
  if (p.size() > cap)
    throw error(errc::cap_exceeded, "exhaustive predicate on " + std::to_string(p.size()) +
                                        " points exceeds cap " + std::to_string(cap));
}

inline void require_valid(const FinitePoset& p, const ElementSet& s) {
  if (s.carrier() != p.size())
    throw error(errc::index_out_of_range, "set over carrier " + std::to_string(s.carrier()) +
                                              " used with poset of " +
                                              std::to_string(p.size()));
}

inline void require_index(const FinitePoset& p, std::size_t x) {
  if (x >= p.size())
    throw error(errc::index_out_of_range,
                "element " + std::to_string(x) + " not in poset of " + std::to_string(p.size()));
}

enum class cone_dir { down, up, strict_down, strict_up };

inline std::uint64_t cone_mask(const FinitePoset& p, std::uint64_t s, cone_dir dir) noexcept {
  std::uint64_t out = 0;
  for (auto x : mask_members(s)) {
    switch (dir) {
      case cone_dir::down: out |= p.down(x); break;
      case cone_dir::up: out |= p.up(x); break;
      case cone_dir::strict_down: out |= p.strict_down(x); break;
      case cone_dir::strict_up: out |= p.strict_up(x); break;
    }
  }
  return out;
}

inline ElementSet cone(const FinitePoset& p, const ElementSet& s, cone_dir dir) {
  require_valid(p, s);
  return ElementSet(p.size(), cone_mask(p, s.bits(), dir));
}

enum class bound_dir { upper, lower };

inline std::uint64_t bounds_mask(const FinitePoset& p, std::uint64_t s, bound_dir dir) noexcept {
  std::uint64_t out = p.carrier_mask();
  for (auto x : mask_members(s)) out &= (dir == bound_dir::upper ? p.up(x) : p.down(x));
  return out;
}

inline ElementSet bounds(const FinitePoset& p, const ElementSet& s, bound_dir dir) {
  require_valid(p, s);
  return ElementSet(p.size(), bounds_mask(p, s.bits(), dir));
}

enum class extremum_kind { sup, inf };

/// Least upper bound (or greatest lower bound) of a mask; nullopt when absent.
/// The supremum of the empty set is the least element of the poset.
inline std::optional<std::size_t> extremum_mask(const FinitePoset& p, std::uint64_t s,
                                                extremum_kind kind) noexcept {
  const auto b = bounds_mask(p, s, kind == extremum_kind::sup ? bound_dir::upper : bound_dir::lower);
  for (auto u : mask_members(b)) {
    const auto cone_of_u = kind == extremum_kind::sup ? p.up(u) : p.down(u);
    if ((b & ~cone_of_u) == 0) return u;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> extremum(const FinitePoset& p, const ElementSet& s,
                                           extremum_kind kind) {
  require_valid(p, s);
  return extremum_mask(p, s.bits(), kind);
}

inline std::optional<std::size_t> least(const FinitePoset& p) noexcept {
  return extremum_mask(p, 0, extremum_kind::sup);
}
inline std::optional<std::size_t> greatest(const FinitePoset& p) noexcept {
  return extremum_mask(p, 0, extremum_kind::inf);
}

inline bool is_chain_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  for (auto x : mask_members(s))
    if ((s & ~(p.up(x) | p.down(x))) != 0) return false;
  return true;
}

/// A chain is nonempty and totally ordered.
inline bool is_chain(const FinitePoset& p) noexcept {
  return p.size() > 0 && is_chain_mask(p, p.carrier_mask());
}

inline void require_chain(const FinitePoset& p) {
  if (!is_chain(p)) throw error(errc::not_a_chain, "poset is not totally ordered");
}

/// Position of x in a chain: the number of elements strictly below it.
inline std::size_t chain_rank(const FinitePoset& p, std::size_t x) noexcept {
  return static_cast<std::size_t>(std::popcount(p.strict_down(x)));
}

/// Elements of a chain listed bottom to top.
inline std::vector<std::size_t> chain_order(const FinitePoset& p) {
  require_chain(p);
  std::vector<std::size_t> order(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) order[chain_rank(p, x)] = x;
  return order;
}

inline bool is_directed_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  if (s == 0) return false;
  const auto members = mask_members(s);
  for (auto x : members)
    for (auto y : members)
      if ((s & p.up(x) & p.up(y)) == 0) return false;
  return true;
}

inline bool is_filtered_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  if (s == 0) return false;
  const auto members = mask_members(s);
  for (auto x : members)
    for (auto y : members)
      if ((s & p.down(x) & p.down(y)) == 0) return false;
  return true;
}

inline bool is_directed(const FinitePoset& p, const ElementSet& s) {
  require_valid(p, s);
  return is_directed_mask(p, s.bits());
}

inline bool is_lattice(const FinitePoset& p) noexcept {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      const auto pair = bit(x) | bit(y);
      if (!extremum_mask(p, pair, extremum_kind::sup) || !extremum_mask(p, pair, extremum_kind::inf))
        return false;
    }
  return true;
}

struct PosetClassification {
  bool is_chain = false;
  bool is_lattice = false;
  bool order_dense = false;
  bool complete = false;
  bool conditionally_complete = false;
  bool up_complete = false;

  friend bool operator==(const PosetClassification&, const PosetClassification&) = default;
};

inline PosetClassification classify(const FinitePoset& p,
                                    std::size_t cap = default_exhaustive_cap) {
  require_exhaustive(p, cap);
  PosetClassification c;
  c.is_chain = is_chain(p);
  c.is_lattice = is_lattice(p);

  // Idempotence of <: every x < y has some z with x < z < y.
  c.order_dense = true;
  for (std::size_t x = 0; x < p.size() && c.order_dense; ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.lt(x, y) && (p.strict_up(x) & p.strict_down(y)) == 0) {
        c.order_dense = false;
        break;
      }

  c.complete = true;
  c.conditionally_complete = true;
  c.up_complete = true;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    const bool has_sup = extremum_mask(p, s, extremum_kind::sup).has_value();
    if (!has_sup) {
      c.complete = false;
      if (s != 0) {
        c.up_complete = false;
        if (bounds_mask(p, s, bound_dir::upper) != 0) c.conditionally_complete = false;
      }
    }
  }
  return c;
}

/// All inclusion-maximal chains, each as a set, sorted by ascending member lists.
inline std::vector<ElementSet> maximal_chains(const FinitePoset& p,
                                              std::size_t cap = default_exhaustive_cap) {
  require_exhaustive(p, cap);
  std::vector<std::uint64_t> comparable(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) comparable[x] = p.up(x) | p.down(x);
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!is_chain_mask(p, s)) continue;
    bool maximal = true;
    for (std::size_t y = 0; y < p.size() && maximal; ++y)
      if ((s & bit(y)) == 0 && (s & ~comparable[y]) == 0) maximal = false;
    if (maximal) out.emplace_back(p.size(), s);
  }
  std::sort(out.begin(), out.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.members() < b.members(); });
  return out;
}

/// Dedekind-MacNeille closure: the lower bounds of the upper bounds of A.
inline std::uint64_t dm_closure_mask(const FinitePoset& p, std::uint64_t a) noexcept {
  return bounds_mask(p, bounds_mask(p, a, bound_dir::upper), bound_dir::lower);
}

inline ElementSet dm_closure(const FinitePoset& p, const ElementSet& a) {
  require_valid(p, a);
  return ElementSet(p.size(), dm_closure_mask(p, a.bits()));
}

/// A function between the points of two finite posets. Monotonicity is not required.
class PosetMap {
 public:
  PosetMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (image_.size() != source_.size())
      throw error(errc::index_out_of_range, "map image has " + std::to_string(image_.size()) +
                                                " entries for a source of " +
                                                std::to_string(source_.size()));
    for (auto v : image_)
      if (v >= target_.size())
        throw error(errc::index_out_of_range, "image value " + std::to_string(v) +
                                                  " outside target of " +
                                                  std::to_string(target_.size()));
  }

  const FinitePoset& source() const noexcept { return source_; }
  const FinitePoset& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return image_.at(x); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  std::uint64_t image_of(std::uint64_t a) const noexcept {
    std::uint64_t out = 0;
    for (auto x : mask_members(a)) out |= bit(image_[x]);
    return out;
  }

  bool is_monotone() const noexcept {
    for (std::size_t x = 0; x < source_.size(); ++x)
      for (std::size_t y = 0; y < source_.size(); ++y)
        if (source_.leq(x, y) && !target_.leq(image_[x], image_[y])) return false;
    return true;
  }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<std::size_t> image_;
};

/// Subset A of the source on which cut-stability fails, if any.
inline std::optional<std::uint64_t> cut_stability_witness(const PosetMap& f,
                                                          std::size_t cap = default_exhaustive_cap) {
  const auto& src = f.source();
  const auto& dst = f.target();
  require_exhaustive(src, cap);
  const std::uint64_t total = std::uint64_t{1} << src.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto fa = f.image_of(a);
    const auto lhs_up = bounds_mask(dst, f.image_of(bounds_mask(src, a, bound_dir::upper)),
                                    bound_dir::lower);
    const auto rhs_up = bounds_mask(dst, bounds_mask(dst, fa, bound_dir::upper), bound_dir::lower);
    const auto lhs_down = bounds_mask(dst, f.image_of(bounds_mask(src, a, bound_dir::lower)),
                                      bound_dir::upper);
    const auto rhs_down =
        bounds_mask(dst, bounds_mask(dst, fa, bound_dir::lower), bound_dir::upper);
    if (lhs_up != rhs_up || lhs_down != rhs_down) return a;
  }
  return std::nullopt;
}

inline bool is_cut_stable(const PosetMap& f, std::size_t cap = default_exhaustive_cap) {
  return !cut_stability_witness(f, cap).has_value();
}

struct SubsetWithExtremum {
  std::uint64_t members;
  std::size_t extremum;
};

/// Every directed subset that has a supremum, paired with that supremum.
inline std::vector<SubsetWithExtremum> directed_subsets_with_sup(
    const FinitePoset& p, std::size_t cap = default_exhaustive_cap) {
  require_exhaustive(p, cap);
  std::vector<SubsetWithExtremum> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!is_directed_mask(p, s)) continue;
    if (auto sup = extremum_mask(p, s, extremum_kind::sup)) out.push_back({s, *sup});
  }
  return out;
}

/// Every filtered subset that has an infimum, paired with that infimum.
inline std::vector<SubsetWithExtremum> filtered_subsets_with_inf(
    const FinitePoset& p, std::size_t cap = default_exhaustive_cap) {
  require_exhaustive(p, cap);
  std::vector<SubsetWithExtremum> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!is_filtered_mask(p, s)) continue;
    if (auto inf = extremum_mask(p, s, extremum_kind::inf)) out.push_back({s, *inf});
  }
  return out;
}

/// a, b in S and a <= c <= b imply c in S.
inline bool is_order_convex_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  return (cone_mask(p, s, cone_dir::up) & cone_mask(p, s, cone_dir::down) & ~s) == 0;
}

inline bool is_lower_set_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  return cone_mask(p, s, cone_dir::down) == s;
}
inline bool is_upper_set_mask(const FinitePoset& p, std::uint64_t s) noexcept {
  return cone_mask(p, s, cone_dir::up) == s;
}

}  // namespace chaintopo
