#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/element_set.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

/// An interval of a chain. A missing endpoint is the symbolic -inf / +inf
/// and its openness flag is ignored.
struct Interval {
  std::optional<ChainElement> lower;
  bool lower_open = true;
  std::optional<ChainElement> upper;
  bool upper_open = true;

  static Interval closed(ChainElement a, ChainElement b) { return {std::move(a), false, std::move(b), false}; }
  static Interval open(ChainElement a, ChainElement b) { return {std::move(a), true, std::move(b), true}; }
  static Interval below(ChainElement b, bool open) { return {std::nullopt, true, std::move(b), open}; }
  static Interval above(ChainElement a, bool open) { return {std::move(a), open, std::nullopt, true}; }
  static Interval whole() { return {}; }

  friend bool operator==(const Interval& a, const Interval& b) {
    auto lo_eq = a.lower == b.lower && (!a.lower || a.lower_open == b.lower_open);
    auto hi_eq = a.upper == b.upper && (!a.upper || a.upper_open == b.upper_open);
    return lo_eq && hi_eq;
  }
};

/// Finite union of intervals over a catalog chain. Construction keeps the list
/// as given; `normalize` produces the canonical form (sorted, disjoint,
/// non-mergeable, no empty pieces, open endpoints next to a gap closed up).
class IntervalSet {
 public:
  explicit IntervalSet(Chain chain, std::vector<Interval> intervals = {})
      : chain_(std::move(chain)), intervals_(std::move(intervals)) {
    for (const auto& i : intervals_) {
      if (i.lower) chain_.validate(*i.lower);
      if (i.upper) chain_.validate(*i.upper);
    }
  }

  const Chain& chain() const noexcept { return chain_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < intervals_.size(); ++k) {
      const auto& i = intervals_[k];
      if (k) s += ",";
      s += i.lower ? std::string(i.lower_open ? "(" : "[") + chain_.format(*i.lower) : "(-inf";
      s += ",";
      s += i.upper ? chain_.format(*i.upper) + (i.upper_open ? ")" : "]") : "+inf)";
    }
    return s;
  }

 private:
  Chain chain_;
  std::vector<Interval> intervals_;
};

inline bool interval_contains(const Chain& c, const Interval& i, const ChainElement& x) {
  if (i.lower) {
    const auto o = c.compare(*i.lower, x);
    if (i.lower_open ? o >= 0 : o > 0) return false;
  }
  if (i.upper) {
    const auto o = c.compare(x, *i.upper);
    if (i.upper_open ? o >= 0 : o > 0) return false;
  }
  return true;
}

inline bool interval_member(const IntervalSet& s, const ChainElement& x) {
  s.chain().validate(x);
  return std::any_of(s.intervals().begin(), s.intervals().end(),
                     [&](const Interval& i) { return interval_contains(s.chain(), i, x); });
}

inline bool interval_is_empty(const Chain& c, const Interval& i) {
  if (i.lower && i.upper) {
    const auto o = c.compare(*i.lower, *i.upper);
    if (o > 0) return true;
    if (o == 0) return i.lower_open || i.upper_open;
    return i.lower_open && i.upper_open && c.between(*i.lower, *i.upper).is_gap();
  }
  if (i.upper) return i.upper_open && c.is_least(*i.upper);
  if (i.lower) return i.lower_open && c.is_greatest(*i.lower);
  return false;
}

namespace detail {

// Open endpoints adjacent to a gap become closed at the neighbour, and closed
// endpoints at an extreme element become infinite.
inline Interval canonical_endpoints(const Chain& c, Interval i) {
  if (i.lower && i.lower_open)
    if (auto s = c.immediate_successor(*i.lower)) {
      i.lower = *s;
      i.lower_open = false;
    }
  if (i.upper && i.upper_open)
    if (auto p = c.immediate_predecessor(*i.upper)) {
      i.upper = *p;
      i.upper_open = false;
    }
  if (i.lower && !i.lower_open && c.is_least(*i.lower)) i.lower.reset();
  if (i.upper && !i.upper_open && c.is_greatest(*i.upper)) i.upper.reset();
  if (!i.lower) i.lower_open = true;
  if (!i.upper) i.upper_open = true;
  return i;
}

// Order of lower ends: -inf first, and [a before (a.
inline bool lower_before(const Chain& c, const Interval& a, const Interval& b) {
  if (!a.lower || !b.lower) return !a.lower && b.lower;
  const auto o = c.compare(*a.lower, *b.lower);
  if (o != 0) return o < 0;
  return !a.lower_open && b.lower_open;
}

// Whether the upper end of b reaches beyond that of a.
inline bool upper_beyond(const Chain& c, const Interval& a, const Interval& b) {
  if (!a.upper) return false;
  if (!b.upper) return true;
  const auto o = c.compare(*a.upper, *b.upper);
  if (o != 0) return o < 0;
  return a.upper_open && !b.upper_open;
}

// a precedes b by lower end; true when a and b union to one convex piece.
inline bool mergeable(const Chain& c, const Interval& a, const Interval& b, bool faulty) {
  if (!a.upper || !b.lower) return true;
  const auto o = c.compare(*a.upper, *b.lower);
  if (o > 0) return true;
  if (o == 0) return !(a.upper_open && b.lower_open);
  if (faulty) return false;
  return !a.upper_open && !b.lower_open && c.between(*a.upper, *b.lower).is_gap();
}

}  // namespace detail

inline IntervalSet normalize(const IntervalSet& s, const faults& inject = {}) {
  const auto& c = s.chain();
  std::vector<Interval> pieces;
  for (const auto& i : s.intervals())
    if (!interval_is_empty(c, i)) pieces.push_back(detail::canonical_endpoints(c, i));
  std::sort(pieces.begin(), pieces.end(),
            [&](const Interval& a, const Interval& b) { return detail::lower_before(c, a, b); });
  std::vector<Interval> out;
  for (auto& piece : pieces) {
    if (!out.empty() && detail::mergeable(c, out.back(), piece, inject.normalize)) {
      if (detail::upper_beyond(c, out.back(), piece)) {
        out.back().upper = piece.upper;
        out.back().upper_open = piece.upper_open;
      }
    } else {
      out.push_back(std::move(piece));
    }
  }
  return IntervalSet(c, std::move(out));
}

/// Maximal order-convex components, one single-interval set each.
inline std::vector<IntervalSet> convex_components(const IntervalSet& s, const faults& inject = {}) {
  const auto canon = normalize(s, inject);
  std::vector<IntervalSet> out;
  for (const auto& i : canon.intervals()) out.emplace_back(s.chain(), std::vector<Interval>(1, i));
  return out;
}

struct ConvexityVerdict {
  bool convex = true;
  std::optional<ChainElement> witness;  // a missing point between two members
};

inline ConvexityVerdict is_order_convex(const IntervalSet& s, const faults& inject = {}) {
  const auto canon = normalize(s, inject);
  const auto& pieces = canon.intervals();
  if (pieces.size() <= 1) return {};
  const auto& c = s.chain();
  const auto& a = pieces[0];
  const auto& b = pieces[1];
  ConvexityVerdict v{false, std::nullopt};
  if (a.upper_open) {
    v.witness = *a.upper;
  } else if (c.less(*a.upper, *b.lower) && !c.between(*a.upper, *b.lower).is_gap()) {
    v.witness = c.between(*a.upper, *b.lower).witness;
  } else {
    v.witness = *b.lower;
  }
  return v;
}

/// Decomposition of an open subset of a finite chain into maximal order-convex pieces.
struct FiniteDecomposition {
  std::vector<ElementSet> pieces;
  bool pieces_open = true;
  bool unique = true;  // no union of two or more pieces is order-convex
};

inline FiniteDecomposition decompose_open_finite(const FinitePoset& p, const Topology& t,
                                                 const ElementSet& s) {
  require_chain(p);
  require_same_carrier(p, t);
  require_valid(p, s);
  if (!t.is_open(s.bits())) throw error(errc::not_open, s.to_string() + " is not open");
  FiniteDecomposition d;
  std::uint64_t run = 0;
  for (auto x : chain_order(p)) {
    if (s.contains(x)) {
      run |= bit(x);
    } else if (run != 0) {
      d.pieces.emplace_back(p.size(), run);
      run = 0;
    }
  }
  if (run != 0) d.pieces.emplace_back(p.size(), run);
  for (const auto& piece : d.pieces)
    if (!t.is_open(piece.bits())) d.pieces_open = false;
  const std::size_t k = d.pieces.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    if (std::popcount(pick) < 2) continue;
    std::uint64_t merged = 0;
    for (auto i : mask_members(pick)) merged |= d.pieces[i].bits();
    if (is_order_convex_mask(p, merged)) d.unique = false;
  }
  return d;
}

}  // namespace chaintopo
