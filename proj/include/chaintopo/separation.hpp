#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/convexity.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

enum class cut_side { at_or_below, strictly_below };
enum class segment_shape { step, ramp };
enum class construction { constant, gap_step, density_ramp };

constexpr std::string_view to_string(construction c) noexcept {
  switch (c) {
    case construction::constant: return "constant";
    case construction::gap_step: return "gap_step";
    case construction::density_ramp: return "density_ramp";
  }
  return "?";
}

/// Cut i covers the points y with y <= threshold (or y < threshold) not
/// covered by an earlier cut. A step segment takes `value` there; a ramp
/// interpolates linearly in the chain coordinate from the previous cut's value
/// up to `value` at the threshold.
struct Cut {
  ChainElement threshold;
  cut_side side = cut_side::at_or_below;
  Rational value{0};
  segment_shape shape = segment_shape::step;
};

/// A monotone map from a catalog chain into [0,1] given by finitely many cuts.
/// The dual form is stored on the reversed chain and evaluates to 1 - g.
class SeparatingFunction {
 public:
  SeparatingFunction(Chain chain, std::vector<Cut> cuts, Rational default_value,
                     construction how, bool dual = false)
      : chain_(std::move(chain)),
        cuts_(std::move(cuts)),
        default_(std::move(default_value)),
        how_(how),
        dual_(dual) {
    Rational previous(0);
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      const auto& c = cuts_[i];
      chain_.validate(c.threshold);
      if (c.value < 0 || c.value > 1) throw error(errc::invalid_argument, "cut value outside [0,1]");
      if (c.value < previous) throw error(errc::invalid_argument, "cut values decrease");
      if (i == 0 && c.shape == segment_shape::ramp)
        throw error(errc::invalid_argument, "first cut cannot be a ramp");
      if (i > 0 && chain_.less(c.threshold, cuts_[i - 1].threshold))
        throw error(errc::invalid_argument, "cut thresholds out of order");
      previous = c.value;
    }
    if (default_ < previous || default_ > 1)
      throw error(errc::invalid_argument, "default value breaks monotonicity");
  }

  /// Copy with two cut values exchanged, bypassing validation; index
  /// cuts().size() names the default value. Exists to plant faults.
  SeparatingFunction with_swapped_values(std::size_t i, std::size_t j) const {
    SeparatingFunction f = *this;
    auto slot = [&f](std::size_t k) -> Rational& { return k == f.cuts_.size() ? f.default_ : f.cuts_.at(k).value; };
    std::swap(slot(i), slot(j));
    return f;
  }

  /// The chain whose order the function preserves.
  Chain domain() const { return dual_ ? chain_.reversed() : chain_; }
  const Chain& cut_chain() const noexcept { return chain_; }
  const std::vector<Cut>& cuts() const noexcept { return cuts_; }
  const Rational& default_value() const noexcept { return default_; }
  construction how() const noexcept { return how_; }
  bool dual() const noexcept { return dual_; }

  Rational evaluate(const ChainElement& y) const {
    const auto raw = evaluate_raw(y);
    return dual_ ? Rational(1 - raw) : raw;
  }

  bool covers(const Cut& c, const ChainElement& y) const {
    const auto o = chain_.compare(y, c.threshold);
    return c.side == cut_side::at_or_below ? o <= 0 : o < 0;
  }

 private:
  Rational evaluate_raw(const ChainElement& y) const {
    chain_.validate(y);
    const auto it = std::partition_point(cuts_.begin(), cuts_.end(),
                                         [&](const Cut& c) { return !covers(c, y); });
    if (it == cuts_.end()) return default_;
    if (it->shape == segment_shape::step || it == cuts_.begin()) return it->value;
    const auto& prev = *(it - 1);
    const Rational lo = chain_.coordinate(prev.threshold);
    const Rational hi = chain_.coordinate(it->threshold);
    const Rational at = chain_.coordinate(y);
    return prev.value + (at - lo) / (hi - lo) * (it->value - prev.value);
  }

  Chain chain_;
  std::vector<Cut> cuts_;
  Rational default_;
  construction how_;
  bool dual_;
};

inline Rational evaluate(const SeparatingFunction& f, const ChainElement& y) { return f.evaluate(y); }

inline constexpr int default_bisection_depth = 10;

namespace detail {

struct Knot {
  ChainElement point;
  Rational value;
};

// Knots between a and x by repeated bisection; values are dyadic and halve the
// neighbouring values. A gap leaves its segment unsplit.
inline std::vector<Knot> bisection_knots(const Chain& c, const ChainElement& a,
                                         const ChainElement& x, int depth) {
  std::vector<Knot> knots{{a, Rational(0)}, {x, Rational(1)}};
  for (int level = 0; level < depth; ++level) {
    std::vector<Knot> next{knots.front()};
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const auto mid = c.between(knots[i].point, knots[i + 1].point);
      if (mid.witness) next.push_back({*mid.witness, (knots[i].value + knots[i + 1].value) / 2});
      next.push_back(knots[i + 1]);
    }
    knots = std::move(next);
  }
  return knots;
}

}  // namespace detail

/// A monotone continuous f with f = 0 on the closed lower set A and f(x) = 1.
/// A must normalize to the empty set or a single ray (-inf, a].
inline SeparatingFunction separate_from_lower(const Chain& c, const IntervalSet& a,
                                              const ChainElement& x,
                                              int depth = default_bisection_depth) {
  if (!(a.chain() == c)) throw error(errc::carrier_mismatch, "interval set over another chain");
  c.validate(x);
  if (interval_member(a, x)) throw error(errc::point_inside_set, c.format(x) + " lies in A");
  const auto canon = normalize(a);
  const auto& pieces = canon.intervals();
  if (pieces.empty()) return SeparatingFunction(c, {}, Rational(1), construction::constant);
  if (pieces.size() > 1 || pieces.front().lower)
    throw error(errc::not_lower_set, canon.to_string() + " is not a lower set");
  const auto& ray = pieces.front();
  if (ray.upper_open)
    throw error(errc::not_closed, canon.to_string() + " has an open boundary that is a limit point");
  const ChainElement& boundary = *ray.upper;

  const auto succ = c.immediate_successor(boundary);
  if (succ && c.between(boundary, *succ).is_gap())
    return SeparatingFunction(c, {Cut{boundary, cut_side::at_or_below, Rational(0), segment_shape::step}},
                              Rational(1), construction::gap_step);

  std::vector<Cut> cuts{Cut{boundary, cut_side::at_or_below, Rational(0), segment_shape::step}};
  const auto knots = detail::bisection_knots(c, boundary, x, depth);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const bool separated = c.coordinate(knots[i - 1].point) < c.coordinate(knots[i].point);
    cuts.push_back(Cut{knots[i].point, cut_side::at_or_below, knots[i].value,
                       separated ? segment_shape::ramp : segment_shape::step});
  }
  return SeparatingFunction(c, std::move(cuts), Rational(1), construction::density_ramp);
}

/// The same interval set seen on the reversed chain.
inline IntervalSet mirror(const IntervalSet& s) {
  std::vector<Interval> out;
  for (const auto& i : s.intervals()) out.push_back(Interval{i.upper, i.upper_open, i.lower, i.lower_open});
  return IntervalSet(s.chain().reversed(), std::move(out));
}

/// Dual form: f monotone with f = 1 on the closed upper set A and f(x) = 0,
/// obtained from the lower construction on the reversed chain.
inline SeparatingFunction separate_from_upper(const Chain& c, const IntervalSet& a,
                                              const ChainElement& x,
                                              int depth = default_bisection_depth) {
  const auto g = separate_from_lower(c.reversed(), mirror(a), x, depth);
  return SeparatingFunction(g.cut_chain(), g.cuts(), g.default_value(), g.how(), true);
}

struct SeparationCheck {
  bool monotone_ok = false;
  bool zero_on_A_ok = false;  // prescribed value on A: 0, or 1 for the dual form
  bool one_at_x_ok = false;   // prescribed value at x: 1, or 0 for the dual form
  bool continuity_ok = false;

  bool all() const noexcept { return monotone_ok && zero_on_A_ok && one_at_x_ok && continuity_ok; }
};

namespace detail {

// Exact continuity on a finite chain: preimages of [0,t) and (t,1] are open in
// the intrinsic topology for every attained value t.
inline bool finite_continuity(const SeparatingFunction& f) {
  const auto dom = f.domain();
  const auto n = dom.finite_size();
  const auto poset = shapes::chain(n);
  const auto intrinsic = canonical_topology(poset, named_topology::intrinsic);
  // point i of the poset is the i-th smallest element in the domain order
  std::vector<ChainElement> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back(ChainElement::number(Rational(i)));
  std::sort(points.begin(), points.end(), [&](const auto& a, const auto& b) { return dom.less(a, b); });
  std::vector<Rational> values;
  for (const auto& p : points) values.push_back(f.evaluate(p));
  for (const auto& t : values) {
    std::uint64_t below = 0, above = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] < t) below |= bit(i);
      if (values[i] > t) above |= bit(i);
    }
    if (!intrinsic.is_open(below) || !intrinsic.is_open(above)) return false;
  }
  return true;
}

// Every change of value across a cut boundary is certified: a jump needs a
// gap next to the threshold; a ramp needs a strictly increasing coordinate.
inline bool certified_continuity(const SeparatingFunction& f) {
  const auto& c = f.cut_chain();
  const auto& cuts = f.cuts();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const auto& cut = cuts[i];
    if (cut.shape == segment_shape::ramp) {
      if (!(c.coordinate(cuts[i - 1].threshold) < c.coordinate(cut.threshold))) return false;
    }
    const bool last = i + 1 == cuts.size();
    const bool next_is_ramp = !last && cuts[i + 1].shape == segment_shape::ramp;
    const Rational& next_value = last ? f.default_value() : cuts[i + 1].value;
    if (next_is_ramp || next_value == cut.value) continue;
    if (cut.side == cut_side::at_or_below) {
      if (c.is_greatest(cut.threshold)) continue;
      const auto s = c.immediate_successor(cut.threshold);
      if (!s || !c.between(cut.threshold, *s).is_gap()) return false;
    } else {
      if (c.is_least(cut.threshold)) continue;
      const auto p = c.immediate_predecessor(cut.threshold);
      if (!p || !c.between(*p, cut.threshold).is_gap()) return false;
    }
  }
  return true;
}

}  // namespace detail

inline SeparationCheck verify_separating(const Chain& c, const SeparatingFunction& f,
                                         const IntervalSet& a, const ChainElement& x,
                                         std::vector<ChainElement> samples) {
  if (!(f.domain() == c)) throw error(errc::carrier_mismatch, "function defined over another chain");
  const Rational on_a = f.dual() ? Rational(1) : Rational(0);
  const Rational at_x = f.dual() ? Rational(0) : Rational(1);
  SeparationCheck r;
  samples.push_back(x);
  for (const auto& cut : f.cuts()) samples.push_back(cut.threshold);
  std::sort(samples.begin(), samples.end(), [&](const auto& u, const auto& v) { return c.less(u, v); });
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  r.monotone_ok = true;
  r.zero_on_A_ok = true;
  std::optional<Rational> previous;
  for (const auto& y : samples) {
    const auto v = f.evaluate(y);
    if (v < 0 || v > 1) r.monotone_ok = false;
    if (previous && v < *previous) r.monotone_ok = false;
    previous = v;
    if (interval_member(a, y) && v != on_a) r.zero_on_A_ok = false;
  }
  r.one_at_x_ok = f.evaluate(x) == at_x;
  r.continuity_ok = c.kind() == chain_kind::finite ? detail::finite_continuity(f)
                                                   : detail::certified_continuity(f);
  return r;
}

}  // namespace chaintopo
