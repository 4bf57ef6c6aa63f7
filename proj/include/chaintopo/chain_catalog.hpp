#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaintopo/error.hpp"

namespace chaintopo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw error(errc::malformed_element, "not an exact fraction: '" + std::string(text) + "'");
  const Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
  const Integer d{std::string(den)};
  if (d == 0) throw error(errc::malformed_element, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// One point of a catalog chain. `value` carries the number (index, integer,
/// dyadic, rational or natural); `tag` is the second coordinate of a split
/// pair, or marks the top element of omega+1.
struct ChainElement {
  Rational value{0};
  int tag = 0;

  static ChainElement number(Rational q) { return ChainElement{std::move(q), 0}; }
  static ChainElement omega() { return ChainElement{Rational(0), 1}; }
  static ChainElement pair(Rational q, int side) { return ChainElement{std::move(q), side}; }

  friend bool operator==(const ChainElement&, const ChainElement&) = default;
};

enum class chain_kind { finite, integers, dyadic_unit, rational_unit, omega_plus_one, split };

struct ChainFlags {
  bool declared_order_dense = false;
  bool declared_conditionally_complete = false;
  bool has_least = false;
  bool has_greatest = false;

  friend bool operator==(const ChainFlags&, const ChainFlags&) = default;
};

struct LocalStructure {
  bool has_immediate_pred = false;
  bool has_immediate_succ = false;
  bool is_sup_of_strict_downset = false;
  bool is_compact = false;

  friend bool operator==(const LocalStructure&, const LocalStructure&) = default;
};

/// Outcome of looking for a point strictly between a < b: a witness, or a gap.
struct Between {
  std::optional<ChainElement> witness;

  bool is_gap() const noexcept { return !witness.has_value(); }
};

/// A decidable totally ordered set from the catalog, optionally viewed with
/// the order reversed. Handles are small immutable values.
///
/// Entries and their local structure:
///  - finite:n   0 < 1 < ... < n-1; every point compact.
///  - int        all integers; every point has both neighbours, every point compact.
///  - dyadic01   dyadic rationals in [0,1]; dense, only 0 compact.
///  - rat01      rationals in [0,1]; dense, only 0 compact.
///  - omega+1    naturals then a top omega; naturals compact, omega the sup of the naturals.
///  - split      Q x {0,1} lexicographic; (q,0) has successor (q,1), (q,0) is the sup
///               of everything below it, (q,1) is compact.
class Chain {
 public:
  static Chain finite(std::size_t n) {
    if (n == 0) throw error(errc::invalid_argument, "finite chain needs at least one point");
    return Chain(chain_kind::finite, n, false);
  }
  static Chain integers() { return Chain(chain_kind::integers, 0, false); }
  static Chain dyadic_unit() { return Chain(chain_kind::dyadic_unit, 0, false); }
  static Chain rational_unit() { return Chain(chain_kind::rational_unit, 0, false); }
  static Chain omega_plus_one() { return Chain(chain_kind::omega_plus_one, 0, false); }
  static Chain split() { return Chain(chain_kind::split, 0, false); }

  chain_kind kind() const noexcept { return kind_; }
  std::size_t finite_size() const noexcept { return n_; }
  bool is_reversed() const noexcept { return reversed_; }

  /// Same points, opposite order.
  Chain reversed() const { return Chain(kind_, n_, !reversed_); }

  std::string id() const {
    std::string base;
    switch (kind_) {
      case chain_kind::finite: base = "finite:" + std::to_string(n_); break;
      case chain_kind::integers: base = "int"; break;
      case chain_kind::dyadic_unit: base = "dyadic01"; break;
      case chain_kind::rational_unit: base = "rat01"; break;
      case chain_kind::omega_plus_one: base = "omega+1"; break;
      case chain_kind::split: base = "split"; break;
    }
    return reversed_ ? "rev:" + base : base;
  }

  ChainFlags flags() const {
    ChainFlags f;
    switch (kind_) {
      case chain_kind::finite:
        f = {n_ <= 1, true, true, true};
        break;
      case chain_kind::integers: f = {false, true, false, false}; break;
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit: f = {true, false, true, true}; break;
      case chain_kind::omega_plus_one: f = {false, true, true, true}; break;
      case chain_kind::split: f = {false, false, false, false}; break;
    }
    // Density and conditional completeness are self-dual.
    if (reversed_) std::swap(f.has_least, f.has_greatest);
    return f;
  }

  void validate(const ChainElement& x) const {
    auto fail = [&](const std::string& why) {
      throw error(errc::malformed_element, "'" + format(x) + "' in " + id() + ": " + why);
    };
    auto is_integer = [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; };
    switch (kind_) {
      case chain_kind::finite:
        if (x.tag != 0 || !is_integer(x.value) || x.value < 0 || x.value >= Rational(n_))
          fail("expected an index below " + std::to_string(n_));
        break;
      case chain_kind::integers:
        if (x.tag != 0 || !is_integer(x.value)) fail("expected an integer");
        break;
      case chain_kind::dyadic_unit: {
        if (x.tag != 0 || x.value < 0 || x.value > 1) fail("expected a value in [0,1]");
        const Integer den = boost::multiprecision::denominator(x.value);
        if ((den & (den - 1)) != 0) fail("denominator is not a power of two");
        break;
      }
      case chain_kind::rational_unit:
        if (x.tag != 0 || x.value < 0 || x.value > 1) fail("expected a value in [0,1]");
        break;
      case chain_kind::omega_plus_one:
        if (x.tag == 1) {
          if (x.value != 0) fail("malformed omega");
        } else if (x.tag != 0 || !is_integer(x.value) || x.value < 0) {
          fail("expected a natural number or omega");
        }
        break;
      case chain_kind::split:
        if (x.tag != 0 && x.tag != 1) fail("second coordinate must be 0 or 1");
        break;
    }
  }

  std::strong_ordering compare(const ChainElement& a, const ChainElement& b) const {
    validate(a);
    validate(b);
    return reversed_ ? base_compare(b, a) : base_compare(a, b);
  }

  bool less(const ChainElement& a, const ChainElement& b) const { return compare(a, b) < 0; }
  bool leq(const ChainElement& a, const ChainElement& b) const { return compare(a, b) <= 0; }

  /// A point strictly between a < b, preferring midpoints, or a gap when b
  /// immediately succeeds a.
  Between between(const ChainElement& a, const ChainElement& b) const {
    if (compare(a, b) >= 0)
      throw error(errc::not_strictly_ordered, format(a) + " is not below " + format(b));
    return reversed_ ? base_between(b, a) : base_between(a, b);
  }

  std::optional<ChainElement> immediate_successor(const ChainElement& x) const {
    validate(x);
    return reversed_ ? base_pred(x) : base_succ(x);
  }
  std::optional<ChainElement> immediate_predecessor(const ChainElement& x) const {
    validate(x);
    return reversed_ ? base_succ(x) : base_pred(x);
  }

  std::optional<ChainElement> least() const { return reversed_ ? base_greatest() : base_least(); }
  std::optional<ChainElement> greatest() const { return reversed_ ? base_least() : base_greatest(); }

  bool is_least(const ChainElement& x) const {
    auto l = least();
    return l && compare(*l, x) == 0;
  }
  bool is_greatest(const ChainElement& x) const {
    auto g = greatest();
    return g && compare(*g, x) == 0;
  }

  /// Local order structure of x. An element is the supremum of its strict
  /// downset exactly when that downset is nonempty and has no maximum; every
  /// other element, including a least one, is compact.
  LocalStructure local_structure(const ChainElement& x) const {
    validate(x);
    LocalStructure s;
    s.has_immediate_pred = immediate_predecessor(x).has_value();
    s.has_immediate_succ = immediate_successor(x).has_value();
    s.is_sup_of_strict_downset = !s.has_immediate_pred && !is_least(x);
    s.is_compact = !s.is_sup_of_strict_downset;
    return s;
  }

  /// A monotone rational coordinate, continuous for the interval topology
  /// wherever the chain is dense. Used to interpolate separating functions.
  Rational coordinate(const ChainElement& x) const {
    validate(x);
    if (kind_ == chain_kind::omega_plus_one && x.tag == 1)
      throw error(errc::undecidable_query, "omega has no rational coordinate");
    return reversed_ ? Rational(-x.value) : x.value;
  }

  /// k distinct elements, sorted ascending, deterministic in the seed.
  std::vector<ChainElement> sample(std::uint64_t seed, std::size_t k) const {
    if (k == 0) throw error(errc::invalid_argument, "sample size must be at least 1");
    if (kind_ == chain_kind::finite && k > n_)
      throw error(errc::sample_too_large, "cannot draw " + std::to_string(k) +
                                              " distinct points from " + id());
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
      const auto span = static_cast<std::uint64_t>(hi - lo + 1);
      return lo + static_cast<std::int64_t>(rng() % span);
    };
    std::vector<ChainElement> out;
    auto push_unique = [&](ChainElement e) {
      for (const auto& o : out)
        if (o == e) return;
      out.push_back(std::move(e));
    };
    const auto big = static_cast<std::int64_t>(std::max<std::size_t>(64, 4 * k));
    while (out.size() < k) {
      switch (kind_) {
        case chain_kind::finite:
          if (k == n_) {
            for (std::size_t i = 0; i < n_; ++i) push_unique(ChainElement::number(Rational(i)));
          } else {
            push_unique(ChainElement::number(Rational(draw(0, static_cast<std::int64_t>(n_) - 1))));
          }
          break;
        case chain_kind::integers: push_unique(ChainElement::number(Rational(draw(-big, big)))); break;
        case chain_kind::dyadic_unit: {
          const auto level = draw(0, 10);
          const std::int64_t den = std::int64_t{1} << level;
          push_unique(ChainElement::number(Rational(draw(0, den), den)));
          break;
        }
        case chain_kind::rational_unit: {
          const auto den = draw(1, 64);
          push_unique(ChainElement::number(Rational(draw(0, den), den)));
          break;
        }
        case chain_kind::omega_plus_one:
          if (draw(0, 7) == 0)
            push_unique(ChainElement::omega());
          else
            push_unique(ChainElement::number(Rational(draw(0, big))));
          break;
        case chain_kind::split: {
          const auto den = draw(1, 12);
          const Rational q(draw(-3 * den, 3 * den), den);
          const int side = static_cast<int>(draw(0, 1));
          push_unique(ChainElement::pair(q, side));
          if (out.size() < k && draw(0, 3) == 0) push_unique(ChainElement::pair(q, 1 - side));
          break;
        }
      }
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return less(a, b); });
    return out;
  }

  /// Structurally distinguished points worth including in any spot-check.
  std::vector<ChainElement> landmarks() const {
    std::vector<ChainElement> out;
    switch (kind_) {
      case chain_kind::finite:
        out.push_back(ChainElement::number(0));
        if (n_ > 1) out.push_back(ChainElement::number(Rational(n_ - 1)));
        break;
      case chain_kind::integers:
        for (int v : {-1, 0, 1}) out.push_back(ChainElement::number(v));
        break;
      case chain_kind::dyadic_unit:
        for (auto q : {Rational(0), Rational(1, 2), Rational(1)}) out.push_back(ChainElement::number(q));
        break;
      case chain_kind::rational_unit:
        for (auto q : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)})
          out.push_back(ChainElement::number(q));
        break;
      case chain_kind::omega_plus_one:
        out = {ChainElement::number(0), ChainElement::number(1), ChainElement::omega()};
        break;
      case chain_kind::split:
        for (auto q : {Rational(0), Rational(1, 2)})
          for (int side : {0, 1}) out.push_back(ChainElement::pair(q, side));
        break;
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return less(a, b); });
    return out;
  }

  std::string format(const ChainElement& x) const {
    if (kind_ == chain_kind::omega_plus_one && x.tag == 1) return "omega";
    if (kind_ == chain_kind::split) return format_rational(x.value) + ":" + std::to_string(x.tag);
    return format_rational(x.value);
  }

  ChainElement parse(std::string_view text) const {
    ChainElement e;
    if (kind_ == chain_kind::omega_plus_one && (text == "omega" || text == "w")) {
      e = ChainElement::omega();
    } else if (kind_ == chain_kind::split) {
      const auto colon = text.rfind(':');
      if (colon == std::string_view::npos)
        throw error(errc::malformed_element, "split element needs 'p/q:0|1', got '" +
                                                 std::string(text) + "'");
      const auto side = text.substr(colon + 1);
      if (side != "0" && side != "1")
        throw error(errc::malformed_element, "split side must be 0 or 1 in '" + std::string(text) + "'");
      e = ChainElement::pair(parse_rational(text.substr(0, colon)), side == "1" ? 1 : 0);
    } else {
      e = ChainElement::number(parse_rational(text));
    }
    validate(e);
    return e;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Chain(chain_kind kind, std::size_t n, bool reversed) : kind_(kind), n_(n), reversed_(reversed) {}

  std::strong_ordering base_compare(const ChainElement& a, const ChainElement& b) const {
    switch (kind_) {
      case chain_kind::omega_plus_one:
        if (a.tag != b.tag) return a.tag <=> b.tag;
        return a.tag == 1 ? std::strong_ordering::equal : cmp(a.value, b.value);
      case chain_kind::split: {
        const auto c = cmp(a.value, b.value);
        return c != 0 ? c : a.tag <=> b.tag;
      }
      default: return cmp(a.value, b.value);
    }
  }

  static std::strong_ordering cmp(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Between base_between(const ChainElement& a, const ChainElement& b) const {
    switch (kind_) {
      case chain_kind::finite:
      case chain_kind::integers: {
        if (b.value - a.value == 1) return {};
        // floor of the midpoint, which lies strictly inside when b - a >= 2
        const Integer sum = boost::multiprecision::numerator(Rational(a.value + b.value));
        Integer half = sum / 2;
        if (sum < 0 && sum % 2 != 0) half -= 1;
        return {ChainElement::number(Rational(half))};
      }
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit: return {ChainElement::number((a.value + b.value) / 2)};
      case chain_kind::omega_plus_one: {
        if (b.tag == 1) return {ChainElement::number(a.value + 1)};
        if (b.value - a.value == 1) return {};
        const Integer sum = boost::multiprecision::numerator(Rational(a.value + b.value));
        return {ChainElement::number(Rational(Integer(sum / 2)))};
      }
      case chain_kind::split:
        if (a.value == b.value) return {};
        return {ChainElement::pair((a.value + b.value) / 2, 0)};
    }
    return {};
  }

  std::optional<ChainElement> base_succ(const ChainElement& x) const {
    switch (kind_) {
      case chain_kind::finite:
        if (x.value + 1 < Rational(n_)) return ChainElement::number(x.value + 1);
        return std::nullopt;
      case chain_kind::integers: return ChainElement::number(x.value + 1);
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit: return std::nullopt;
      case chain_kind::omega_plus_one:
        if (x.tag == 1) return std::nullopt;
        return ChainElement::number(x.value + 1);
      case chain_kind::split:
        if (x.tag == 0) return ChainElement::pair(x.value, 1);
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<ChainElement> base_pred(const ChainElement& x) const {
    switch (kind_) {
      case chain_kind::finite:
      case chain_kind::integers:
        if (kind_ == chain_kind::finite && x.value == 0) return std::nullopt;
        return ChainElement::number(x.value - 1);
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit: return std::nullopt;
      case chain_kind::omega_plus_one:
        if (x.tag == 1 || x.value == 0) return std::nullopt;
        return ChainElement::number(x.value - 1);
      case chain_kind::split:
        if (x.tag == 1) return ChainElement::pair(x.value, 0);
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<ChainElement> base_least() const {
    switch (kind_) {
      case chain_kind::finite:
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit:
      case chain_kind::omega_plus_one: return ChainElement::number(0);
      default: return std::nullopt;
    }
  }

  std::optional<ChainElement> base_greatest() const {
    switch (kind_) {
      case chain_kind::finite: return ChainElement::number(Rational(n_ - 1));
      case chain_kind::dyadic_unit:
      case chain_kind::rational_unit: return ChainElement::number(1);
      case chain_kind::omega_plus_one: return ChainElement::omega();
      default: return std::nullopt;
    }
  }

  chain_kind kind_;
  std::size_t n_ = 0;
  bool reversed_ = false;
};

/// Parses a catalog spec string: "finite:n", "int", "dyadic01", "rat01",
/// "omega+1", "split", optionally prefixed by "rev:" for the reversed order.
inline Chain make_chain(std::string_view spec) {
  if (spec.starts_with("rev:")) return make_chain(spec.substr(4)).reversed();
  if (spec == "int") return Chain::integers();
  if (spec == "dyadic01") return Chain::dyadic_unit();
  if (spec == "rat01") return Chain::rational_unit();
  if (spec == "omega+1") return Chain::omega_plus_one();
  if (spec == "split") return Chain::split();
  if (spec.starts_with("finite:")) {
    const auto digits = spec.substr(7);
    if (!digits.empty() && digits.size() < 6 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const auto n = static_cast<std::size_t>(std::stoul(std::string(digits)));
      if (n >= 1) return Chain::finite(n);
    }
    throw error(errc::invalid_argument, "bad finite chain size in '" + std::string(spec) + "'");
  }
  throw error(errc::unknown_catalog_id, "'" + std::string(spec) + "'");
}

inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"finite:5", "int", "dyadic01", "rat01", "omega+1", "split"};
  return ids;
}

}  // namespace chaintopo
