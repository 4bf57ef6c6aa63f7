#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "chaintopo/error.hpp"

namespace chaintopo {

inline constexpr std::size_t max_carrier = 64;

constexpr std::uint64_t full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << i; }

inline std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// ascending member lists.
constexpr bool canonical_less(std::uint64_t a, std::uint64_t b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

/// A subset of the carrier 0..n-1, stored as a characteristic bit vector.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t n, std::uint64_t bits = 0) : n_(n), bits_(bits) {
    if (n > max_carrier)
      throw error(errc::cap_exceeded, "carrier of " + std::to_string(n) + " exceeds 64");
    if ((bits & ~full_mask(n)) != 0)
      throw error(errc::index_out_of_range, "member outside carrier of size " + std::to_string(n));
  }

  ElementSet(std::size_t n, std::initializer_list<std::size_t> members) : ElementSet(n) {
    for (auto m : members) insert(m);
  }

  static ElementSet full(std::size_t n) { return ElementSet(n, full_mask(n)); }
  static ElementSet from_members(std::size_t n, const std::vector<std::size_t>& members) {
    ElementSet s(n);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t carrier() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(std::size_t x) const noexcept { return x < n_ && (bits_ & bit(x)) != 0; }

  void insert(std::size_t x) {
    check(x);
    bits_ |= bit(x);
  }
  void erase(std::size_t x) {
    check(x);
    bits_ &= ~bit(x);
  }

  std::vector<std::size_t> members() const { return mask_members(bits_); }

  bool subset_of(const ElementSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  ElementSet complement() const { return ElementSet(n_, ~bits_ & full_mask(n_)); }

  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.n_, a.bits_ & b.bits_);
  }
  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.n_, a.bits_ | b.bits_);
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.n_, a.bits_ & ~b.bits_);
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto m : members()) {
      if (!first) s += ",";
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(std::size_t x) const {
    if (x >= n_)
      throw error(errc::index_out_of_range,
                  "index " + std::to_string(x) + " not below " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

inline std::string mask_to_string(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (auto m : mask_members(mask)) {
    if (!first) s += ",";
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

}  // namespace chaintopo
