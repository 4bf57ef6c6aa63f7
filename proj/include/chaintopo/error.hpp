#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace chaintopo {

enum class errc {
  axiom_violation,
  index_out_of_range,
  cap_exceeded,
  not_a_chain,
  not_a_lattice,
  carrier_mismatch,
  unknown_catalog_id,
  malformed_element,
  not_strictly_ordered,
  sample_too_large,
  undecidable_query,
  not_open,
  not_lower_set,
  point_inside_set,
  not_closed,
  unknown_target,
  parse_error,
  schema_error,
  invalid_argument,
  invariant_violation,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::axiom_violation: return "AxiomViolation";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_a_chain: return "NotAChain";
    case errc::not_a_lattice: return "NotALattice";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::unknown_catalog_id: return "UnknownCatalogId";
    case errc::malformed_element: return "MalformedElement";
    case errc::not_strictly_ordered: return "NotStrictlyOrdered";
    case errc::sample_too_large: return "SampleTooLarge";
    case errc::undecidable_query: return "UndecidableQuery";
    case errc::not_open: return "NotOpen";
    case errc::not_lower_set: return "NotLowerSet";
    case errc::point_inside_set: return "PointInsideA";
    case errc::not_closed: return "NotClosed";
    case errc::unknown_target: return "UnknownTarget";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

enum class axiom { reflexive, antisymmetric, transitive };

constexpr std::string_view to_string(axiom a) noexcept {
  switch (a) {
    case axiom::reflexive: return "reflexive";
    case axiom::antisymmetric: return "antisymmetric";
    case axiom::transitive: return "transitive";
  }
  return "?";
}

class axiom_violation : public error {
 public:
  axiom_violation(axiom which, std::size_t x, std::size_t y)
      : error(errc::axiom_violation,
              std::string(to_string(which)) + " fails at (" + std::to_string(x) + "," +
                  std::to_string(y) + ")"),
        which_(which),
        witness_(x, y) {}

  axiom which() const noexcept { return which_; }
  std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

 private:
  axiom which_;
  std::pair<std::size_t, std::size_t> witness_;
};

/// Fault-injection switches used by the mutation self-test of the verification suite.
struct faults {
  bool scott = false;
  bool way_below = false;
  bool normalize = false;

  bool any() const noexcept { return scott || way_below || normalize; }
};

}  // namespace chaintopo
