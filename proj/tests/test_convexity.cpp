#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace chaintopo;

namespace {

IntervalSet lit(const Chain& c, const char* text) { return parse_interval_list(c, text); }

}  // namespace

TEST_CASE("membership") {
  const auto r = Chain::rational_unit();
  const auto open = lit(r, "(0,1)");
  CHECK(interval_member(open, r.parse("1/2")));
  CHECK_FALSE(interval_member(open, r.parse("1")));
  CHECK(interval_member(lit(Chain::integers(), "[1,3]"), Chain::integers().parse("3")));
  CHECK_THROWS_AS(interval_member(open, r.parse("2")), error);
}

TEST_CASE("normalization merges across gaps and shared closed points") {
  const auto z = Chain::integers();
  CHECK(normalize(lit(z, "[1,3],[4,6]")).to_string() == "[1,6]");
  CHECK(normalize(lit(z, "[5,6],[1,3]")).to_string() == "[1,3],[5,6]");
  const auto r = Chain::rational_unit();
  CHECK(normalize(lit(r, "(0,1/2),(1/2,1)")).intervals().size() == 2);
  CHECK(normalize(lit(r, "(0,1/2],(1/2,1)")).to_string() == "(0,1)");
  CHECK(normalize(lit(r, "(1/2,1/2)")).intervals().empty());
  CHECK(normalize(lit(z, "(3,4)")).intervals().empty());
  const auto f = Chain::finite(5);
  CHECK(normalize(lit(f, "(0,4)")).to_string() == "[1,3]");
}

TEST_CASE("the normalize fault leaves gap-adjacent pieces apart") {
  const auto z = Chain::integers();
  CHECK(normalize(lit(z, "[1,3],[4,6]"), faults{false, false, true}).intervals().size() == 2);
}

TEST_CASE("convex components") {
  const auto r = Chain::rational_unit();
  CHECK(convex_components(lit(r, "(0,1/2),(1/2,1)")).size() == 2);
  const auto s = Chain::split();
  const auto whole = convex_components(lit(s, "(-inf,1/3:0],[1/3:1,+inf)"));
  REQUIRE(whole.size() == 1);
  CHECK(whole.front().to_string() == "(-inf,+inf)");
  const auto z = Chain::integers();
  const auto two = convex_components(lit(z, "[1,3],[5,6]"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "[1,3]");
  CHECK(two[1].to_string() == "[5,6]");
}

TEST_CASE("order convexity verdicts") {
  const auto r = Chain::rational_unit();
  CHECK(is_order_convex(lit(r, "[0,1/3)")).convex);
  const auto v = is_order_convex(lit(r, "(0,1/2),(1/2,1)"));
  CHECK_FALSE(v.convex);
  CHECK(v.witness == std::optional<ChainElement>(r.parse("1/2")));
  CHECK(is_order_convex(lit(Chain::integers(), "[1,3],[4,6]")).convex);
  const auto gap = is_order_convex(lit(Chain::integers(), "[1,3],[6,8]"));
  CHECK_FALSE(gap.convex);
  REQUIRE(gap.witness.has_value());
  CHECK(gap.witness->value > 3);
  CHECK(gap.witness->value < 6);
}

TEST_CASE("canonical forms are idempotent and disjoint on random inputs") {
  std::mt19937_64 rng(21);
  for (const auto& id : catalog_ids()) {
    const auto c = make_chain(id);
    for (int trial = 0; trial < 100; ++trial) {
      const auto pool = c.sample(static_cast<std::uint64_t>(trial), id == "finite:5" ? 5 : 8);
      const auto s = detail::random_interval_set(c, pool, rng);
      const auto n1 = normalize(s);
      const auto n2 = normalize(n1);
      CHECK(n1.to_string() == n2.to_string());
      for (const auto& x : detail::probes_for(c, s, pool)) CHECK(interval_member(s, x) == interval_member(n1, x));
    }
  }
}

TEST_CASE("finite open decomposition") {
  const auto c6 = shapes::chain(6);
  const auto t6 = canonical_topology(c6, named_topology::intrinsic);
  const auto d = decompose_open_finite(c6, t6, ElementSet(6, {0, 1, 3, 4}));
  CHECK(d.pieces == std::vector{ElementSet(6, {0, 1}), ElementSet(6, {3, 4})});
  CHECK(d.pieces_open);
  CHECK(d.unique);
  const auto c4 = shapes::chain(4);
  const auto t4 = canonical_topology(c4, named_topology::intrinsic);
  CHECK(decompose_open_finite(c4, t4, ElementSet(4)).pieces.empty());
  CHECK(decompose_open_finite(c4, t4, ElementSet::full(4)).pieces == std::vector{ElementSet::full(4)});
  const auto u4 = canonical_topology(c4, named_topology::upper);
  try {
    decompose_open_finite(c4, u4, ElementSet(4, {0}));
    FAIL("expected NotOpen");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_open);
  }
  try {
    decompose_open_finite(shapes::m3(), Topology::discrete(5), ElementSet(5, {0}));
    FAIL("expected NotAChain");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_chain);
  }
}

TEST_CASE("interval literal parsing") {
  const auto r = Chain::rational_unit();
  CHECK(lit(r, "(-inf,1/2]").to_string() == "(-inf,1/2]");
  CHECK(lit(r, " [0,1/4) , (1/2,+inf)").intervals().size() == 2);
  CHECK_THROWS_AS(lit(r, "[0,1/2"), error);
  CHECK_THROWS_AS(lit(r, "[-inf,1/2]"), error);
}
