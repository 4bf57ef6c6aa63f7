#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace chaintopo;

namespace {

std::uint64_t m(std::initializer_list<std::size_t> xs) {
  std::uint64_t out = 0;
  for (auto x : xs) out |= bit(x);
  return out;
}

oracle::Family fam(std::initializer_list<std::uint64_t> xs) { return oracle::Family(xs); }

Topology upper(std::size_t n) { return canonical_topology(shapes::chain(n), named_topology::upper); }
Topology lower(std::size_t n) { return canonical_topology(shapes::chain(n), named_topology::lower); }

}  // namespace

TEST_CASE("generation from a subbasis") {
  CHECK(oracle::family_of(generate_topology(3, {m({1, 2}), m({2})})) ==
        fam({0, m({2}), m({1, 2}), m({0, 1, 2})}));
  CHECK(oracle::family_of(generate_topology(2, std::vector<std::uint64_t>{})) == fam({0, m({0, 1})}));
  CHECK(generate_topology(2, {m({0}), m({1})}) == Topology::discrete(2));
  CHECK(Topology::discrete(3).size() == 8);
}

TEST_CASE("generation agrees with the fixpoint oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
    std::vector<std::uint64_t> sub;
    const std::size_t k = static_cast<std::size_t>(rng() % 5);
    for (std::size_t i = 0; i < k; ++i) sub.push_back(rng() & full_mask(n));
    const auto t = generate_topology(n, sub);
    CHECK(oracle::family_of(t) == oracle::close_family(n, oracle::Family(sub.begin(), sub.end())));
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t smallest = full_mask(n);
      for (auto u : t.opens())
        if (u & bit(x)) smallest &= u;
      CHECK(t.neighbourhood(x) == smallest);
    }
  }
}

TEST_CASE("from_family validates") {
  CHECK_THROWS_AS(Topology::from_family(2, {0, m({0})}), error);
  CHECK_THROWS_AS(Topology::from_family(3, {0, m({0}), m({1}), m({0, 1, 2})}), error);
  CHECK(Topology::from_family(2, {m({0, 1}), 0}) == Topology::indiscrete(2));
}

TEST_CASE("join") {
  CHECK(join_topologies(upper(3), lower(3)) == Topology::discrete(3));
  CHECK(join_topologies(upper(4), Topology::indiscrete(4)) == upper(4));
  CHECK(join_topologies(upper(4), upper(4)) == upper(4));
  try {
    join_topologies(upper(3), upper(4));
    FAIL("expected CarrierMismatch");
  } catch (const error& e) {
    CHECK(e.code() == errc::carrier_mismatch);
  }
}

TEST_CASE("named topologies on chains") {
  const auto c3 = shapes::chain(3);
  CHECK(oracle::family_of(upper(3)) == fam({0, m({2}), m({1, 2}), m({0, 1, 2})}));
  CHECK(canonical_topology(c3, named_topology::scott) == upper(3));
  CHECK(canonical_topology(c3, named_topology::intrinsic) == Topology::discrete(3));
  const auto c6 = shapes::chain(6);
  CHECK(topology_equal(canonical_topology(c6, named_topology::scott), upper(6)));
  CHECK_FALSE(topology_equal(upper(2), lower(2)));
  CHECK(topology_equal(upper(5), upper(5)));
  for (auto name : all_named_topologies) CHECK(parse_named_topology(to_string(name)) == name);
  CHECK_THROWS_AS(parse_named_topology("zariski"), error);
}

TEST_CASE("Scott topology opens are the upper sets inaccessible by directed suprema") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    const auto [p, rel] = oracle::random_poset(rng, n);
    oracle::Family expected;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
      bool ok = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (oracle::in(u, x) && rel[x][y] && !oracle::in(u, y)) ok = false;
      for (std::uint64_t d = 1; d < (std::uint64_t{1} << n) && ok; ++d) {
        if (!oracle::directed(rel, d)) continue;
        const auto s = oracle::sup(rel, d);
        if (s && oracle::in(u, *s) && (d & u) == 0) ok = false;
      }
      if (ok) expected.insert(u);
    }
    CHECK(oracle::family_of(canonical_topology(p, named_topology::scott)) == expected);
  }
}

TEST_CASE("the Scott fault changes the Scott topology") {
  const auto c2 = shapes::chain(2);
  CHECK_FALSE(topology_equal(canonical_topology(c2, named_topology::scott, faults{true, false, false}),
                             canonical_topology(c2, named_topology::scott)));
}

TEST_CASE("interior, closure and Scott closure") {
  const auto u3 = upper(3);
  CHECK(hull_mask(u3, m({1, 2}), hull_kind::interior) == m({1, 2}));
  CHECK(hull_mask(u3, m({0, 1}), hull_kind::interior) == 0);
  CHECK(hull_mask(u3, m({2}), hull_kind::closure) == m({0, 1, 2}));
  const auto c4 = shapes::chain(4);
  CHECK(scott_closure(c4, ElementSet(4, {1, 2})) == ElementSet(4, {0, 1, 2}));
  CHECK(scott_closure(c4, ElementSet(4, {3})) == ElementSet::full(4));
  CHECK(scott_closure(c4, ElementSet(4)) == ElementSet(4));
}

TEST_CASE("subspace and product") {
  CHECK(subspace_topology(Topology::discrete(3), ElementSet(3, {0, 2})) == Topology::discrete(2));
  CHECK(product_topology(Topology::indiscrete(2), Topology::indiscrete(2)) == Topology::indiscrete(4));

  // Oracle: unions of open rectangles, closed under the fixpoint.
  const auto u2 = upper(2);
  oracle::Family rects;
  for (auto a : u2.opens())
    for (auto b : u2.opens()) {
      std::uint64_t r = 0;
      for (auto i : mask_members(a))
        for (auto j : mask_members(b)) r |= bit(product_index(i, j, 2));
      rects.insert(r);
    }
  const auto product = product_topology(u2, u2);
  CHECK(oracle::family_of(product) == oracle::close_family(4, rects));
  CHECK(product.size() == 6);

  const auto u3 = upper(3);
  const auto sub = subspace_topology(u3, ElementSet(3, {0, 2}));
  CHECK(oracle::family_of(sub) == fam({0, m({1}), m({0, 1})}));
}

TEST_CASE("separation report") {
  const auto i5 = canonical_topology(shapes::chain(5), named_topology::intrinsic);
  CHECK(separation_report(i5).all());
  const auto r = separation_report(upper(2));
  CHECK_FALSE(r.t1);
  CHECK_FALSE(r.hausdorff);
  const auto ind = separation_report(Topology::indiscrete(2));
  CHECK(ind.normal);
  CHECK_FALSE(ind.t1);
  CHECK_THROWS_AS(separation_report(Topology::discrete(9)), error);
}

TEST_CASE("normality agrees with the definition on every topology of up to four points") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& f : oracle::all_topologies(n)) {
      const auto t = Topology::from_family(n, std::vector<std::uint64_t>(f.begin(), f.end()));
      CHECK(!normality_witness(t, t.carrier_mask()).has_value() == oracle::normal(n, f));
    }
}

TEST_CASE("pospace, topological lattice and order-convex bases") {
  const auto c2 = shapes::chain(2);
  CHECK(is_pospace(c2, canonical_topology(c2, named_topology::intrinsic)));
  CHECK_FALSE(is_pospace(c2, upper(2)));
  CHECK(pospace_witness(c2, upper(2)) == std::optional<std::pair<std::size_t, std::size_t>>({1, 0}));
  const auto c1 = shapes::chain(1);
  CHECK(is_pospace(c1, Topology::indiscrete(1)));

  const auto c4 = shapes::chain(4);
  CHECK(is_topological_lattice(c4, canonical_topology(c4, named_topology::intrinsic)));
  CHECK(is_topological_lattice(c4, Topology::discrete(4)));
  CHECK(is_topological_lattice(c2, Topology::indiscrete(2)));
  // Upper topology on C2: join and meet are monotone, so preimages of upper sets are upper.
  CHECK(is_topological_lattice(c2, upper(2)));
  CHECK_THROWS_AS(is_topological_lattice(shapes::bowtie(), Topology::discrete(4)), error);

  const auto c5 = shapes::chain(5);
  CHECK(has_order_convex_basis(c5, canonical_topology(c5, named_topology::intrinsic)));
  CHECK(has_order_convex_basis(c5, Topology::discrete(5)));
  // M3 with the bi-Scott topology, against a direct basis search.
  const auto m3 = shapes::m3();
  const auto bs = canonical_topology(m3, named_topology::bi_scott);
  const auto rel = oracle::relation_of(m3);
  bool expected = true;
  for (auto u : bs.opens())
    for (auto x : mask_members(u)) {
      bool found = false;
      for (auto v : bs.opens())
        if ((v & bit(x)) && (v & ~u) == 0 && oracle::ordered_convex(rel, v)) found = true;
      expected = expected && found;
    }
  CHECK(has_order_convex_basis(m3, bs) == expected);
}

TEST_CASE("order-topology condition for lower sets") {
  CHECK(xu_condition(shapes::chain(6)));
  CHECK(xu_condition(shapes::chain(1)));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
    const auto [p, rel] = oracle::random_poset(rng, n);
    if (is_chain(p)) CHECK(xu_condition(p));
    // Independent evaluation from the two families.
    const auto i = oracle::family_of(canonical_topology(p, named_topology::intrinsic));
    const auto l = oracle::family_of(canonical_topology(p, named_topology::lower));
    bool expected = true;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      if (is_lower_set_mask(p, s) && i.count(s) && !l.count(s)) expected = false;
    CHECK(xu_condition(p) == expected);
  }
}

TEST_CASE("topology diff names the differing opens") {
  const auto d = topology_diff(upper(2), lower(2));
  CHECK(d.only_left == std::vector<std::uint64_t>{m({1})});
  CHECK(d.only_right == std::vector<std::uint64_t>{m({0})});
}
