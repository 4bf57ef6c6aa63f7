#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chaintopo/chain_catalog.hpp"
#include "chaintopo/convexity.hpp"
#include "chaintopo/error.hpp"
#include "chaintopo/io.hpp"
#include "chaintopo/order_relations.hpp"
#include "chaintopo/poset.hpp"
#include "chaintopo/separation.hpp"
#include "chaintopo/topology.hpp"

namespace chaintopo {

inline const std::vector<std::string>& suite_claim_ids() {
  static const std::vector<std::string> ids{"cor3", "cor6",   "lemma1", "prop4", "prop5",  "remark-dm",
                                            "thm2", "thm7",   "thm8-1", "thm8-2", "thm9", "xu"};
  return ids;
}

struct SuiteConfig {
  std::size_t min_n = 1;
  std::size_t max_n = 7;
  std::uint64_t seed = 0;
  std::vector<std::string> chains = catalog_ids();
  std::vector<std::string> claims;  // empty selects every claim
  faults inject;
  std::size_t witness_cap = 8;
};

struct ClaimRecord {
  std::string id;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  std::string note;
  std::size_t witness_cap = 8;

  bool pass() const noexcept { return failures == 0; }

  void fail(std::string witness) {
    ++failures;
    if (witnesses.size() < witness_cap) witnesses.push_back(std::move(witness));
  }
  void expect(bool ok, const std::function<std::string()>& witness) {
    if (!ok) fail(witness());
  }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<ClaimRecord> claims;  // sorted by id

  bool pass() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass(); });
  }
  const ClaimRecord* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// The fixed separation matrix: (chain, A, x, upper?) spanning gap and density boundaries.
struct SeparationCase {
  std::string chain;
  std::string a;
  std::string x;
  bool upper = false;
};

inline const std::vector<SeparationCase>& separation_matrix() {
  static const std::vector<SeparationCase> cases{
      {"finite:3", "(-inf,0]", "2"},
      {"finite:5", "(-inf,2]", "4"},
      {"finite:4", "", "1"},
      {"int", "(-inf,3]", "10"},
      {"omega+1", "(-inf,5]", "omega"},
      {"rat01", "(-inf,1/2]", "3/4"},
      {"rat01", "(-inf,0]", "1/3"},
      {"dyadic01", "(-inf,1/4]", "1"},
      {"split", "(-inf,1/2:0]", "1/2:1"},
      {"split", "(-inf,0:1]", "1:0"},
      {"rat01", "[1/2,+inf)", "1/4", true},
      {"split", "[1/2:1,+inf)", "1/2:0", true},
  };
  return cases;
}

namespace detail {

inline std::string chain_label(std::size_t n) { return "C" + std::to_string(n); }

inline std::vector<ChainElement> sized_sample(const Chain& c, std::uint64_t seed, std::size_t k) {
  if (c.kind() == chain_kind::finite) k = std::min(k, c.finite_size());
  return c.sample(seed, k);
}

// Compactness witnessed without local_structure: least, or an immediate
// predecessor with nothing strictly in between.
inline bool compact_by_gap(const Chain& c, const ChainElement& x) {
  if (c.is_least(x)) return true;
  const auto p = c.immediate_predecessor(x);
  return p && c.less(*p, x) && c.between(*p, x).is_gap();
}

inline std::string base_id(const std::string& id) {
  return id.rfind("rev:", 0) == 0 ? id.substr(4) : id;
}

// ---------------------------------------------------------------- claim bodies

inline void claim_lemma1(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    const auto wb = way_below_report(p, cfg.inject);
    const auto handle = Chain::finite(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto tag = chain_label(n) + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
        if (p.lt(x, y)) rec.expect(wb.holds(x, y), [&] { return tag + ": x<y but not x<<y"; });
        if (wb.holds(x, y)) rec.expect(p.leq(x, y), [&] { return tag + ": x<<y but not x<=y"; });
        const bool fast = chain_way_below(handle, ChainElement::number(Rational(x)),
                                          ChainElement::number(Rational(y)));
        rec.expect(fast == wb.holds(x, y), [&] { return tag + ": chain fast path disagrees"; });
      }
  }
  for (const auto& id : cfg.chains) {
    ++rec.instances;
    const auto c = make_chain(id);
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < 200; ++i) {
      const auto pts = sized_sample(c, cfg.seed * 1000 + static_cast<std::uint64_t>(i), 2);
      const auto& a = pts.front();
      const auto& b = pts.back();
      const auto pick = rng() % 3;
      const auto& x = pick == 1 ? b : a;
      const auto& y = pick == 2 ? a : b;
      const bool fast = chain_way_below(c, x, y);
      const bool oracle = c.less(x, y) || (x == y && compact_by_gap(c, x));
      const auto tag = id + " (" + c.format(x) + "," + c.format(y) + ")";
      rec.expect(fast == oracle, [&] { return tag + ": fast path disagrees with gap oracle"; });
      if (c.less(x, y)) rec.expect(fast, [&] { return tag + ": x<y but not x<<y"; });
      if (fast) rec.expect(c.leq(x, y), [&] { return tag + ": x<<y but not x<=y"; });
    }
  }
}

inline void claim_thm2(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    for (std::size_t x = 0; x < n; ++x) {
      try {
        theorem2_dichotomy(p, x, cfg.inject);
      } catch (const error& e) {
        rec.fail(chain_label(n) + ": " + e.what());
      }
    }
    if (n <= 6)
      rec.expect(is_completely_distributive(p),
                 [&] { return chain_label(n) + ": not completely distributive"; });
  }
  for (auto&& [name, p] : {std::pair{"M3", shapes::m3()}, std::pair{"N5", shapes::n5()}}) {
    ++rec.instances;
    rec.expect(!is_completely_distributive(p),
               [&] { return std::string(name) + ": reported completely distributive"; });
  }
  for (const auto& id : cfg.chains) {
    ++rec.instances;
    const auto c = make_chain(id);
    for (const auto& x : sized_sample(c, cfg.seed + 17, 100)) {
      try {
        const auto d = theorem2_dichotomy(c, x);
        rec.expect((d == dichotomy::compact) == compact_by_gap(c, x),
                   [&] { return id + " " + c.format(x) + ": dichotomy disagrees with gap oracle"; });
      } catch (const error& e) {
        rec.fail(id + ": " + e.what());
      }
    }
  }
}

inline void claim_cor3(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    try {
      const auto r = corollary3_report(shapes::chain(n), cfg.inject);
      rec.expect(r.cond1 == r.cond2, [&] { return chain_label(n) + ": cond1 != cond2"; });
    } catch (const error& e) {
      rec.fail(chain_label(n) + ": " + e.what());
    }
  }
  for (const auto& id : cfg.chains) {
    ++rec.instances;
    try {
      const auto r = corollary3_report(make_chain(id), cfg.seed);
      rec.expect(r.cond1 == r.cond2, [&] { return id + ": cond1 != cond2"; });
      const auto base = base_id(id);
      if (base == "rat01" || base == "dyadic01")
        rec.expect(r.cond1 && r.cond2, [&] { return id + ": conditions should hold"; });
      if (base == "int")
        rec.expect(!r.cond1 && !r.cond2, [&] { return id + ": conditions should fail"; });
    } catch (const error& e) {
      rec.fail(id + ": " + e.what());
    }
  }
}

inline void claim_prop4(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    const auto t = canonical_topology(p, named_topology::intrinsic, cfg.inject);
    rec.expect(is_pospace(p, t), [&] { return chain_label(n) + ": intrinsic topology is not a pospace"; });
    rec.expect(separation_report(t).hausdorff, [&] { return chain_label(n) + ": not Hausdorff"; });
    rec.expect(is_topological_lattice(p, t),
               [&] { return chain_label(n) + ": not a topological lattice"; });
  }
  ++rec.instances;
  const auto c2 = shapes::chain(2);
  rec.expect(!is_pospace(c2, canonical_topology(c2, named_topology::upper)),
             [] { return std::string("C2 with the upper topology reported as a pospace"); });
}

inline void claim_prop5(const SuiteConfig& cfg, ClaimRecord& rec) {
  rec.note =
      "on finite posets these coincidences are automatic; the check validates the constructors, "
      "and the catalog chains carry the nontrivial content";
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    auto get = [&](named_topology t) { return canonical_topology(p, t, cfg.inject); };
    auto compare = [&](named_topology a, named_topology b) {
      const auto ta = get(a);
      const auto tb = get(b);
      if (topology_equal(ta, tb)) return;
      const auto d = topology_diff(ta, tb);
      std::string w = chain_label(n) + ": " + std::string(to_string(a)) + " != " + std::string(to_string(b));
      w += ": " + d.to_string();
      rec.fail(w);
    };
    compare(named_topology::upper, named_topology::scott);
    compare(named_topology::lower, named_topology::dual_scott);
    for (auto t : {named_topology::interval, named_topology::open_interval, named_topology::order,
                   named_topology::bi_scott, named_topology::lawson, named_topology::dual_lawson})
      compare(named_topology::intrinsic, t);
  }
}

inline void claim_remark_dm(const SuiteConfig& cfg, ClaimRecord& rec) {
  rec.note =
      "nonempty subsets only: the closure of the empty set is empty in the Scott topology but "
      "is the least element under the cut operator";
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    const auto scott = canonical_topology(p, named_topology::scott, cfg.inject);
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
      const auto closed = hull_mask(scott, a, hull_kind::closure);
      const auto dm = dm_closure_mask(p, a);
      rec.expect(closed == dm, [&] {
        return chain_label(n) + " " + mask_to_string(a) + ": Scott closure " + mask_to_string(closed) +
               " vs cut closure " + mask_to_string(dm);
      });
    }
  }
}

inline void claim_cor6(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    rec.expect(is_hypercontinuous(shapes::chain(n)),
               [&] { return chain_label(n) + ": not hypercontinuous"; });
  }
}

inline void claim_thm7(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    const auto r = separation_report(canonical_topology(p, named_topology::intrinsic, cfg.inject));
    rec.expect(r.all(), [&] { return chain_label(n) + ": separation " + separation_report_to_json(r).dump(); });
  }
}

inline void claim_thm8_1(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    rec.expect(has_order_convex_basis(p, canonical_topology(p, named_topology::intrinsic, cfg.inject)),
               [&] { return chain_label(n) + ": no order-convex basis"; });
  }
}

inline void claim_xu(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    rec.expect(xu_condition(shapes::chain(n)),
               [&] { return chain_label(n) + ": a closed lower set is not closed in the lower topology"; });
  }
}

inline std::optional<std::string> check_separation_case(const Chain& c, const IntervalSet& a,
                                                        const ChainElement& x, bool upper,
                                                        std::uint64_t seed) {
  const auto f = upper ? separate_from_upper(c, a, x) : separate_from_lower(c, a, x);
  const auto r = verify_separating(c, f, a, x, sized_sample(c, seed, 200));
  if (r.all()) return std::nullopt;
  return std::string("monotone=") + (r.monotone_ok ? "1" : "0") + " on_A=" + (r.zero_on_A_ok ? "1" : "0") +
         " at_x=" + (r.one_at_x_ok ? "1" : "0") + " continuous=" + (r.continuity_ok ? "1" : "0");
}

inline void claim_thm8_2(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (const auto& k : separation_matrix()) {
    ++rec.instances;
    const auto tag = k.chain + " A=" + (k.a.empty() ? std::string("{}") : k.a) + " x=" + k.x;
    try {
      const auto c = make_chain(k.chain);
      const auto a = parse_interval_list(c, k.a);
      if (auto w = check_separation_case(c, a, c.parse(k.x), k.upper, cfg.seed)) rec.fail(tag + ": " + *w);
    } catch (const error& e) {
      rec.fail(tag + ": " + e.what());
    }
  }
  // Planted fault: swapping two values must break monotonicity.
  {
    ++rec.instances;
    const auto c = Chain::rational_unit();
    const auto a = parse_interval_list(c, "(-inf,1/2]");
    const auto x = c.parse("3/4");
    const auto f = separate_from_lower(c, a, x);
    const auto bad = f.with_swapped_values(0, f.cuts().size());
    rec.expect(!verify_separating(c, bad, a, x, sized_sample(c, cfg.seed, 200)).all(),
               [] { return std::string("planted swapped-value function was accepted"); });
  }
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto c = Chain::finite(n);
    for (std::size_t b = 0; b <= n; ++b) {
      // A = {0, ..., b-1}; b = 0 is the empty set.
      std::vector<Interval> pieces;
      if (b > 0) pieces.push_back(Interval::below(ChainElement::number(Rational(b - 1)), false));
      const IntervalSet a(c, pieces);
      for (std::size_t x = b; x < n; ++x) {
        const auto tag = "finite:" + std::to_string(n) + " A=" + a.to_string() + " x=" + std::to_string(x);
        try {
          if (auto w = check_separation_case(c, a, ChainElement::number(Rational(x)), false, cfg.seed))
            rec.fail(tag + ": " + *w);
        } catch (const error& e) {
          rec.fail(tag + ": " + e.what());
        }
      }
    }
  }
}

// Random finite union of intervals with endpoints drawn from the interior of a pool.
inline IntervalSet random_interval_set(const Chain& c, const std::vector<ChainElement>& pool,
                                       std::mt19937_64& rng) {
  const std::size_t lo = pool.size() >= 3 ? 1 : 0;
  const std::size_t hi = pool.size() >= 3 ? pool.size() - 2 : pool.size() - 1;
  const std::size_t span = hi - lo + 1;
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % 4);
  std::vector<Interval> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto i = lo + static_cast<std::size_t>(rng() % span);
    auto j = lo + static_cast<std::size_t>(rng() % span);
    if (i > j) std::swap(i, j);
    Interval iv;
    if (rng() % 8 != 0) {
      iv.lower = pool[i];
      iv.lower_open = rng() % 2 == 0;
    }
    if (rng() % 8 != 0) {
      iv.upper = pool[j];
      iv.upper_open = rng() % 2 == 0;
    }
    out.push_back(std::move(iv));
  }
  return IntervalSet(c, std::move(out));
}

// Probe points: the pool, every endpoint with its neighbours, and a witness
// strictly between any two consecutive probes that are not adjacent.
inline std::vector<ChainElement> probes_for(const Chain& c, const IntervalSet& s,
                                            std::vector<ChainElement> pool) {
  for (const auto& i : s.intervals())
    for (const auto& e : {i.lower, i.upper})
      if (e) {
        pool.push_back(*e);
        if (auto p = c.immediate_predecessor(*e)) pool.push_back(*p);
        if (auto q = c.immediate_successor(*e)) pool.push_back(*q);
      }
  auto less = [&](const auto& u, const auto& v) { return c.less(u, v); };
  std::sort(pool.begin(), pool.end(), less);
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<ChainElement> out;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (k > 0) {
      const auto b = c.between(pool[k - 1], pool[k]);
      if (!b.is_gap()) out.push_back(*b.witness);
    }
    out.push_back(pool[k]);
  }
  return out;
}

// Integer chain oracle: materialize a window around every endpoint and compare
// maximal runs of members with the components, using plain integer arithmetic.
inline void integer_window_check(const Chain&, const IntervalSet& s, const std::vector<IntervalSet>& components,
                                 const std::string& tag, ClaimRecord& rec) {
  auto as_int = [](const ChainElement& e) { return static_cast<long long>(boost::multiprecision::numerator(e.value)); };
  long long lo = -3, hi = 3;
  bool any = false;
  for (const auto& i : s.intervals())
    for (const auto& e : {i.lower, i.upper})
      if (e) {
        const auto v = as_int(*e);
        lo = any ? std::min(lo, v - 3) : v - 3;
        hi = any ? std::max(hi, v + 3) : v + 3;
        any = true;
      }
  auto inside = [&](const Interval& i, long long v) {
    if (i.lower && (i.lower_open ? v <= as_int(*i.lower) : v < as_int(*i.lower))) return false;
    if (i.upper && (i.upper_open ? v >= as_int(*i.upper) : v > as_int(*i.upper))) return false;
    return true;
  };
  std::vector<std::pair<long long, long long>> runs;
  for (long long v = lo; v <= hi; ++v) {
    const bool member = std::any_of(s.intervals().begin(), s.intervals().end(),
                                    [&](const Interval& i) { return inside(i, v); });
    if (!member) continue;
    if (!runs.empty() && runs.back().second == v - 1)
      runs.back().second = v;
    else
      runs.emplace_back(v, v);
  }
  rec.expect(runs.size() == components.size(), [&] {
    return tag + ": window shows " + std::to_string(runs.size()) + " runs, got " +
           std::to_string(components.size()) + " components";
  });
  if (runs.size() != components.size()) return;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto& piece = components[k].intervals().front();
    bool same = true;
    for (long long v = lo; v <= hi; ++v)
      same = same && inside(piece, v) == (v >= runs[k].first && v <= runs[k].second);
    rec.expect(same, [&] { return tag + ": component " + components[k].to_string() + " differs from its run"; });
  }
}

inline void claim_thm9(const SuiteConfig& cfg, ClaimRecord& rec) {
  for (const auto& id : cfg.chains) {
    ++rec.instances;
    const auto c = make_chain(id);
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 500; ++trial) {
      const auto pool = sized_sample(c, cfg.seed * 7919 + static_cast<std::uint64_t>(trial), 10);
      const auto s = random_interval_set(c, pool, rng);
      const auto components = convex_components(s, cfg.inject);
      const auto probes = probes_for(c, s, pool);
      const auto tag = id + " " + s.to_string();
      std::size_t runs = 0;
      bool inside = false;
      std::vector<std::size_t> owner(probes.size(), components.size());
      for (std::size_t k = 0; k < probes.size(); ++k) {
        const bool member = interval_member(s, probes[k]);
        if (member && !inside) ++runs;
        inside = member;
        std::size_t hits = 0;
        for (std::size_t m = 0; m < components.size(); ++m)
          if (interval_member(components[m], probes[k])) {
            ++hits;
            owner[k] = m;
          }
        rec.expect(hits == (member ? 1u : 0u), [&] {
          return tag + ": point " + c.format(probes[k]) + " lies in " + std::to_string(hits) + " components";
        });
      }
      // Each component occupies one contiguous run of probes.
      for (std::size_t m = 0; m < components.size(); ++m) {
        std::size_t first = probes.size(), last = 0, count = 0;
        for (std::size_t k = 0; k < probes.size(); ++k)
          if (owner[k] == m) {
            first = std::min(first, k);
            last = k;
            ++count;
          }
        rec.expect(count > 0 && last - first + 1 == count, [&] {
          return tag + ": component " + components[m].to_string() + " is not convex over the probes";
        });
      }
      rec.expect(runs == components.size(), [&] {
        return tag + ": " + std::to_string(components.size()) + " components but " + std::to_string(runs) +
               " maximal runs";
      });

      if (id == "int") integer_window_check(c, s, components, tag, rec);
    }
  }
  for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) {
    ++rec.instances;
    const auto p = shapes::chain(n);
    const auto t = canonical_topology(p, named_topology::intrinsic, cfg.inject);
    for (auto u : t.opens()) {
      const auto d = decompose_open_finite(p, t, ElementSet(n, u));
      // Oracle: the maximal convex piece through x collects every y whose
      // closed interval with x stays inside the set.
      std::vector<std::uint64_t> expected;
      for (auto x : mask_members(u)) {
        std::uint64_t piece = 0;
        for (auto y : mask_members(u)) {
          const auto lo = std::min(x, y), hi = std::max(x, y);
          const auto between = full_mask(hi + 1) & ~full_mask(lo);
          if ((between & ~u) == 0) piece |= bit(y);
        }
        if (std::find(expected.begin(), expected.end(), piece) == expected.end()) expected.push_back(piece);
      }
      std::vector<std::uint64_t> got;
      for (const auto& piece : d.pieces) got.push_back(piece.bits());
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      const auto tag = chain_label(n) + " " + mask_to_string(u);
      rec.expect(got == expected, [&] { return tag + ": pieces differ from the maximal convex subsets"; });
      rec.expect(d.pieces_open && d.unique, [&] { return tag + ": decomposition not open or not unique"; });
    }
  }
}

}  // namespace detail

/// Runs every selected claim over finite chains min_n..max_n and the selected
/// catalog chains. Records come back sorted by claim id.
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.min_n == 0 || cfg.min_n > cfg.max_n)
    throw error(errc::invalid_argument, "empty chain size range");
  if (cfg.max_n > default_hereditary_cap)
    throw error(errc::cap_exceeded, "suite size " + std::to_string(cfg.max_n) + " exceeds cap " +
                                        std::to_string(default_hereditary_cap));
  for (const auto& id : cfg.chains) make_chain(id);
  for (const auto& id : cfg.claims)
    if (std::find(suite_claim_ids().begin(), suite_claim_ids().end(), id) == suite_claim_ids().end())
      throw error(errc::invalid_argument, "unknown claim id '" + id + "'");

  using body = void (*)(const SuiteConfig&, ClaimRecord&);
  static const std::map<std::string, body> bodies{
      {"cor3", detail::claim_cor3},     {"cor6", detail::claim_cor6},   {"lemma1", detail::claim_lemma1},
      {"prop4", detail::claim_prop4},   {"prop5", detail::claim_prop5}, {"remark-dm", detail::claim_remark_dm},
      {"thm2", detail::claim_thm2},     {"thm7", detail::claim_thm7},   {"thm8-1", detail::claim_thm8_1},
      {"thm8-2", detail::claim_thm8_2}, {"thm9", detail::claim_thm9},   {"xu", detail::claim_xu},
  };
  SuiteReport report{cfg, {}};
  for (const auto& [id, run] : bodies) {
    if (!cfg.claims.empty() && std::find(cfg.claims.begin(), cfg.claims.end(), id) == cfg.claims.end())
      continue;
    ClaimRecord rec;
    rec.id = id;
    rec.witness_cap = cfg.witness_cap;
    try {
      run(cfg, rec);
    } catch (const error& e) {
      rec.fail(id + ": " + std::string(to_string(e.code())) + ": " + e.what());
    }
    if (rec.instances == 0) rec.fail("no instances exercised the claim");
    report.claims.push_back(std::move(rec));
  }
  return report;
}

inline json suite_report_to_json(const SuiteReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json item{{"id", c.id},
              {"instances", c.instances},
              {"verdict", c.pass() ? "pass" : "fail"},
              {"failures", c.failures},
              {"witnesses", c.witnesses}};
    if (!c.note.empty()) item["note"] = c.note;
    claims.push_back(std::move(item));
  }
  std::vector<std::string> faults_on;
  if (r.config.inject.scott) faults_on.push_back("scott");
  if (r.config.inject.way_below) faults_on.push_back("way_below");
  if (r.config.inject.normalize) faults_on.push_back("normalize");
  return json{{"config",
               {{"min_n", r.config.min_n},
                {"max_n", r.config.max_n},
                {"seed", r.config.seed},
                {"chains", r.config.chains},
                {"inject", faults_on}}},
              {"claims", claims},
              {"verdict", r.pass() ? "pass" : "fail"}};
}

}  // namespace chaintopo
