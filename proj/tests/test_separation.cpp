#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace chaintopo;

namespace {

IntervalSet lit(const Chain& c, const char* text) { return parse_interval_list(c, text); }

std::vector<ChainElement> samples(const Chain& c, std::size_t k) {
  if (c.kind() == chain_kind::finite) k = std::min(k, c.finite_size());
  return c.sample(0, k);
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return errc::invariant_violation;
}

}  // namespace

TEST_CASE("indicator on a finite chain") {
  const auto c = Chain::finite(3);
  const auto a = lit(c, "(-inf,0]");
  const auto f = separate_from_lower(c, a, c.parse("2"));
  CHECK(evaluate(f, c.parse("0")) == 0);
  CHECK(evaluate(f, c.parse("1")) == 1);
  CHECK(evaluate(f, c.parse("2")) == 1);
  CHECK(verify_separating(c, f, a, c.parse("2"), samples(c, 3)).all());
}

TEST_CASE("rational ray below one half") {
  const auto r = Chain::rational_unit();
  const auto a = lit(r, "(-inf,1/2]");
  const auto x = r.parse("3/4");
  const auto f = separate_from_lower(r, a, x);
  CHECK(f.how() == construction::density_ramp);
  CHECK(evaluate(f, r.parse("1/2")) == 0);
  CHECK(evaluate(f, r.parse("1/4")) == 0);
  CHECK(evaluate(f, x) == 1);
  CHECK(evaluate(f, r.parse("1")) == 1);
  CHECK(verify_separating(r, f, a, x, r.sample(0, 200)).all());

  // No jumps: on a grid of spacing 1/4096 neighbouring values differ by little.
  Rational worst = 0;
  Rational prev = evaluate(f, r.parse("1/2"));
  for (int k = 1; k <= 1024; ++k) {
    const auto y = ChainElement::number(Rational(1, 2) + Rational(k, 4096));
    const auto v = evaluate(f, y);
    CHECK(v >= prev);
    worst = std::max(worst, Rational(v - prev));
    prev = v;
  }
  CHECK(worst <= Rational(1, 256));
}

TEST_CASE("split chain gap gives a two-valued step") {
  const auto s = Chain::split();
  const auto a = lit(s, "(-inf,1/3:0]");
  const auto x = s.parse("1/3:1");
  const auto f = separate_from_lower(s, a, x);
  CHECK(f.how() == construction::gap_step);
  for (const auto& y : s.sample(4, 50)) {
    const auto v = evaluate(f, y);
    CHECK((v == 0 || v == 1));
  }
  CHECK(evaluate(f, s.parse("1/3:0")) == 0);
  CHECK(evaluate(f, x) == 1);
  CHECK(verify_separating(s, f, a, x, s.sample(0, 200)).all());
}

TEST_CASE("the fixed separation matrix") {
  for (const auto& k : separation_matrix()) {
    INFO(k.chain << " " << k.a << " " << k.x);
    const auto c = make_chain(k.chain);
    const auto a = parse_interval_list(c, k.a);
    const auto x = c.parse(k.x);
    const auto f = k.upper ? separate_from_upper(c, a, x) : separate_from_lower(c, a, x);
    CHECK(verify_separating(c, f, a, x, samples(c, 200)).all());
    CHECK(evaluate(f, x) == (k.upper ? 0 : 1));
  }
}

TEST_CASE("planted faults are rejected") {
  const auto c = Chain::finite(3);
  const auto a = lit(c, "(-inf,0]");
  const auto x = c.parse("2");
  const auto f = separate_from_lower(c, a, x);
  const auto bad = f.with_swapped_values(0, f.cuts().size());
  CHECK_FALSE(verify_separating(c, bad, a, x, samples(c, 3)).monotone_ok);

  // A jump at a point with no gap next to it is not continuous.
  const auto r = Chain::rational_unit();
  const SeparatingFunction jump(r, {Cut{r.parse("1/2"), cut_side::at_or_below, Rational(0), segment_shape::step}},
                                Rational(1), construction::gap_step);
  const auto check = verify_separating(r, jump, lit(r, "(-inf,1/2]"), r.parse("3/4"), r.sample(0, 200));
  CHECK(check.monotone_ok);
  CHECK(check.zero_on_A_ok);
  CHECK_FALSE(check.continuity_ok);
}

TEST_CASE("preconditions") {
  const auto r = Chain::rational_unit();
  CHECK(code_of([&] { separate_from_lower(r, lit(r, "(-inf,1/2]"), r.parse("1/4")); }) == errc::point_inside_set);
  CHECK(code_of([&] { separate_from_lower(r, lit(r, "[1/4,1/2]"), r.parse("3/4")); }) == errc::not_lower_set);
  CHECK(code_of([&] { separate_from_lower(r, lit(r, "(-inf,1/2)"), r.parse("3/4")); }) == errc::not_closed);
  // An open end next to a gap is closed at the neighbour, so it is accepted.
  const auto z = Chain::integers();
  CHECK_NOTHROW(separate_from_lower(z, lit(z, "(-inf,3)"), z.parse("5")));
  CHECK(code_of([&] {
          SeparatingFunction(r, {Cut{r.parse("1/2"), cut_side::at_or_below, Rational(2), segment_shape::step}},
                             Rational(1), construction::gap_step);
        }) == errc::invalid_argument);
}

TEST_CASE("empty lower set gives a constant") {
  const auto c = Chain::finite(4);
  const auto f = separate_from_lower(c, IntervalSet(c), c.parse("1"));
  CHECK(f.how() == construction::constant);
  for (const auto& y : samples(c, 4)) CHECK(evaluate(f, y) == 1);
}
