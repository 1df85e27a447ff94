#include <doctest.h>

#include "corpus.hpp"
#include "unknot/diagram.hpp"
#include "unknot/invariants.hpp"

using namespace unknot;

namespace {
const char* kTrefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
}

TEST_CASE("parse accepts both bracket styles and label bases") {
  auto a = parse_pd(kTrefoil);
  auto b = parse_pd("[(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]");
  auto c = parse_pd("[[0,3,1,4],[2,5,3,0],[4,1,5,2]]");
  CHECK(a.size() == 3);
  CHECK(a.label_base == 1);
  CHECK(c.label_base == 0);
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) == canonical_code(c));
  CHECK(parse_pd("[]").empty());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_pd("[[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("hello"), ParseError);
  try {
    parse_pd("[[1,2,3,x]]");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("validation rejects labels that do not appear twice") {
  CHECK_THROWS_AS(parse_pd("[[1,2,3,4]]"), ValidationError);
}

TEST_CASE("components and knot requirement") {
  auto hopf = parse_pd("[[1,3,2,4],[3,1,4,2]]");
  CHECK(component_count(hopf) == 2);
  CHECK_THROWS_AS(require_knot(hopf), MultiComponentError);
  CHECK(component_count(parse_pd(kTrefoil)) == 1);
}

TEST_CASE("crossing signs follow orientation") {
  auto left = parse_pd(kTrefoil);
  for (int s : crossing_signs(left)) CHECK(s == -1);
  for (int s : crossing_signs(mirror(left))) CHECK(s == 1);
  auto flipped = change_crossing(left, 1);
  auto signs = crossing_signs(flipped);
  CHECK(signs[0] == -1);
  CHECK(signs[1] == 1);
  CHECK(change_crossing(flipped, 1) == left);
}

TEST_CASE("serialisation round trips") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto d = corpus::random_knot(s, 8, 6, 14);
    auto again = parse_pd(serialize_pd(d));
    CHECK(again == d);
    CHECK(parse_pd(serialize_pd(d, BracketStyle::Round)) == d);
  }
}

TEST_CASE("canonical code ignores relabelling and basepoint") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto d = corpus::random_knot(s, 8, 4, 14);
    CHECK(canonical_code(relabeled(d)) == canonical_code(d));
  }
  auto t = parse_pd(kTrefoil);
  CHECK(canonical_code(t) != canonical_code(mirror(t)));
}

TEST_CASE("gauss code lists every crossing twice") {
  auto d = corpus::random_knot(7, 9, 3, 14);
  auto g = to_gauss_code(d);
  CHECK(static_cast<int>(g.size()) == 2 * d.size());
  std::vector<int> seen(d.size());
  for (auto& e : g) seen[e.crossing] += e.over ? 1 : 10;
  for (int v : seen) CHECK(v == 11);
}

TEST_CASE("connected sum and overlay sum add crossings and stay knots") {
  auto t = parse_pd(kTrefoil);
  auto s = connected_sum(t, 0, mirror(t), 2);
  CHECK(s.size() == 6);
  CHECK(component_count(s) == 1);
  auto o = overlay_sum(t, t, OverlayConfig{2, 400, 0, 0});
  CHECK(o.size() > 6);
  CHECK(o.size() <= 10);
  CHECK(component_count(o) == 1);
  CHECK_THROWS_AS(overlay_sum(t, t, OverlayConfig{2, 7, 0, 0}), CrossingBudgetError);
}

TEST_CASE("overlay sum simplifies back and degenerates to the plain sum") {
  auto t = parse_pd(kTrefoil);
  auto o = overlay_sum(t, t);
  CHECK(level_simplify(o, 0).final.size() == 6);
  CHECK(jones(o) == jones(t) * jones(t));
  CHECK(overlay_sum(t, t, OverlayConfig{0, 400, 1, 2}) == connected_sum(t, 1, t, 2));
}

TEST_CASE("writhe moves by twice the sign under a crossing change") {
  auto d = corpus::random_knot(21, 9, 5, 14);
  auto signs = crossing_signs(d);
  for (int i = 0; i < d.size(); ++i) CHECK(writhe(change_crossing(d, i)) == writhe(d) - 2 * signs[i]);
  for (int i = 0; i < d.size(); ++i) CHECK(mirror(change_crossing(d, i)) == change_crossing(mirror(d), i));
  CHECK(mirror(mirror(d)) == d);
}
