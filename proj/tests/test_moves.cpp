#include <doctest.h>

#include "corpus.hpp"
#include "unknot/appendix_data.hpp"
#include "unknot/invariants.hpp"
#include "unknot/moves.hpp"

using namespace unknot;

namespace {
const char* kTrefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";

std::vector<Move> of_kind(const Diagram& d, MoveKind k) { return enumerate_moves(d, kind_bit(k)); }
}  // namespace

TEST_CASE("kink and bigon fixtures") {
  auto kink = parse_pd("[[0,0,1,1]]");
  auto r1 = of_kind(kink, MoveKind::R1Minus);
  REQUIRE(r1.size() == 1);
  CHECK(apply_move(kink, r1[0]).empty());

  // Two kinks in a row: two R1- sites.
  auto two = parse_pd("[[0,0,1,3],[1,2,2,3]]");
  CHECK(of_kind(two, MoveKind::R1Minus).size() >= 1);

  auto t = parse_pd(kTrefoil);
  CHECK(of_kind(t, MoveKind::R1Minus).empty());
  CHECK(of_kind(t, MoveKind::R2Minus).empty());
  CHECK(of_kind(t, MoveKind::R3).empty());
}

TEST_CASE("plus moves grow and minus moves undo them") {
  auto t = parse_pd(kTrefoil);
  for (auto& m : of_kind(t, MoveKind::R1Plus)) {
    auto up = apply_move(t, m);
    CHECK(up.size() == 4);
    CHECK_FALSE(of_kind(up, MoveKind::R1Minus).empty());
  }
  auto r2 = of_kind(t, MoveKind::R2Plus);
  REQUIRE_FALSE(r2.empty());
  for (auto& m : r2) {
    auto up = apply_move(t, m);
    CHECK(up.size() == 5);
    auto rep = level_simplify(up, 1);
    CHECK(rep.final.size() == 3);
  }
}

TEST_CASE("stale moves are rejected") {
  auto t = parse_pd(kTrefoil);
  CHECK_THROWS_AS(apply_move(t, Move{MoveKind::R1Minus, {0}}), StaleMoveError);
  CHECK_THROWS_AS(apply_move(t, Move{MoveKind::R3, {0, 1, 2}}), StaleMoveError);
}

TEST_CASE("R3 keeps size and is reversible within the orbit") {
  int seen = 0;
  for (std::uint64_t s = 0; s < 30 && seen < 10; ++s) {
    auto d = corpus::random_knot(s, 10, 8, 16);
    for (auto& m : of_kind(d, MoveKind::R3)) {
      auto after = apply_move(d, m);
      CHECK(after.size() == d.size());
      bool back = false;
      for (auto& m2 : of_kind(after, MoveKind::R3))
        if (canonical_code(apply_move(after, m2)) == canonical_code(d)) back = true;
      CHECK(back);
      ++seen;
      break;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("tracked origins point at surviving crossings") {
  auto d = corpus::random_knot(3, 8, 10, 16);
  for (auto& m : enumerate_moves(d, kReducing)) {
    auto r = apply_move_tracked(d, m);
    CHECK(r.origin.size() == static_cast<std::size_t>(r.diagram.size()));
    for (int o : r.origin) CHECK(o < d.size());
  }
}

TEST_CASE("simplification traces replay exactly") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto d = corpus::random_knot(s, 8, 12, 20);
    auto lv = level_simplify(d, s);
    CHECK(replay(d, lv.trace) == lv.final);
    CHECK(enumerate_moves(lv.final, kReducing).empty());
    auto gl = global_simplify(d, s);
    CHECK(replay(d, gl.trace) == gl.final);
    CHECK(gl.final.size() <= lv.final.size());
    CHECK(trace_from_json(trace_to_json(gl.trace)) == gl.trace);
  }
}

TEST_CASE("simplification is deterministic per seed") {
  auto d = corpus::random_knot(11, 10, 15, 22);
  CHECK(global_simplify(d, 5).trace == global_simplify(d, 5).trace);
  CHECK(level_simplify(d, 5).trace == level_simplify(d, 5).trace);
}

TEST_CASE("unknot diagrams built by mixing simplify globally") {
  auto kink = parse_pd("[[0,0,1,1]]");
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto d = random_mix(kink, s, 20, 12);
    CHECK(global_simplify(d, s).reached_trivial);
  }
}

TEST_CASE("pass moves preserve invariants and help simplify") {
  int applied = 0;
  for (std::uint64_t s = 0; s < 40 && applied < 20; ++s) {
    auto d = corpus::random_knot(s, 9, 10, 16);
    auto moves = of_kind(d, MoveKind::Pass);
    if (moves.empty()) continue;
    auto after = apply_move(d, moves[s % moves.size()]);
    CHECK(jones(after) == jones(d));
    CHECK(alexander(after) == alexander(d));
    ++applied;
  }
  CHECK(applied > 0);
}

TEST_CASE("the 42-crossing hard unknot admits no reducing move") {
  auto d = parse_pd(appendix::kHardUnknot42);
  CHECK(d.size() == 42);
  CHECK(enumerate_moves(d, kReducing).empty());
  CHECK_FALSE(level_simplify(d, 0).reached_trivial);
}
