#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unknot/diagram.hpp"

namespace unknot {

enum class MoveKind { R1Minus, R1Plus, R2Minus, R2Plus, R3, Pass };

using MoveKinds = unsigned;
constexpr MoveKinds kind_bit(MoveKind k) { return 1u << static_cast<unsigned>(k); }
constexpr MoveKinds kReducing = kind_bit(MoveKind::R1Minus) | kind_bit(MoveKind::R2Minus);
constexpr MoveKinds kReidemeister = kReducing | kind_bit(MoveKind::R1Plus) |
                                    kind_bit(MoveKind::R2Plus) | kind_bit(MoveKind::R3);
constexpr MoveKinds kAllMoves = kReidemeister | kind_bit(MoveKind::Pass);

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/// A move on one specific diagram. Site layout by kind:
///   R1-  {crossing}
///   R2-  {first departure slot of the bigon face}
///   R3   {first departure slot of the triangle face}
///   R1+  {slot on the edge (-1 on the empty diagram), variant 0..3}
///   R2+  {departure slot of pushed edge, departure slot of crossed edge, pushed over?}
///   Pass {entry slot starting the run, run length, run is over?}
/// Slots are 4 * crossing + position.
struct Move {
  MoveKind kind;
  std::vector<int> site;
  bool operator==(const Move&) const = default;
};

class StaleMoveError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Move> enumerate_moves(const Diagram& d, MoveKinds kinds);

struct MoveResult {
  Diagram diagram;
  std::vector<int> origin;  // per output crossing: input crossing index, or -1 if new
};

MoveResult apply_move_tracked(const Diagram& d, const Move& m);
Diagram apply_move(const Diagram& d, const Move& m);

struct SimplifyReport {
  Diagram final;
  std::vector<Move> trace;
  int attempts = 0;
  bool reached_trivial = false;
  std::vector<int> origin;  // final crossing -> input crossing
};

/// Applies R1-/R2- greedily; when stuck, a random R3, up to max_r3 of them.
SimplifyReport level_simplify(const Diagram& d, std::uint64_t seed, int max_r3 = 1000);

struct GlobalBudget {
  int max_r3 = 1000;   // per level round
  int max_rounds = 64;
  int stale_retries = 4;  // extra level rounds tried when neither pass moves nor level help
};

/// Alternates level rounds with crossing-reducing pass moves until neither helps.
SimplifyReport global_simplify(const Diagram& d, std::uint64_t seed, const GlobalBudget& budget = {});

/// Applies n_moves random Reidemeister moves (category uniform, then site uniform),
/// skipping any that would exceed max_n crossings.
Diagram random_mix(const Diagram& d, std::uint64_t seed, int n_moves, int max_n,
                   MoveKinds kinds = kReidemeister);

Diagram replay(const Diagram& d, const std::vector<Move>& trace);

std::string trace_to_json(const std::vector<Move>& trace);
std::vector<Move> trace_from_json(const std::string& text);

}  // namespace unknot
