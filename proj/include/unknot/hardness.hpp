#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unknot/diagram.hpp"
#include "unknot/moves.hpp"

namespace unknot {

struct OrbitLimits {
  long long max_diagrams = 100000;
  double timeout_seconds = 120.0;
};

struct OrbitResult {
  std::vector<CanonicalCode> codes;  // sorted; includes the start diagram
  bool timed_out = false;
  long long explored = 0;
};

/// Breadth-first closure under R3 moves, deduplicated by canonical code.
OrbitResult r3_orbit(const Diagram& d, const OrbitLimits& limits = {});

struct HardnessVerdict {
  enum class Kind { Hard, NotHard, Timeout };
  Kind kind = Kind::Timeout;
  long long orbit_size = 0;   // Hard
  std::vector<Move> witness;  // NotHard: R3 moves, then one R1- or R2-
  long long explored = 0;     // Timeout
};
std::string to_string(HardnessVerdict::Kind k);

/// Hard iff no diagram in the R3 orbit admits an R1- or R2- move.
HardnessVerdict is_hard(const Diagram& d, const OrbitLimits& limits = {});

/// Trivial Jones polynomial, yet `retries` seeded level simplifications all fail.
bool filter_candidate(const Diagram& d, int retries = 25, std::uint64_t seed = 0, int max_r3 = 1000);

struct OrbitPartition {
  int distinct = 0;
  std::vector<int> class_of;          // per input diagram
  std::vector<bool> unresolved;       // per class: its orbit timed out
  int classes() const { return static_cast<int>(unresolved.size()); }
};

/// Dedup by canonical code, then group diagrams whose R3 orbits meet.
OrbitPartition dedup_and_partition(const std::vector<Diagram>& diagrams, const OrbitLimits& limits = {});

}  // namespace unknot
