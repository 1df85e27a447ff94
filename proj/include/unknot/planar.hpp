#pragma once

// Slot-level view of a diagram used by every move. A slot is 4 * crossing + position;
// positions run counterclockwise and even positions carry the under-strand.

#include <vector>

#include "unknot/diagram.hpp"

namespace unknot::planar {

constexpr int kDangling = -1;

inline int crossing_of(int slot) { return slot >> 2; }
inline int position_of(int slot) { return slot & 3; }
inline int slot_of(int crossing, int position) { return crossing * 4 + (position & 3); }
inline int opposite(int slot) { return (slot & ~3) | ((slot + 2) & 3); }
inline int ccw_next(int slot) { return (slot & ~3) | ((slot + 1) & 3); }
inline int cw_next(int slot) { return (slot & ~3) | ((slot + 3) & 3); }
inline bool is_over(int slot) { return (slot & 1) != 0; }

struct Graph {
  std::vector<int> mate;    // other end of the edge at each slot, or kDangling
  std::vector<int> origin;  // source crossing index per crossing, -1 when created

  int size() const { return static_cast<int>(origin.size()); }
  int add_crossing();
  void connect(int a, int b) {
    mate[a] = b;
    mate[b] = a;
  }

  static Graph from_diagram(const Diagram& d);
};

/// Orientation data from walking every component.
struct Traversal {
  std::vector<int> entries;           // entry slots in walking order
  std::vector<int> component_starts;  // offsets into entries
  std::vector<int> under_entry;       // per crossing: slot where the under-strand enters
  std::vector<int> over_entry;        // per crossing: slot where the over-strand enters
  int components() const { return static_cast<int>(component_starts.size()); }
};

Traversal traverse(const Graph& g);
/// Sign from the entry slots of both strands.
int sign_of(int under_entry, int over_entry);

/// Converts back to PD form: crossings rotated so slot 0 is the incoming under-strand,
/// labels consecutive along each component starting from the lowest crossing.
Diagram to_diagram(const Graph& g);

/// Deletes the marked crossings; strands pass straight through them. Surviving
/// crossings keep their relative order. Closed loops left without crossings vanish.
Graph without_crossings(const Graph& g, const std::vector<char>& removed);

/// Face following slot `s` when walking a face boundary with the face on the left.
int face_next(const Graph& g, int s);
/// Every face as its list of departure slots.
std::vector<std::vector<int>> faces(const Graph& g);
/// Face id of each departure slot.
std::vector<int> face_index(const Graph& g, const std::vector<std::vector<int>>& fs);

struct PushResult {
  int x = -1;  // crossing nearer the start of the pushed edge
  int y = -1;
  int tip = -1;  // departure slot of the pushed edge's tip, face beyond on its left
};

/// Pushes the edge leaving slot a1 across the edge leaving a2; both edges must border
/// the face on the left of a1. Adds two crossings (an R2 increase).
PushResult push_across(Graph& g, int a1, int a2, bool first_over);

}  // namespace unknot::planar
