#include "unknot/planar.hpp"

#include <algorithm>
#include <stdexcept>

namespace unknot::planar {

int Graph::add_crossing() {
  origin.push_back(-1);
  mate.insert(mate.end(), 4, kDangling);
  return size() - 1;
}

Graph Graph::from_diagram(const Diagram& d) {
  Graph g;
  const int n = d.size();
  g.origin.resize(n);
  g.mate.assign(4 * n, kDangling);
  std::vector<int> first(2 * n, -1);
  for (int c = 0; c < n; ++c) {
    g.origin[c] = c;
    for (int p = 0; p < 4; ++p) {
      int label = d.crossings[c][p];
      if (label < 0 || label >= 2 * n) throw ValidationError("edge label out of range");
      int s = slot_of(c, p);
      if (first[label] < 0) {
        first[label] = s;
      } else if (first[label] >= 0 && g.mate[first[label]] == kDangling) {
        g.connect(first[label], s);
      } else {
        throw ValidationError("label " + std::to_string(label) + " occurs more than twice");
      }
    }
  }
  for (int s = 0; s < 4 * n; ++s)
    if (g.mate[s] == kDangling) throw ValidationError("label occurs only once");
  return g;
}

int sign_of(int under_entry, int over_entry) {
  return position_of(over_entry) == ((position_of(under_entry) + 3) & 3) ? 1 : -1;
}

Traversal traverse(const Graph& g) {
  const int n = g.size();
  Traversal t;
  t.under_entry.assign(n, -1);
  t.over_entry.assign(n, -1);
  std::vector<char> seen(4 * n, 0);

  auto walk = [&](int start) {
    t.component_starts.push_back(static_cast<int>(t.entries.size()));
    int entry = start;
    do {
      if (seen[entry]) throw ValidationError("inconsistent strand structure");
      seen[entry] = 1;
      seen[opposite(entry)] = 1;
      t.entries.push_back(entry);
      int c = crossing_of(entry);
      (is_over(entry) ? t.over_entry : t.under_entry)[c] = entry;
      int next = g.mate[opposite(entry)];
      if (next == kDangling) throw ValidationError("dangling strand");
      entry = next;
    } while (entry != start);
  };

  for (int c = 0; c < n; ++c)
    if (!seen[slot_of(c, 0)]) walk(slot_of(c, 0));
  for (int s = 0; s < 4 * n; ++s)
    if (!seen[s]) walk(s);
  return t;
}

Diagram to_diagram(const Graph& g) {
  const int n = g.size();
  Traversal t = traverse(g);

  // Rotate crossings whose under-strand is walked from slot 2 to slot 0.
  std::vector<int> rot(n, 0);
  for (int c = 0; c < n; ++c)
    if (position_of(t.under_entry[c]) == 2) rot[c] = 2;
  auto moved = [&](int s) { return slot_of(crossing_of(s), position_of(s) + rot[crossing_of(s)]); };

  Diagram d;
  d.crossings.assign(n, Crossing{-1, -1, -1, -1});
  int next_label = 0;
  for (int k = 0; k < t.components(); ++k) {
    int begin = t.component_starts[k];
    int end = k + 1 < t.components() ? t.component_starts[k + 1] : static_cast<int>(t.entries.size());
    int first_label = next_label++;
    for (int i = begin; i < end; ++i) {
      int entry = t.entries[i];
      int exit = opposite(entry);
      int in_label = (i == begin) ? first_label : next_label - 1;
      int out_label = (i + 1 == end) ? first_label : next_label++;
      int me = moved(entry), mx = moved(exit);
      d.crossings[crossing_of(me)][position_of(me)] = in_label;
      d.crossings[crossing_of(mx)][position_of(mx)] = out_label;
    }
  }
  return d;
}

Graph without_crossings(const Graph& g, const std::vector<char>& removed) {
  const int n = g.size();
  std::vector<int> new_index(n, -1);
  Graph out;
  for (int c = 0; c < n; ++c) {
    if (removed[c]) continue;
    new_index[c] = out.size();
    out.origin.push_back(g.origin[c]);
  }
  out.mate.assign(4 * out.size(), kDangling);
  auto remap = [&](int s) { return slot_of(new_index[crossing_of(s)], position_of(s)); };

  for (int c = 0; c < n; ++c) {
    if (removed[c]) continue;
    for (int p = 0; p < 4; ++p) {
      int s = slot_of(c, p);
      int cur = g.mate[s];
      int guard = 0;
      while (cur != kDangling && removed[crossing_of(cur)]) {
        cur = g.mate[opposite(cur)];
        if (++guard > 4 * n) throw std::logic_error("strand loops inside removed crossings");
      }
      out.mate[remap(s)] = cur == kDangling ? kDangling : remap(cur);
    }
  }
  return out;
}

int face_next(const Graph& g, int s) {
  int arrival = g.mate[s];
  if (arrival == kDangling) arrival = s;
  return cw_next(arrival);
}

std::vector<std::vector<int>> faces(const Graph& g) {
  const int slots = 4 * g.size();
  std::vector<char> seen(slots, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < slots; ++s) {
    if (seen[s]) continue;
    std::vector<int> face;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      face.push_back(cur);
      cur = face_next(g, cur);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<int> face_index(const Graph& g, const std::vector<std::vector<int>>& fs) {
  std::vector<int> idx(4 * g.size(), -1);
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int s : fs[f]) idx[s] = f;
  return idx;
}

PushResult push_across(Graph& g, int a1, int a2, bool first_over) {
  const int b1 = g.mate[a1];
  const int b2 = g.mate[a2];
  PushResult r;
  r.x = g.add_crossing();
  r.y = g.add_crossing();
  // Counterclockwise neighbourhoods:
  //   x: [toward a1, toward y along e2, toward y along e1, toward b2]
  //   y: [toward b1, toward a2, toward x along e1, toward x along e2]
  // Rotating by one position moves the pushed strand onto the odd (over) slots.
  const int shift = first_over ? 1 : 0;
  auto xs = [&](int k) { return slot_of(r.x, k + shift); };
  auto ys = [&](int k) { return slot_of(r.y, k + shift); };
  g.connect(xs(0), a1);
  g.connect(xs(3), b2);
  g.connect(ys(0), b1);
  g.connect(ys(1), a2);
  g.connect(xs(2), ys(2));
  g.connect(xs(1), ys(3));
  r.tip = xs(2);
  return r;
}

}  // namespace unknot::planar
