#include "unknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>

#include <json.hpp>

#include "unknot/planar.hpp"
#include "unknot/rng.hpp"

namespace unknot {

using planar::crossing_of;
using planar::Graph;
using planar::opposite;
using planar::position_of;
using planar::slot_of;

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R3: return "R3";
    case MoveKind::Pass: return "Pass";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus, MoveKind::R2Plus,
                 MoveKind::R3, MoveKind::Pass})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown move kind '" + s + "'");
}

namespace {

bool has_loop(const Graph& g, int c) {
  for (int p = 0; p < 4; ++p) {
    int m = g.mate[slot_of(c, p)];
    if (crossing_of(m) == c && (position_of(m) == ((p + 1) & 3) || position_of(m) == ((p + 3) & 3)))
      return true;
  }
  return false;
}

std::vector<int> face_from(const Graph& g, int s) {
  std::vector<int> f{s};
  for (int cur = planar::face_next(g, s); cur != s; cur = planar::face_next(g, cur)) {
    f.push_back(cur);
    if (f.size() > g.mate.size()) throw std::logic_error("face walk does not close");
  }
  return f;
}

bool is_reducible_bigon(const Graph& g, const std::vector<int>& f) {
  if (f.size() != 2) return false;
  if (crossing_of(f[0]) == crossing_of(f[1])) return false;
  return planar::is_over(f[0]) == planar::is_over(g.mate[f[0]]);
}

bool is_r3_triangle(const Graph& g, const std::vector<int>& f) {
  if (f.size() != 3) return false;
  int c0 = crossing_of(f[0]), c1 = crossing_of(f[1]), c2 = crossing_of(f[2]);
  if (c0 == c1 || c1 == c2 || c0 == c2) return false;
  for (int s : f)
    if (planar::is_over(s) && planar::is_over(g.mate[s])) return true;
  return false;
}

Graph remove_r3(const Graph& g, const std::vector<int>& f) {
  Graph out = g;
  std::array<int, 6> outward{}, inward{};
  for (int i = 0; i < 3; ++i) {
    int s = f[i], m = g.mate[f[i]];
    outward[2 * i] = opposite(s);
    inward[2 * i] = m;
    outward[2 * i + 1] = opposite(m);
    inward[2 * i + 1] = s;
    out.connect(opposite(s), opposite(m));
  }
  auto outward_index = [&](int s) {
    for (int k = 0; k < 6; ++k)
      if (outward[k] == s) return k;
    return -1;
  };
  for (int k = 0; k < 6; ++k) {
    int old = g.mate[outward[k]];
    int j = outward_index(old);
    if (j >= 0) {
      out.mate[inward[k]] = inward[j];
    } else {
      out.connect(inward[k], old);
    }
  }
  return out;
}

// ---- pass moves ----

struct Reroute {
  Graph base;             // run removed; run endpoints dangling
  int from = -1, to = -1; // dangling slots in base
  std::vector<int> crossed;  // departure slots of edges the new strand crosses
  bool trivial = false;   // every crossing was on the run
};

std::optional<Reroute> plan_pass(const Graph& g, const planar::Traversal& t, int start_index,
                                 int length) {
  const int n = g.size();
  std::vector<char> removed(n, 0);
  const int total = static_cast<int>(t.entries.size());
  for (int i = 0; i < length; ++i) removed[crossing_of(t.entries[(start_index + i) % total])] = 1;

  Reroute r;
  int remaining = n - static_cast<int>(std::count(removed.begin(), removed.end(), 1));
  if (remaining == 0) {
    r.trivial = true;
    return r;
  }
  int first = t.entries[start_index];
  int last = t.entries[(start_index + length - 1) % total];
  int u = g.mate[first];
  while (removed[crossing_of(u)]) u = g.mate[opposite(u)];
  int v = g.mate[opposite(last)];
  while (removed[crossing_of(v)]) v = g.mate[opposite(v)];

  std::vector<int> new_index(n, -1);
  for (int c = 0, k = 0; c < n; ++c)
    if (!removed[c]) new_index[c] = k++;
  r.base = planar::without_crossings(g, removed);
  r.from = slot_of(new_index[crossing_of(u)], position_of(u));
  r.to = slot_of(new_index[crossing_of(v)], position_of(v));
  r.base.mate[r.from] = planar::kDangling;
  r.base.mate[r.to] = planar::kDangling;

  auto fs = planar::faces(r.base);
  auto fid = planar::face_index(r.base, fs);
  const int source = fid[r.from], target = fid[r.to];
  std::vector<int> via(fs.size(), -1);  // departure slot used to enter each face
  std::vector<char> reached(fs.size(), 0);
  std::queue<int> frontier;
  frontier.push(source);
  reached[source] = 1;
  while (!frontier.empty() && !reached[target]) {
    int f = frontier.front();
    frontier.pop();
    for (int s : fs[f]) {
      int m = r.base.mate[s];
      if (m == planar::kDangling) continue;
      int next = fid[m];
      if (reached[next]) continue;
      reached[next] = 1;
      via[next] = s;
      frontier.push(next);
    }
  }
  for (int f = target; f != source; f = fid[via[f]]) r.crossed.push_back(via[f]);
  std::reverse(r.crossed.begin(), r.crossed.end());
  if (static_cast<int>(r.crossed.size()) >= length) return std::nullopt;
  return r;
}

Graph build_pass(const Reroute& r, bool over) {
  Graph g = r.base;
  int prev = r.from;
  for (int x : r.crossed) {
    int y = g.mate[x];
    int k = g.add_crossing();
    // Counterclockwise: [x side, strand out, y side, strand in].
    const int shift = over ? 0 : 1;
    auto at = [&](int i) { return slot_of(k, i + shift); };
    g.connect(at(0), x);
    g.connect(at(2), y);
    g.connect(prev, at(3));
    prev = at(1);
  }
  g.connect(prev, r.to);
  return g;
}

struct Run {
  int start_index;
  int length;
  bool over;
};

std::vector<Run> maximal_runs(const planar::Traversal& t) {
  std::vector<Run> runs;
  const int total = static_cast<int>(t.entries.size());
  if (total == 0 || t.components() != 1) return runs;
  auto over_at = [&](int i) { return planar::is_over(t.entries[((i % total) + total) % total]); };
  int anchor = -1;
  for (int i = 0; i < total; ++i)
    if (over_at(i) != over_at(i - 1)) {
      anchor = i;
      break;
    }
  if (anchor < 0) return runs;
  int i = anchor;
  while (i < anchor + total) {
    int j = i;
    while (j + 1 < anchor + total && over_at(j + 1) == over_at(i)) ++j;
    int len = j - i + 1;
    if (len >= 2) runs.push_back({i % total, len, over_at(i)});
    i = j + 1;
  }
  return runs;
}

Graph apply_on_graph(const Graph& g, const Move& m) {
  const auto& site = m.site;
  auto need = [&](std::size_t k) {
    if (site.size() != k) throw StaleMoveError("malformed site for " + to_string(m.kind));
  };
  auto slot_ok = [&](int s) { return s >= 0 && s < static_cast<int>(g.mate.size()); };

  switch (m.kind) {
    case MoveKind::R1Minus: {
      need(1);
      int c = site[0];
      if (c < 0 || c >= g.size() || !has_loop(g, c)) throw StaleMoveError("no kink at crossing");
      std::vector<char> removed(g.size(), 0);
      removed[c] = 1;
      return planar::without_crossings(g, removed);
    }
    case MoveKind::R2Minus: {
      need(1);
      if (!slot_ok(site[0])) throw StaleMoveError("slot out of range");
      auto f = face_from(g, site[0]);
      if (!is_reducible_bigon(g, f)) throw StaleMoveError("not a reducible bigon");
      std::vector<char> removed(g.size(), 0);
      removed[crossing_of(f[0])] = removed[crossing_of(f[1])] = 1;
      return planar::without_crossings(g, removed);
    }
    case MoveKind::R3: {
      need(1);
      if (!slot_ok(site[0])) throw StaleMoveError("slot out of range");
      auto f = face_from(g, site[0]);
      if (!is_r3_triangle(g, f)) throw StaleMoveError("not an R3 triangle");
      return remove_r3(g, f);
    }
    case MoveKind::R1Plus: {
      need(2);
      int s = site[0], variant = site[1];
      if (variant < 0 || variant > 3) throw StaleMoveError("bad kink variant");
      Graph out = g;
      int k = out.add_crossing();
      if (s == -1) {
        if (g.size() != 0) throw StaleMoveError("edge required");
        int p = variant & 1;
        out.connect(slot_of(k, p), slot_of(k, p + 1));
        out.connect(slot_of(k, p + 2), slot_of(k, p + 3));
        return out;
      }
      if (!slot_ok(s)) throw StaleMoveError("slot out of range");
      int t = g.mate[s];
      int p = variant & 1;
      bool swap = variant >> 1;
      out.connect(slot_of(k, p), slot_of(k, p + 1));
      out.connect(s, slot_of(k, swap ? p + 3 : p + 2));
      out.connect(t, slot_of(k, swap ? p + 2 : p + 3));
      return out;
    }
    case MoveKind::R2Plus: {
      need(3);
      int a1 = site[0], a2 = site[1];
      if (!slot_ok(a1) || !slot_ok(a2) || a1 == a2 || g.mate[a1] == a2)
        throw StaleMoveError("bad R2+ site");
      auto f = face_from(g, a1);
      if (std::find(f.begin(), f.end(), a2) == f.end())
        throw StaleMoveError("edges do not share a face");
      Graph out = g;
      planar::push_across(out, a1, a2, site[2] != 0);
      return out;
    }
    case MoveKind::Pass: {
      need(3);
      auto t = planar::traverse(g);
      if (t.components() != 1) throw StaleMoveError("pass moves need a knot");
      auto it = std::find(t.entries.begin(), t.entries.end(), site[0]);
      if (it == t.entries.end()) throw StaleMoveError("run start is not an entry slot");
      int start = static_cast<int>(it - t.entries.begin());
      int length = site[1];
      bool over = site[2] != 0;
      const int total = static_cast<int>(t.entries.size());
      if (length < 2 || length >= total) throw StaleMoveError("bad run length");
      for (int i = 0; i < length; ++i)
        if (planar::is_over(t.entries[(start + i) % total]) != over)
          throw StaleMoveError("run is not monotone");
      auto plan = plan_pass(g, t, start, length);
      if (!plan) throw StaleMoveError("pass move does not reduce crossings");
      if (plan->trivial) return Graph{};
      return build_pass(*plan, over);
    }
  }
  throw std::logic_error("unhandled move kind");
}

}  // namespace

std::vector<Move> enumerate_moves(const Diagram& d, MoveKinds kinds) {
  std::vector<Move> out;
  auto want = [&](MoveKind k) { return (kinds & kind_bit(k)) != 0; };
  if (d.empty()) {
    if (want(MoveKind::R1Plus))
      for (int v = 0; v < 2; ++v) out.push_back({MoveKind::R1Plus, {-1, v}});
    return out;
  }
  Graph g = Graph::from_diagram(d);
  std::vector<std::vector<int>> fs;
  if (want(MoveKind::R2Minus) || want(MoveKind::R3) || want(MoveKind::R2Plus)) fs = planar::faces(g);

  if (want(MoveKind::R1Minus))
    for (int c = 0; c < g.size(); ++c)
      if (has_loop(g, c)) out.push_back({MoveKind::R1Minus, {c}});
  if (want(MoveKind::R2Minus))
    for (const auto& f : fs)
      if (is_reducible_bigon(g, f)) out.push_back({MoveKind::R2Minus, {f[0]}});
  if (want(MoveKind::R3))
    for (const auto& f : fs)
      if (is_r3_triangle(g, f)) out.push_back({MoveKind::R3, {f[0]}});
  if (want(MoveKind::R1Plus))
    for (int s = 0; s < static_cast<int>(g.mate.size()); ++s)
      if (s < g.mate[s])
        for (int v = 0; v < 4; ++v) out.push_back({MoveKind::R1Plus, {s, v}});
  if (want(MoveKind::R2Plus))
    for (const auto& f : fs)
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          if (g.mate[f[i]] == f[j]) continue;
          for (int over = 0; over < 2; ++over) out.push_back({MoveKind::R2Plus, {f[i], f[j], over}});
        }
  if (want(MoveKind::Pass)) {
    auto t = planar::traverse(g);
    for (const auto& run : maximal_runs(t)) {
      if (plan_pass(g, t, run.start_index, run.length))
        out.push_back({MoveKind::Pass, {t.entries[run.start_index], run.length, run.over ? 1 : 0}});
    }
  }
  return out;
}

MoveResult apply_move_tracked(const Diagram& d, const Move& m) {
  Graph g = Graph::from_diagram(d);
  Graph out = apply_on_graph(g, m);
  MoveResult r;
  r.diagram = out.size() == 0 ? Diagram{} : planar::to_diagram(out);
  r.diagram.label_base = d.label_base;
  r.origin = out.origin;
  return r;
}

Diagram apply_move(const Diagram& d, const Move& m) { return apply_move_tracked(d, m).diagram; }

namespace {

void compose(std::vector<int>& origin, const std::vector<int>& step) {
  std::vector<int> next(step.size());
  for (std::size_t i = 0; i < step.size(); ++i) next[i] = step[i] < 0 ? -1 : origin[step[i]];
  origin = std::move(next);
}

void run_step(SimplifyReport& r, const Move& m) {
  auto res = apply_move_tracked(r.final, m);
  r.final = std::move(res.diagram);
  compose(r.origin, res.origin);
  r.trace.push_back(m);
}

void reduce_greedily(SimplifyReport& r) {
  while (!r.final.empty()) {
    auto moves = enumerate_moves(r.final, kReducing);
    if (moves.empty()) break;
    run_step(r, moves.front());
  }
}

SimplifyReport start_report(const Diagram& d) {
  SimplifyReport r;
  r.final = d;
  r.origin.resize(d.size());
  for (int i = 0; i < d.size(); ++i) r.origin[i] = i;
  return r;
}

void level_round(SimplifyReport& r, Rng& rng, int max_r3) {
  ++r.attempts;
  int used = 0;
  while (true) {
    reduce_greedily(r);
    if (r.final.empty() || used >= max_r3) break;
    auto r3 = enumerate_moves(r.final, kind_bit(MoveKind::R3));
    if (r3.empty()) break;
    run_step(r, r3[rng.index(static_cast<int>(r3.size()))]);
    ++used;
  }
}

}  // namespace

SimplifyReport level_simplify(const Diagram& d, std::uint64_t seed, int max_r3) {
  SimplifyReport r = start_report(d);
  Rng rng(seed);
  level_round(r, rng, max_r3);
  r.reached_trivial = r.final.empty();
  return r;
}

SimplifyReport global_simplify(const Diagram& d, std::uint64_t seed, const GlobalBudget& budget) {
  SimplifyReport r = start_report(d);
  Rng rng(seed);
  int stale = 0;
  for (int round = 0; round < budget.max_rounds && !r.final.empty(); ++round) {
    int before = r.final.size();
    level_round(r, rng, budget.max_r3);
    if (r.final.empty()) break;

    // Largest strict decrease among pass moves; first found on ties.
    auto passes = enumerate_moves(r.final, kind_bit(MoveKind::Pass));
    std::optional<MoveResult> best;
    const Move* chosen = nullptr;
    for (const auto& m : passes) {
      auto res = apply_move_tracked(r.final, m);
      if (!best || res.diagram.size() < best->diagram.size()) {
        best = std::move(res);
        chosen = &m;
      }
    }
    if (best) {
      r.final = std::move(best->diagram);
      compose(r.origin, best->origin);
      r.trace.push_back(*chosen);
      stale = 0;
      continue;
    }
    if (r.final.size() < before) {
      stale = 0;
      continue;
    }
    if (++stale > budget.stale_retries) break;
  }
  r.reached_trivial = r.final.empty();
  return r;
}

Diagram random_mix(const Diagram& d, std::uint64_t seed, int n_moves, int max_n, MoveKinds kinds) {
  static constexpr MoveKind categories[] = {MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus,
                                            MoveKind::R2Plus, MoveKind::R3};
  Rng rng(seed);
  Diagram cur = d;
  for (int step = 0; step < n_moves; ++step) {
    std::vector<std::vector<Move>> options;
    for (auto k : categories) {
      if (!(kinds & kind_bit(k))) continue;
      auto ms = enumerate_moves(cur, kind_bit(k));
      if (!ms.empty()) options.push_back(std::move(ms));
    }
    if (options.empty()) break;
    const auto& pool = options[rng.index(static_cast<int>(options.size()))];
    const Move& m = pool[rng.index(static_cast<int>(pool.size()))];
    int growth = m.kind == MoveKind::R1Plus ? 1 : m.kind == MoveKind::R2Plus ? 2 : 0;
    if (cur.size() + growth > max_n) continue;
    cur = apply_move(cur, m);
  }
  return cur;
}

Diagram replay(const Diagram& d, const std::vector<Move>& trace) {
  Diagram cur = d;
  for (const auto& m : trace) cur = apply_move(cur, m);
  return cur;
}

std::string trace_to_json(const std::vector<Move>& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : trace) j.push_back({{"kind", to_string(m.kind)}, {"site", m.site}});
  return j.dump();
}

std::vector<Move> trace_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Move> out;
  for (const auto& e : j)
    out.push_back({move_kind_from_string(e.at("kind").get<std::string>()),
                   e.at("site").get<std::vector<int>>()});
  return out;
}

}  // namespace unknot
