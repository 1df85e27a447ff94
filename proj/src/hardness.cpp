#include "unknot/hardness.hpp"

#include <chrono>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "unknot/invariants.hpp"

namespace unknot {

std::string to_string(HardnessVerdict::Kind k) {
  switch (k) {
    case HardnessVerdict::Kind::Hard: return "hard";
    case HardnessVerdict::Kind::NotHard: return "not-hard";
    case HardnessVerdict::Kind::Timeout: return "timeout";
  }
  return "?";
}

namespace {

struct OrbitNode {
  Diagram diagram;
  int parent;
  Move via;
};

class OrbitSearch {
public:
  OrbitSearch(const Diagram& d, const OrbitLimits& limits)
      : limits_(limits), start_(std::chrono::steady_clock::now()) {
    seen_.insert(canonical_code(d));
    nodes_.push_back({d, -1, {}});
  }

  // Visits nodes in BFS order; `visit` returns false to stop early.
  template <typename Visit>
  bool run(Visit visit) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (out_of_budget()) return false;
      if (!visit(static_cast<int>(i))) return true;
      auto moves = enumerate_moves(nodes_[i].diagram, kind_bit(MoveKind::R3));
      for (auto& m : moves) {
        Diagram next = apply_move(nodes_[i].diagram, m);
        if (seen_.insert(canonical_code(next)).second)
          nodes_.push_back({std::move(next), static_cast<int>(i), std::move(m)});
      }
      ++explored_;
    }
    return true;
  }

  const OrbitNode& node(int i) const { return nodes_[i]; }
  std::vector<Move> path_to(int i) const {
    std::vector<Move> path;
    for (; nodes_[i].parent >= 0; i = nodes_[i].parent) path.push_back(nodes_[i].via);
    return {path.rbegin(), path.rend()};
  }
  long long explored() const { return explored_; }
  const std::unordered_set<CanonicalCode>& seen() const { return seen_; }

private:
  bool out_of_budget() const {
    if (static_cast<long long>(seen_.size()) > limits_.max_diagrams) return true;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > limits_.timeout_seconds;
  }

  OrbitLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_set<CanonicalCode> seen_;
  std::deque<OrbitNode> nodes_;
  long long explored_ = 0;
};

}  // namespace

OrbitResult r3_orbit(const Diagram& d, const OrbitLimits& limits) {
  OrbitSearch search(d, limits);
  OrbitResult r;
  r.timed_out = !search.run([](int) { return true; });
  r.explored = search.explored();
  r.codes.assign(search.seen().begin(), search.seen().end());
  std::sort(r.codes.begin(), r.codes.end());
  return r;
}

HardnessVerdict is_hard(const Diagram& d, const OrbitLimits& limits) {
  OrbitSearch search(d, limits);
  HardnessVerdict v;
  bool finished = search.run([&](int i) {
    auto reducing = enumerate_moves(search.node(i).diagram, kReducing);
    if (reducing.empty()) return true;
    v.kind = HardnessVerdict::Kind::NotHard;
    v.witness = search.path_to(i);
    v.witness.push_back(reducing.front());
    return false;
  });
  if (v.kind == HardnessVerdict::Kind::NotHard) return v;
  if (!finished) {
    v.kind = HardnessVerdict::Kind::Timeout;
    v.explored = search.explored();
    return v;
  }
  v.kind = HardnessVerdict::Kind::Hard;
  v.orbit_size = static_cast<long long>(search.seen().size());
  return v;
}

bool filter_candidate(const Diagram& d, int retries, std::uint64_t seed, int max_r3) {
  try {
    if (!jones(d).is_one()) return false;
  } catch (const BracketCapError&) {
    return false;
  }
  for (int k = 0; k < retries; ++k)
    if (level_simplify(d, seed + static_cast<std::uint64_t>(k), max_r3).reached_trivial) return false;
  return true;
}

OrbitPartition dedup_and_partition(const std::vector<Diagram>& diagrams, const OrbitLimits& limits) {
  OrbitPartition p;
  const int n = static_cast<int>(diagrams.size());
  std::vector<CanonicalCode> codes(n);
  std::unordered_map<CanonicalCode, int> first_index;  // distinct code -> representative
  for (int i = 0; i < n; ++i) {
    codes[i] = canonical_code(diagrams[i]);
    first_index.emplace(codes[i], i);
  }
  p.distinct = static_cast<int>(first_index.size());

  // Union-find over representatives, joined through orbit membership.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> timed_out(n, false);
  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    int rep = first_index[codes[i]];
    if (rep != i || done[rep]) continue;
    auto orbit = r3_orbit(diagrams[i], limits);
    done[rep] = true;
    if (orbit.timed_out) {
      timed_out[rep] = true;
      continue;
    }
    for (const auto& c : orbit.codes) {
      auto it = first_index.find(c);
      if (it == first_index.end() || timed_out[it->second]) continue;
      parent[find(it->second)] = find(rep);
      done[it->second] = true;
    }
  }
  std::unordered_map<int, int> class_id;
  p.class_of.resize(n);
  for (int i = 0; i < n; ++i) {
    int root = find(first_index[codes[i]]);
    auto [it, fresh] = class_id.emplace(root, static_cast<int>(class_id.size()));
    if (fresh) p.unresolved.push_back(timed_out[root]);
    p.class_of[i] = it->second;
  }
  return p;
}

}  // namespace unknot
