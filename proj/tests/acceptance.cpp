// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "unknot/appendix_data.hpp"
#include "unknot/braid.hpp"
#include "unknot/commands.hpp"
#include "unknot/hardness.hpp"
#include "unknot/invariants.hpp"
#include "unknot/moves.hpp"
#include "unknot/unknotting.hpp"

using namespace unknot;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// ---- 1: 42-crossing hard unknot ----

Verdict hard_unknot() {
  Verdict o;
  auto t0 = std::chrono::steady_clock::now();
  JobConfig c;
  c.command = "hardness";
  auto recs = json_lines(run_command(c, std::string(appendix::kHardUnknot42) + "\n").text);
  double t = seconds_since(t0);
  if (recs.empty() || recs[0]["verdict"] != "hard") return o.fail("verdict is not hard"), o;
  long long size = recs[0]["orbit_size"];
  if (size != 6225) o.fail("orbit size " + std::to_string(size));
  if (t > 120) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "hard, orbit 6225 including the start diagram, " + std::to_string(t) + " s";
  return o;
}

// ---- 2: appendix replay ----

Verdict appendix_replay() {
  Verdict o;
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    const char* name;
    const char* initial;
    const std::vector<int>& sequence;
    const char* simplified;
  };
  const Case cases[] = {
      {"12a898", appendix::k12a898Initial, appendix::k12a898Sequence, nullptr},
      {"12a916", appendix::k12a916Initial, appendix::k12aSequence, appendix::k12a916Simplified},
      {"12a999", appendix::k12a999Initial, appendix::k12aSequence, appendix::k12a999Simplified},
  };
  for (const auto& k : cases) {
    Diagram d = parse_pd(k.initial);
    Diagram switched = change_crossings(d, k.sequence);
    auto cert = certify_unknot(switched);
    if (cert.status != CertifyStatus::Yes) o.fail(std::string(k.name) + " sequence does not certify");
    else if (!replay(switched, cert.trace).empty()) o.fail(std::string(k.name) + " certificate does not replay");
    if (k.simplified) {
      Diagram listed = parse_pd(k.simplified);
      Diagram inter = trajectory_intermediate(d, appendix::k12aInitialSwitches,
                                              static_cast<int>(appendix::k12aInitialSwitches.size()));
      if (alexander(inter) != alexander(listed)) o.fail(std::string(k.name) + " intermediate Alexander differs");
      if (jones(inter) != jones(listed)) o.fail(std::string(k.name) + " intermediate Jones differs");
    }
  }
  double t = seconds_since(t0);
  if (t > 300) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "3 sequences certified (0-based indices), intermediates match, " + std::to_string(t) + " s";
  return o;
}

// ---- 3: torus knots ----

Verdict torus_knots() {
  Verdict o;
  for (int q : {3, 5, 7}) {
    auto r = brute_force_min_unknotting(closure(BraidWord{2, std::vector<int>(q, 1)}), q);
    if (r.size != (q - 1) / 2 || !r.complete)
      o.fail("T(2," + std::to_string(q) + ") gave " + std::to_string(r.size));
  }
  if (o.pass) o.detail = "u = 1, 2, 3 for q = 3, 5, 7";
  return o;
}

// ---- 4: slice-Bennequin ----

Verdict bennequin() {
  Verdict o;
  int checked = 0;
  std::uint64_t seed = 4000;
  while (checked < 200) {
    auto b = random_knot_braid(seed++, 2, kMaxBraidStrands, 12);
    auto bounds = slice_bennequin(b);
    if (bounds.simplified_crossings > 12) continue;
    auto r = brute_force_min_unknotting(closure(b), bounds.closure_crossings);
    if (!r.complete || r.size < 0) {
      o.fail("brute force incomplete for " + serialize_braid(b));
      break;
    }
    if (bounds.lower > 2 * r.size || 2 * r.size > bounds.upper) {
      o.fail("violation for " + serialize_braid(b) + ": u = " + std::to_string(r.size));
      break;
    }
    ++checked;
  }
  if (o.pass) o.detail = "200 braids, 0 violations";
  return o;
}

// ---- 5: invariance ----

Verdict invariance() {
  Verdict o;
  const MoveKind kinds[] = {MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus, MoveKind::R2Plus, MoveKind::R3};
  std::uint64_t seed = 5000;
  Rng rng(5);
  for (auto kind : kinds) {
    int applied = 0;
    while (applied < 200) {
      auto d = corpus::random_knot(seed++, 6, 6, 10);
      if (d.size() > 10) continue;
      auto moves = enumerate_moves(d, kind_bit(kind));
      if (moves.empty()) continue;
      auto after = apply_move(d, moves[rng.index(static_cast<int>(moves.size()))]);
      if (jones(after) != jones(d) || alexander(after) != alexander(d)) {
        o.fail(to_string(kind) + " changed an invariant on " + serialize_pd(d));
        return o;
      }
      ++applied;
    }
  }
  int states = 0;
  for (std::uint64_t s = 0; states < 50; ++s) {
    auto d = corpus::random_knot(s + 9000, 9, 5, 12);
    if (d.size() > 12 || d.empty()) continue;
    if (corpus::raw_terms(kauffman_bracket(d)) != oracle::state_sum_bracket(d)) {
      o.fail("bracket differs from the state sum on " + serialize_pd(d));
      return o;
    }
    BigInt det = determinant(d);
    if (abs_big(jones(d).evaluate_at_minus_one()) != det || abs_big(alexander(d).evaluate_at_minus_one()) != det) {
      o.fail("determinant identities fail on " + serialize_pd(d));
      return o;
    }
    ++states;
  }
  o.detail = "1000 moves, 50 state sums, determinant identities exact";
  return o;
}

// ---- 6: connected sums ----

Verdict connected_sums() {
  Verdict o;
  Rng rng(6);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto b1 = random_knot_braid(6000 + 2 * s, 2, 4, 8);
    auto b2 = random_knot_braid(6001 + 2 * s, 2, 4, 8);
    Diagram d1 = closure(b1), d2 = closure(b2);
    std::vector<Diagram> sums;
    if (!d1.empty() && !d2.empty()) {
      sums.push_back(connected_sum(d1, rng.index(2 * d1.size()), d2, rng.index(2 * d2.size())));
      OverlayConfig oc;
      oc.edge1 = rng.index(2 * d1.size());
      oc.edge2 = rng.index(2 * d2.size());
      sums.push_back(overlay_sum(d1, d2, oc));
    }
    sums.push_back(closure(braid_connected_sum(b1, b2)));
    for (const auto& d : sums) {
      if (determinant(d) != determinant(d1) * determinant(d2)) o.fail("determinant not multiplicative");
      if (signature(d) != signature(d1) + signature(d2)) o.fail("signature not additive");
      if (jones(d) != jones(d1) * jones(d2)) o.fail("Jones not multiplicative");
      if (!o.pass) {
        o.detail += " for " + serialize_braid(b1) + " / " + serialize_braid(b2);
        return o;
      }
    }
  }
  o.detail = "50 pairs under all three sums";
  return o;
}

// ---- 7: strategy ordering ----

// Mostly positive braids, so unknotting numbers reach well beyond 1.
std::vector<Diagram> strategy_corpus() {
  std::vector<Diagram> out;
  for (std::uint64_t s = 7000; out.size() < 200; ++s) {
    Rng rng(s);
    BraidWord b;
    b.strands = 2 + rng.index(3);
    const int len = 6 + rng.index(11);
    for (int i = 0; i < len; ++i) {
      int g = 1 + rng.index(b.strands - 1);
      b.letters.push_back(rng.uniform() < 0.15 ? -g : g);
    }
    if (!closure_is_knot(b)) continue;
    auto d = random_mix(closure(b), s, 4, 20);
    if (d.size() <= 20) out.push_back(d);
  }
  return out;
}

Verdict strategy_ordering() {
  Verdict o;
  auto corpus = strategy_corpus();
  std::vector<int> minimum(corpus.size(), -1);
  int known = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].size() > 12) continue;
    auto r = brute_force_min_unknotting(corpus[i], corpus[i].size());
    if (r.complete && r.size >= 0) minimum[i] = r.size, ++known;
  }
  const StrategyKind kinds[] = {StrategyKind::SimplifyMinCrossing, StrategyKind::SimplifyRandom,
                                StrategyKind::Random};
  double unsolved[3] = {0, 0, 0}, mean_length[3] = {0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    StrategyConfig sc;
    sc.kind = kinds[k];
    int fails = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto t = run_strategy(corpus[i], sc, 70 + i, 1);
      if (t.outcome != unknot::Outcome::Unknotted) {
        ++fails;
        continue;
      }
      mean_length[k] += t.length();
      if (minimum[i] >= 0 && t.length() < minimum[i])
        o.fail(to_string(kinds[k]) + " beat the brute-force minimum on corpus item " + std::to_string(i));
    }
    unsolved[k] = 100.0 * fails / corpus.size();
    if (fails < static_cast<int>(corpus.size())) mean_length[k] /= corpus.size() - fails;
  }
  if (!(unsolved[0] <= unsolved[1] && unsolved[1] <= unsolved[2])) o.fail("ordering violated");
  char buf[300];
  std::snprintf(buf, sizeof buf,
                "unsolved %%: min-crossing %.1f, simplify-random %.1f, random %.1f; mean length %.2f, %.2f, %.2f; "
                "%d minima known",
                unsolved[0], unsolved[1], unsolved[2], mean_length[0], mean_length[1], mean_length[2], known);
  o.detail = o.pass ? buf : o.detail + "; " + buf;
  return o;
}

// ---- 8: Q-learning ----

Verdict q_learning() {
  Verdict o;
  std::vector<Diagram> train;
  for (std::uint64_t s = 8000; train.size() < 10; ++s) {
    auto d = closure(random_knot_braid(s, 2, 4, 8));
    if (d.size() >= 3 && d.size() <= 8 && !global_simplify(d, 0).reached_trivial) train.push_back(d);
  }
  QLearningConfig cfg;
  cfg.episodes = 400;
  auto table = q_train(train, cfg, 8);
  for (auto& [state, row] : table.values)
    for (auto& [a, q] : row)
      if (q < 0.0 || q > 1.0) o.fail("Q value outside [0,1]");
  int matched = 0;
  for (const auto& d : train) {
    auto best = brute_force_min_unknotting(d, d.size());
    auto t = q_solve(d, table);
    if (t.outcome == unknot::Outcome::Unknotted && t.length() == best.size) ++matched;
  }
  if (matched < 8) o.fail("matched " + std::to_string(matched) + " of 10");
  if (o.pass) o.detail = "greedy policy matched the minimum on " + std::to_string(matched) + " of 10";
  return o;
}

// ---- 9: determinism ----

Verdict determinism() {
  Verdict o;
  std::string pd_lines, braid_lines = "strands=4\n";
  for (const auto& d : strategy_corpus()) {
    if (pd_lines.size() > 4000) break;
    if (d.size() <= 12) pd_lines += serialize_pd(d) + "\n";
  }
  for (std::uint64_t s = 0; s < 20; ++s) braid_lines += serialize_braid(random_knot_braid(s, 4, 4, 10)).substr(10) + "\n";
  std::string hard_lines = std::string(appendix::kHardUnknot42) + "\n[[0,0,1,1]]\n";

  std::vector<JobConfig> jobs;
  for (auto cmd : {"invariants", "simplify", "unknot", "brute"}) {
    JobConfig c;
    c.command = cmd;
    c.seed = 99;
    jobs.push_back(c);
  }
  JobConfig random_unknot = jobs[2];
  random_unknot.strategy = "random";
  jobs.push_back(random_unknot);
  JobConfig bounds;
  bounds.command = "braid";
  bounds.subcommand = "mix";
  bounds.seed = 99;
  jobs.push_back(bounds);
  JobConfig hard;
  hard.command = "hardness";
  hard.seed = 99;
  jobs.push_back(hard);

  for (auto job : jobs) {
    const std::string& input = job.command == "braid" ? braid_lines : job.command == "hardness" ? hard_lines : pd_lines;
    job.jobs = 1;
    auto a = run_command(job, input).text;
    auto b = run_command(job, input).text;
    job.jobs = 8;
    auto c = run_command(job, input).text;
    if (a != b) o.fail(job.command + " differs between runs");
    if (a != c) o.fail(job.command + " differs between 1 and 8 jobs");
  }
  JobConfig rep;
  if (replay_appendix(rep).text != replay_appendix(rep).text) o.fail("replay-appendix differs between runs");
  if (o.pass) o.detail = "8 jobs byte-identical across reruns and 1 vs 8 workers";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"42-crossing hard unknot", hard_unknot},
      {"appendix trajectories", appendix_replay},
      {"torus knot unknotting numbers", torus_knots},
      {"slice-Bennequin bounds", bennequin},
      {"invariance suite", invariance},
      {"connected-sum algebra", connected_sums},
      {"strategy ordering", strategy_ordering},
      {"Q-learning", q_learning},
      {"determinism", determinism},
  };
  int failures = 0, id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    if (!only.empty() && !only.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Verdict r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
