#include <doctest.h>

#include "corpus.hpp"
#include "unknot/unknotting.hpp"

using namespace unknot;

namespace {
const char* kTrefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const char* kFigureEight = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

Diagram t23() { return closure(BraidWord{2, {1, 1, 1, 1, 1}}); }
}  // namespace

TEST_CASE("certification") {
  CHECK(certify_unknot(Diagram{}).status == CertifyStatus::Yes);
  auto kink = parse_pd("[[0,0,1,1]]");
  auto c = certify_unknot(random_mix(kink, 2, 15, 10));
  CHECK(c.status == CertifyStatus::Yes);
  CHECK(certify_unknot(parse_pd(kTrefoil)).status == CertifyStatus::NotUnknot);
  auto fig8 = certify_unknot(parse_pd(kFigureEight));
  CHECK(fig8.status == CertifyStatus::NotUnknot);
  CHECK(fig8.reason.find("Alexander") != std::string::npos);
}

TEST_CASE("certificate traces replay to the empty diagram") {
  auto t = parse_pd(kTrefoil);
  for (int i = 0; i < 3; ++i) {
    auto d = change_crossing(t, i);
    auto c = certify_unknot(d);
    REQUIRE(c.status == CertifyStatus::Yes);
    CHECK(replay(d, c.trace).empty());
  }
}

TEST_CASE("environment steps, rewards and trajectories") {
  EnvConfig cfg;
  cfg.max_steps = 5;
  Environment env(cfg);
  env.reset(parse_pd(kTrefoil));
  CHECK_FALSE(env.done());
  CHECK(env.state().diagram.size() == 3);
  auto r = env.step(1);
  CHECK(r.done);
  CHECK(r.reward == 1.0);
  auto t = env.trajectory();
  CHECK(t.outcome == Outcome::Unknotted);
  CHECK(t.reduced == std::vector<int>{1});
  CHECK(t.length() == 1);
  CHECK_THROWS(env.step(0));
}

TEST_CASE("per-switch reward and exhaustion") {
  EnvConfig cfg;
  cfg.max_steps = 2;
  cfg.reward = RewardScheme::PerSwitch;
  cfg.simplify_states = false;
  Environment env(cfg);
  env.reset(t23());
  env.step(0);
  auto r = env.step(0);  // undo: back to T(2,5)
  CHECK(r.done);
  CHECK(env.total_reward() == -2.0);
  auto t = env.trajectory();
  CHECK(t.outcome == Outcome::Exhausted);
  CHECK(t.reduced.empty());
  CHECK(t.ordered.size() == 2);
}

TEST_CASE("actions map back to start crossings") {
  auto d = random_mix(t23(), 9, 12, 14);
  Environment env;
  env.reset(d);
  for (int step = 0; step < 3 && !env.done(); ++step) {
    auto before = env.trajectory().reduced;
    int a = step % env.state().diagram.size();
    int id = env.state().origin[a];
    env.step(a);
    auto t = env.trajectory();
    auto expected = before;
    auto it = std::find(expected.begin(), expected.end(), id);
    if (it == expected.end()) expected.push_back(id), std::sort(expected.begin(), expected.end());
    else expected.erase(it);
    CHECK(t.reduced == expected);
  }
}

TEST_CASE("revisit filter masks seen states") {
  EnvConfig cfg;
  cfg.revisit = FingerprintMode::Both;
  Environment env(cfg);
  env.reset(t23());
  env.step(0);
  for (int a : env.legal_actions()) CHECK(env.preview(a).fingerprint != fingerprint(t23(), FingerprintMode::Both));
}

TEST_CASE("forced crossings") {
  EnvConfig cfg;
  cfg.forced = {0};
  Environment env(cfg);
  env.reset(t23());
  CHECK(env.trajectory().ordered == std::vector<int>{0});
  CHECK(env.state().diagram.size() == 3);
  StrategyConfig sc;
  sc.forced = {2};
  auto t = run_strategy(t23(), sc, 1, 3);
  CHECK(t.forced_satisfied);
  CHECK(std::find(t.reduced.begin(), t.reduced.end(), 2) != t.reduced.end());
}

TEST_CASE("brute force on small fixtures") {
  auto tref = brute_force_min_unknotting(parse_pd(kTrefoil), 6);
  CHECK(tref.size == 1);
  CHECK(tref.sets.size() == 3);
  auto fig8 = brute_force_min_unknotting(parse_pd(kFigureEight), 6);
  CHECK(fig8.size == 1);
  auto unknot = brute_force_min_unknotting(parse_pd("[[0,0,1,1]]"), 6);
  CHECK(unknot.size == 0);
  auto five = brute_force_min_unknotting(t23(), 6);
  CHECK(five.size == 2);
  CHECK(five.complete);
  CHECK(five.tested <= 16);
  CHECK_THROWS_AS(brute_force_min_unknotting(t23(), 6, {}, 3), WorkBudgetError);
}

TEST_CASE("strategies never beat brute force") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    auto d = corpus::random_knot(s, 9);
    auto best = brute_force_min_unknotting(d, 9);
    REQUIRE(best.complete);
    for (auto kind : {StrategyKind::Random, StrategyKind::SimplifyRandom, StrategyKind::SimplifyMinCrossing,
                      StrategyKind::WeightedRandom}) {
      StrategyConfig sc;
      sc.kind = kind;
      auto t = run_strategy(d, sc, s, 3);
      CHECK(strategy_from_string(to_string(kind)) == kind);
      if (t.outcome == Outcome::Unknotted && t.replayable) {
        CHECK(t.length() >= best.size);
        CHECK(certify_unknot(change_crossings(d, t.reduced)).status == CertifyStatus::Yes);
      }
    }
  }
}

TEST_CASE("min-crossing strategy unknots the trefoil in one switch") {
  auto t = run_strategy(parse_pd(kTrefoil), StrategyConfig{}, 0, 1);
  CHECK(t.outcome == Outcome::Unknotted);
  CHECK(t.length() == 1);
  auto u = run_strategy(parse_pd("[[0,0,1,1]]"), StrategyConfig{}, 0, 1);
  CHECK(u.length() == 0);
}

TEST_CASE("weight search is deterministic") {
  std::vector<Diagram> val{parse_pd(kTrefoil), t23()};
  auto w1 = search_weights(val, 3, 7);
  auto w2 = search_weights(val, 3, 7);
  CHECK(w1 == w2);
  for (int w : w1) {
    CHECK(w >= 1);
    CHECK(w <= 100);
  }
  CHECK(weight_fitness(val, w1, 7) <= 0.0);
}

TEST_CASE("Q-learning on the trefoil picks an unknotting crossing") {
  QLearningConfig cfg;
  cfg.episodes = 60;
  auto table = q_train({parse_pd(kTrefoil)}, cfg, 3);
  for (auto& [state, row] : table.values)
    for (auto& [a, q] : row) {
      CHECK(q >= 0.0);
      CHECK(q <= 1.0);
    }
  auto t = q_solve(parse_pd(kTrefoil), table);
  CHECK(t.outcome == Outcome::Unknotted);
  CHECK(t.length() == 1);
}

TEST_CASE("trajectory intermediates") {
  auto d = t23();
  auto steps = trajectory_intermediates(d, {0, 2}, 2);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].size() == 5);
  CHECK(steps[1].size() == 3);
  CHECK(steps[2].size() == 0);
  CHECK(trajectory_intermediate(d, {0, 2}, 1) == steps[1]);
}

TEST_CASE("trajectory lengths respect the signature bound") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto d = closure(BraidWord{3, {1, 1, 1, 1, 1, 2, 2, 2}});
    if (s) d = random_mix(d, s, 4, 20);
    auto t = run_strategy(d, StrategyConfig{}, s, 2);
    REQUIRE(t.outcome == Outcome::Unknotted);
    CHECK(2 * t.length() >= std::abs(signature(d)));
  }
}
