#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unknot/diagram.hpp"
#include "unknot/invariants.hpp"
#include "unknot/moves.hpp"

namespace unknot {

// ---- certification ----

enum class CertifyStatus { Yes, NotUnknot, Unknown };
std::string to_string(CertifyStatus s);

struct CertifyBudget {
  int attempts = 3;         // independently seeded simplification runs
  bool level_only = false;  // restrict to R1/R2/R3 simplification
  GlobalBudget global{};
  int jones_cap = kDefaultBracketCap;
  std::uint64_t seed = 0;
};

struct Certificate {
  CertifyStatus status = CertifyStatus::Unknown;
  std::vector<Move> trace;  // for Yes: replays the input to the empty diagram
  std::string reason;
};

/// Yes from a simplification to zero crossings, NotUnknot from a nontrivial Alexander
/// or Jones polynomial, otherwise Unknown.
Certificate certify_unknot(const Diagram& d, const CertifyBudget& budget = {});

/// Cheap positive check used inside episodes: simplification only.
bool simplifies_to_unknot(const Diagram& d, const CertifyBudget& budget = {});

// ---- environment ----

enum class RewardScheme { Terminal, PerSwitch };

struct EnvConfig {
  int max_steps = 30;
  RewardScheme reward = RewardScheme::Terminal;
  bool simplify_states = true;  // present the level-simplified diagram as the state
  FingerprintMode revisit = FingerprintMode::None;
  std::vector<int> forced;  // start-diagram crossings that must be switched
  CertifyBudget certify{};
  bool compute_features = false;
  FeatureConfig features{};
  std::uint64_t simplify_seed = 0;
};

enum class Outcome { Unknotted, Exhausted, Unknown };
std::string to_string(Outcome o);

struct Trajectory {
  std::vector<int> ordered;  // switched crossings, ids of the start diagram
  std::vector<int> reduced;  // crossings switched an odd number of times, ascending
  Outcome outcome = Outcome::Unknown;
  bool forced_satisfied = true;
  bool replayable = true;  // reduced set applied to the start diagram reproduces the result
  int certificate_len = 0;
  /// Reduced size when replayable, otherwise the raw number of switches.
  int length() const { return static_cast<int>(replayable ? reduced.size() : ordered.size()); }
};

struct EnvState {
  Diagram diagram;          // what the agent sees
  std::vector<int> origin;  // per crossing of `diagram`: crossing id in the start diagram
  Fingerprint fingerprint;
  FeatureVector features;
  int simplify_moves = 0;   // moves from start-with-switches to `diagram`
};

struct StepResult {
  EnvState state;
  double reward;
  bool done;
};

/// Crossing-change MDP. The state after switching the set S is the (optionally
/// simplified) start diagram with S changed, so every reported set replays exactly.
class Environment {
public:
  explicit Environment(EnvConfig config = {});

  const EnvState& reset(const Diagram& start);
  StepResult step(int action);

  const EnvState& state() const { return state_; }
  bool done() const { return done_; }
  int steps() const { return steps_; }
  double total_reward() const { return total_reward_; }
  const EnvConfig& config() const { return config_; }
  const Diagram& start() const { return start_; }

  /// Action ids (crossing indices of the state diagram) not masked by the revisit filter.
  std::vector<int> legal_actions();
  /// State that `action` would lead to, without taking the step.
  EnvState preview(int action) const;
  Trajectory trajectory() const;

private:
  EnvState build_state(const std::vector<char>& toggled) const;
  std::optional<int> certified_unknot(const EnvState& s) const;

  EnvConfig config_;
  Diagram start_;
  std::vector<char> toggled_;
  std::vector<int> ordered_;
  EnvState state_;
  int steps_ = 0;
  double total_reward_ = 0;
  bool done_ = false;
  bool unknotted_ = false;
  bool exhausted_ = false;
  int certificate_len_ = 0;
  std::set<Fingerprint> visited_;
};

// ---- brute force ----

class WorkBudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  int size = -1;  // diagram unknotting number, -1 when not found within max_size
  std::vector<std::vector<int>> sets;  // every minimal unknotting set
  bool complete = true;                // no Unknown certification at or below `size`
  long long tested = 0;
};

/// Subsets by increasing size, never testing a set together with its complement.
BruteForceResult brute_force_min_unknotting(const Diagram& d, int max_size,
                                            const CertifyBudget& budget = {},
                                            long long work_cap = 5'000'000);

// ---- strategies ----

enum class StrategyKind { Random, WeightedRandom, SimplifyRandom, SimplifyMinCrossing };
std::string to_string(StrategyKind k);
StrategyKind strategy_from_string(const std::string& s);

/// Sampling weights for R1-, R1+, R2-, R2+, R3 and crossing switch.
using CategoryWeights = std::array<int, 6>;

struct StrategyConfig {
  StrategyKind kind = StrategyKind::SimplifyMinCrossing;
  CategoryWeights weights{100, 1, 100, 1, 100, 1};
  int max_steps = 30;         // crossing changes per episode
  int max_moves = 400;        // total moves per WeightedRandom episode
  int growth_allowance = 20;  // WeightedRandom may exceed the start size by this much
  FingerprintMode revisit = FingerprintMode::None;
  std::vector<int> forced;
  CertifyBudget certify{};
};

Trajectory run_episode(const Diagram& d, const StrategyConfig& config, std::uint64_t seed);
/// Best (shortest unknotting) trajectory over `repeats` seeded episodes.
Trajectory run_strategy(const Diagram& d, const StrategyConfig& config, std::uint64_t seed, int repeats);

/// Fitness of weights: mean per-switch reward over the validation set.
double weight_fitness(const std::vector<Diagram>& validation, const CategoryWeights& weights,
                      std::uint64_t seed, const StrategyConfig& base = {});
/// Random search over [1, 100]^6 in place of Bayesian optimisation.
CategoryWeights search_weights(const std::vector<Diagram>& validation, int trials, std::uint64_t seed,
                               const StrategyConfig& base = {});

// ---- tabular Q-learning ----

struct QLearningConfig {
  double alpha = 0.5;
  double gamma = 0.9;
  double epsilon = 0.2;
  int episodes = 200;
  int max_steps = 10;
};

struct QTable {
  std::map<std::string, std::map<int, double>> values;  // state key -> action -> Q
  double get(const std::string& state, int action) const;
  bool knows(const std::string& state) const;
};

std::string q_state_key(const EnvState& s);
QTable q_train(const std::vector<Diagram>& instances, const QLearningConfig& config, std::uint64_t seed);
Trajectory q_solve(const Diagram& d, const QTable& table, int max_steps = 10);

// ---- trajectories ----

/// Switches the first k crossings of `sequence` and globally simplifies.
Diagram trajectory_intermediate(const Diagram& d, const std::vector<int>& sequence, int k,
                                std::uint64_t seed = 0);
/// Intermediates after 0..k switches.
std::vector<Diagram> trajectory_intermediates(const Diagram& d, const std::vector<int>& sequence, int k,
                                              std::uint64_t seed = 0);

}  // namespace unknot
