#include "unknot/unknotting.hpp"

#include <algorithm>
#include <limits>

#include "unknot/rng.hpp"

namespace unknot {

std::string to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Yes: return "yes";
    case CertifyStatus::NotUnknot: return "not-unknot";
    case CertifyStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Unknotted: return "unknotted";
    case Outcome::Exhausted: return "exhausted";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t k) { return Rng::mix(seed ^ Rng::mix(k + 1)); }

SimplifyReport simplify_attempt(const Diagram& d, const CertifyBudget& budget, int k) {
  auto seed = attempt_seed(budget.seed, static_cast<std::uint64_t>(k));
  return budget.level_only ? level_simplify(d, seed, budget.global.max_r3)
                           : global_simplify(d, seed, budget.global);
}

}  // namespace

bool simplifies_to_unknot(const Diagram& d, const CertifyBudget& budget) {
  if (d.empty()) return true;
  for (int k = 0; k < std::max(budget.attempts, 1); ++k)
    if (simplify_attempt(d, budget, k).reached_trivial) return true;
  return false;
}

Certificate certify_unknot(const Diagram& d, const CertifyBudget& budget) {
  require_knot(d);
  Certificate cert;
  if (d.empty()) {
    cert.status = CertifyStatus::Yes;
    return cert;
  }
  Diagram smallest = d;
  for (int k = 0; k < std::max(budget.attempts, 1); ++k) {
    auto rep = simplify_attempt(d, budget, k);
    if (rep.reached_trivial) {
      cert.status = CertifyStatus::Yes;
      cert.trace = std::move(rep.trace);
      return cert;
    }
    if (rep.final.size() < smallest.size()) smallest = rep.final;
  }
  if (!alexander(smallest).is_one()) {
    cert.status = CertifyStatus::NotUnknot;
    cert.reason = "nontrivial Alexander polynomial";
    return cert;
  }
  try {
    if (!jones(smallest, budget.jones_cap).is_one()) {
      cert.status = CertifyStatus::NotUnknot;
      cert.reason = "nontrivial Jones polynomial";
      return cert;
    }
    cert.reason = "trivial polynomials, simplification failed";
  } catch (const BracketCapError& e) {
    cert.reason = e.what();
  }
  return cert;
}

// ---------------------------------------------------------------------------

Environment::Environment(EnvConfig config) : config_(std::move(config)) {}

EnvState Environment::build_state(const std::vector<char>& toggled) const {
  std::vector<int> switched;
  for (int i = 0; i < static_cast<int>(toggled.size()); ++i)
    if (toggled[i]) switched.push_back(i);
  Diagram d = change_crossings(start_, switched);
  EnvState s;
  if (config_.simplify_states) {
    auto rep = level_simplify(d, config_.simplify_seed, config_.certify.global.max_r3);
    s.diagram = std::move(rep.final);
    s.origin = std::move(rep.origin);
    s.simplify_moves = static_cast<int>(rep.trace.size());
  } else {
    s.diagram = std::move(d);
    s.origin.resize(s.diagram.size());
    for (int i = 0; i < s.diagram.size(); ++i) s.origin[i] = i;
  }
  if (config_.revisit != FingerprintMode::None)
    s.fingerprint = fingerprint(s.diagram, config_.revisit, config_.certify.jones_cap);
  if (config_.compute_features) s.features = feature_vector(s.diagram, config_.features);
  return s;
}

std::optional<int> Environment::certified_unknot(const EnvState& s) const {
  if (s.diagram.empty()) return s.simplify_moves;
  for (int k = 0; k < std::max(config_.certify.attempts, 1); ++k) {
    auto rep = simplify_attempt(s.diagram, config_.certify, k);
    if (rep.reached_trivial) return s.simplify_moves + static_cast<int>(rep.trace.size());
  }
  return std::nullopt;
}

const EnvState& Environment::reset(const Diagram& start) {
  require_knot(start);
  start_ = start;
  toggled_.assign(start.size(), 0);
  ordered_.clear();
  visited_.clear();
  steps_ = 0;
  total_reward_ = 0;
  done_ = unknotted_ = exhausted_ = false;
  certificate_len_ = 0;
  for (int f : config_.forced) {
    if (f < 0 || f >= start.size()) throw std::out_of_range("forced crossing out of range");
    toggled_[f] ^= 1;
    ordered_.push_back(f);
  }
  state_ = build_state(toggled_);
  if (config_.revisit != FingerprintMode::None) visited_.insert(state_.fingerprint);
  if (auto len = certified_unknot(state_)) {
    done_ = unknotted_ = true;
    certificate_len_ = *len;
  }
  return state_;
}

EnvState Environment::preview(int action) const {
  if (action < 0 || action >= state_.diagram.size()) throw std::out_of_range("action out of range");
  auto toggled = toggled_;
  toggled[state_.origin[action]] ^= 1;
  return build_state(toggled);
}

std::vector<int> Environment::legal_actions() {
  std::vector<int> out;
  for (int a = 0; a < state_.diagram.size(); ++a) {
    if (config_.revisit != FingerprintMode::None && visited_.count(preview(a).fingerprint)) continue;
    out.push_back(a);
  }
  return out;
}

StepResult Environment::step(int action) {
  if (done_) throw std::logic_error("episode already finished");
  if (action < 0 || action >= state_.diagram.size()) throw std::out_of_range("action out of range");
  int id = state_.origin[action];
  toggled_[id] ^= 1;
  ordered_.push_back(id);
  ++steps_;
  state_ = build_state(toggled_);
  if (config_.revisit != FingerprintMode::None) visited_.insert(state_.fingerprint);

  double reward = config_.reward == RewardScheme::PerSwitch ? -1.0 : 0.0;
  if (auto len = certified_unknot(state_)) {
    done_ = unknotted_ = true;
    certificate_len_ = *len;
    if (config_.reward == RewardScheme::Terminal) reward = 1.0;
  } else if (steps_ >= config_.max_steps) {
    done_ = exhausted_ = true;
  } else if (config_.revisit != FingerprintMode::None && legal_actions().empty()) {
    done_ = exhausted_ = true;
  }
  total_reward_ += reward;
  return {state_, reward, done_};
}

Trajectory Environment::trajectory() const {
  Trajectory t;
  t.ordered = ordered_;
  for (int i = 0; i < static_cast<int>(toggled_.size()); ++i)
    if (toggled_[i]) t.reduced.push_back(i);
  t.outcome = unknotted_ ? Outcome::Unknotted : exhausted_ ? Outcome::Exhausted : Outcome::Unknown;
  for (int f : config_.forced)
    if (!toggled_[f]) t.forced_satisfied = false;
  t.certificate_len = certificate_len_;
  return t;
}

// ---------------------------------------------------------------------------

BruteForceResult brute_force_min_unknotting(const Diagram& d, int max_size, const CertifyBudget& budget,
                                            long long work_cap) {
  require_knot(d);
  const int n = d.size();
  const int top = std::min(max_size, n / 2);
  // Estimated number of certifications.
  long double work = 0, binom = 1;
  for (int k = 0; k <= top; ++k) {
    work += (2 * k == n) ? binom / 2 : binom;
    binom = binom * (n - k) / (k + 1);
  }
  if (work > static_cast<long double>(work_cap))
    throw WorkBudgetError("brute force would need about " + std::to_string(static_cast<long long>(work)) +
                          " certifications");

  BruteForceResult result;
  for (int k = 0; k <= top; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool any_unknown = false;
    while (true) {
      bool half_and_duplicate = 2 * k == n && k > 0 && idx[0] != 0;
      if (!half_and_duplicate) {
        ++result.tested;
        auto cert = certify_unknot(change_crossings(d, idx), budget);
        if (cert.status == CertifyStatus::Yes) {
          result.sets.push_back(idx);
          if (2 * k == n) {
            std::vector<int> complement;
            for (int c = 0, j = 0; c < n; ++c) {
              if (j < k && idx[j] == c) ++j;
              else complement.push_back(c);
            }
            result.sets.push_back(complement);
          }
        } else if (cert.status == CertifyStatus::Unknown) {
          any_unknown = true;
        }
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (any_unknown) result.complete = false;
    if (!result.sets.empty()) {
      std::sort(result.sets.begin(), result.sets.end());
      result.size = k;
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::Random: return "random";
    case StrategyKind::WeightedRandom: return "weighted-random";
    case StrategyKind::SimplifyRandom: return "simplify-random";
    case StrategyKind::SimplifyMinCrossing: return "simplify-min-crossing";
  }
  return "?";
}

StrategyKind strategy_from_string(const std::string& s) {
  for (auto k : {StrategyKind::Random, StrategyKind::WeightedRandom, StrategyKind::SimplifyRandom,
                 StrategyKind::SimplifyMinCrossing})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

namespace {

int pick_min_crossing(Environment& env, const std::vector<int>& actions, Rng& rng) {
  int best_size = std::numeric_limits<int>::max();
  std::vector<int> best;
  for (int a : actions) {
    int size = env.preview(a).diagram.size();
    if (size < best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.push_back(a);
  }
  return best[rng.index(static_cast<int>(best.size()))];
}

Trajectory weighted_episode(const Diagram& d, const StrategyConfig& config, std::uint64_t seed) {
  static constexpr MoveKind kinds[5] = {MoveKind::R1Minus, MoveKind::R1Plus, MoveKind::R2Minus,
                                        MoveKind::R2Plus, MoveKind::R3};
  Rng rng(seed);
  const int n = d.size();
  Diagram cur = d;
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  int next_fresh = n;
  std::vector<int> forced = config.forced;
  Trajectory t;
  for (int f : forced) {
    cur = change_crossing(cur, f);
    t.ordered.push_back(f);
  }
  CertifyBudget quick = config.certify;
  quick.level_only = true;
  quick.attempts = 1;

  bool unknotted = cur.empty() || simplifies_to_unknot(cur, quick);
  int switches = static_cast<int>(forced.size());
  for (int moves = 0; !unknotted && moves < config.max_moves && switches < config.max_steps; ++moves) {
    std::vector<std::vector<Move>> options(5);
    long long total = 0;
    std::array<long long, 6> weight{};
    for (int k = 0; k < 5; ++k) {
      int growth = kinds[k] == MoveKind::R1Plus ? 1 : kinds[k] == MoveKind::R2Plus ? 2 : 0;
      if (cur.size() + growth > n + config.growth_allowance) continue;
      options[k] = enumerate_moves(cur, kind_bit(kinds[k]));
      if (!options[k].empty()) weight[k] = config.weights[k];
    }
    if (!cur.empty()) weight[5] = config.weights[5];
    for (auto w : weight) total += w;
    if (total == 0) break;
    long long r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(total)));
    int category = 0;
    while (r >= weight[category]) r -= weight[category++];

    if (category == 5) {
      int c = rng.index(cur.size());
      cur = change_crossing(cur, c);
      t.ordered.push_back(ids[c]);
      ++switches;
      unknotted = simplifies_to_unknot(cur, quick);
      continue;
    }
    const auto& pool = options[category];
    auto res = apply_move_tracked(cur, pool[rng.index(static_cast<int>(pool.size()))]);
    std::vector<int> next_ids(res.origin.size());
    for (std::size_t i = 0; i < res.origin.size(); ++i)
      next_ids[i] = res.origin[i] >= 0 ? ids[res.origin[i]] : next_fresh++;
    ids = std::move(next_ids);
    cur = std::move(res.diagram);
    unknotted = cur.empty();
  }

  std::map<int, int> parity;
  for (int id : t.ordered) parity[id] ^= 1;
  bool all_original = true;
  for (auto [id, odd] : parity)
    if (odd) {
      t.reduced.push_back(id);
      if (id >= n) all_original = false;
    }
  t.outcome = unknotted ? Outcome::Unknotted : Outcome::Exhausted;
  t.replayable = !unknotted || (all_original && simplifies_to_unknot(change_crossings(d, t.reduced), config.certify));
  if (!all_original) t.replayable = false;
  for (int f : forced)
    if (!parity[f]) t.forced_satisfied = false;
  return t;
}

}  // namespace

Trajectory run_episode(const Diagram& d, const StrategyConfig& config, std::uint64_t seed) {
  if (config.kind == StrategyKind::WeightedRandom) return weighted_episode(d, config, seed);
  EnvConfig ec;
  ec.max_steps = config.max_steps;
  ec.simplify_states = config.kind != StrategyKind::Random;
  ec.revisit = config.revisit;
  ec.forced = config.forced;
  ec.certify = config.certify;
  Environment env(ec);
  env.reset(d);
  Rng rng(seed);
  while (!env.done()) {
    auto actions = env.legal_actions();
    if (actions.empty()) break;
    int a = config.kind == StrategyKind::SimplifyMinCrossing
                ? pick_min_crossing(env, actions, rng)
                : actions[rng.index(static_cast<int>(actions.size()))];
    env.step(a);
  }
  auto t = env.trajectory();
  if (!env.done()) t.outcome = Outcome::Exhausted;
  return t;
}

Trajectory run_strategy(const Diagram& d, const StrategyConfig& config, std::uint64_t seed, int repeats) {
  std::optional<Trajectory> best;
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    auto t = run_episode(d, config, attempt_seed(seed, static_cast<std::uint64_t>(r)));
    bool better = !best || (t.outcome == Outcome::Unknotted &&
                            (best->outcome != Outcome::Unknotted || t.length() < best->length()));
    if (better) best = std::move(t);
  }
  return *best;
}

double weight_fitness(const std::vector<Diagram>& validation, const CategoryWeights& weights,
                      std::uint64_t seed, const StrategyConfig& base) {
  if (validation.empty()) return 0.0;
  StrategyConfig cfg = base;
  cfg.kind = StrategyKind::WeightedRandom;
  cfg.weights = weights;
  double total = 0;
  for (std::size_t i = 0; i < validation.size(); ++i) {
    auto t = run_episode(validation[i], cfg, attempt_seed(seed, i));
    total -= static_cast<double>(t.ordered.size());
  }
  return total / static_cast<double>(validation.size());
}

CategoryWeights search_weights(const std::vector<Diagram>& validation, int trials, std::uint64_t seed,
                               const StrategyConfig& base) {
  Rng rng(seed);
  CategoryWeights best = base.weights;
  double best_fitness = weight_fitness(validation, best, seed, base);
  for (int trial = 0; trial < trials; ++trial) {
    CategoryWeights w;
    for (auto& x : w) x = 1 + rng.index(100);
    double f = weight_fitness(validation, w, seed, base);
    if (f > best_fitness) {
      best_fitness = f;
      best = w;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

double QTable::get(const std::string& state, int action) const {
  auto it = values.find(state);
  if (it == values.end()) return 0.0;
  auto jt = it->second.find(action);
  return jt == it->second.end() ? 0.0 : jt->second;
}

bool QTable::knows(const std::string& state) const { return values.count(state) != 0; }

std::string q_state_key(const EnvState& s) { return fingerprint(s.diagram, FingerprintMode::Both).key; }

namespace {

EnvConfig q_env_config(int max_steps) {
  EnvConfig ec;
  ec.max_steps = max_steps;
  ec.reward = RewardScheme::Terminal;
  ec.simplify_states = true;
  return ec;
}

double max_q(const QTable& table, const std::string& key, int actions) {
  double m = 0.0;
  for (int a = 0; a < actions; ++a) m = std::max(m, table.get(key, a));
  return m;
}

}  // namespace

QTable q_train(const std::vector<Diagram>& instances, const QLearningConfig& config, std::uint64_t seed) {
  QTable table;
  if (instances.empty()) return table;
  Rng rng(seed);
  Environment env(q_env_config(config.max_steps));
  for (int ep = 0; ep < config.episodes; ++ep) {
    env.reset(instances[static_cast<std::size_t>(ep) % instances.size()]);
    std::string key = q_state_key(env.state());
    while (!env.done()) {
      const int n = env.state().diagram.size();
      int a;
      if (rng.uniform() < config.epsilon) {
        a = rng.index(n);
      } else {
        double best = -1;
        std::vector<int> ties;
        for (int x = 0; x < n; ++x) {
          double q = table.get(key, x);
          if (q > best) {
            best = q;
            ties.clear();
          }
          if (q == best) ties.push_back(x);
        }
        a = ties[rng.index(static_cast<int>(ties.size()))];
      }
      auto res = env.step(a);
      std::string next = q_state_key(res.state);
      double target = res.reward;
      if (!res.done) target += config.gamma * max_q(table, next, res.state.diagram.size());
      double& q = table.values[key][a];
      q += config.alpha * (target - q);
      key = std::move(next);
    }
  }
  return table;
}

Trajectory q_solve(const Diagram& d, const QTable& table, int max_steps) {
  Environment env(q_env_config(max_steps));
  env.reset(d);
  Rng rng(0);
  while (!env.done()) {
    std::string key = q_state_key(env.state());
    const int n = env.state().diagram.size();
    int a = -1;
    double best = 0.0;
    if (table.knows(key))
      for (int x = 0; x < n; ++x)
        if (table.get(key, x) > best) {
          best = table.get(key, x);
          a = x;
        }
    if (a < 0) {
      std::vector<int> all(n);
      for (int x = 0; x < n; ++x) all[x] = x;
      a = pick_min_crossing(env, all, rng);
    }
    env.step(a);
  }
  return env.trajectory();
}

// ---------------------------------------------------------------------------

Diagram trajectory_intermediate(const Diagram& d, const std::vector<int>& sequence, int k, std::uint64_t seed) {
  if (k < 0 || k > static_cast<int>(sequence.size())) throw std::out_of_range("prefix longer than sequence");
  std::vector<int> prefix(sequence.begin(), sequence.begin() + k);
  return global_simplify(change_crossings(d, prefix), seed).final;
}

std::vector<Diagram> trajectory_intermediates(const Diagram& d, const std::vector<int>& sequence, int k,
                                              std::uint64_t seed) {
  std::vector<Diagram> out;
  for (int i = 0; i <= k; ++i) out.push_back(trajectory_intermediate(d, sequence, i, seed));
  return out;
}

}  // namespace unknot
