#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unknot {

/// Everything a batch job depends on. Identical config and input give identical output.
struct JobConfig {
  std::string command;     // validate, invariants, simplify, unknot, brute, braid, hardness, orbit
  std::string subcommand;  // braid: closure, bounds, sum, mix
  std::uint64_t seed = 0;
  int jobs = 1;
  int max_crossings = 400;

  // simplify
  std::string mode = "global";  // level | global
  int max_r3 = 1000;

  // unknot
  std::string strategy = "simplify-min-crossing";
  int repeats = 10;
  int max_steps = 30;
  std::string revisit = "none";
  std::vector<int> forced;
  std::vector<int> replay;
  bool has_replay = false;

  // brute
  int max_size = 6;

  // braid mix
  int count = 3;

  // hardness / orbit
  int retries = 25;
  double timeout = 120.0;
  long long max_diagrams = 100000;
  bool filter = true;

  std::string to_json() const;
};

struct CommandOutput {
  std::string text;  // JSON lines
  int exit_code = 0;
};

/// Runs a batch command over the input text (one item per line, `#` starts a comment).
CommandOutput run_command(const JobConfig& config, const std::string& input);

/// End-to-end replay of the published unknotting trajectories.
CommandOutput replay_appendix(const JobConfig& config);

/// Parallelism default from the environment (UNKNOT_JOBS), else 1.
int default_jobs();

}  // namespace unknot
