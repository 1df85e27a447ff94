#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unknot/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(s);
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  unknot::JobConfig cfg;
  cfg.jobs = unknot::default_jobs();
  std::string input_path, output_path, forced, replay;

  CLI::App app{"Knot diagram engine"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_option("--jobs", cfg.jobs, "Worker threads (default from UNKNOT_JOBS)");
  app.add_option("--max-crossings", cfg.max_crossings, "Reject diagrams with more crossings");
  app.add_option("-o,--output", output_path, "Write JSON lines here instead of stdout");

  auto with_input = [&](CLI::App* sub) { sub->add_option("input", input_path, "Input file, '-' for stdin"); };

  auto* validate = app.add_subcommand("validate", "Parse and validate PD codes");
  with_input(validate);
  auto* invariants = app.add_subcommand("invariants", "Polynomials, determinant, signature, features");
  with_input(invariants);
  auto* simplify = app.add_subcommand("simplify", "Reidemeister simplification");
  with_input(simplify);
  simplify->add_option("--mode", cfg.mode, "level or global")->check(CLI::IsMember({"level", "global"}));
  simplify->add_option("--max-r3", cfg.max_r3);
  auto* unknot_cmd = app.add_subcommand("unknot", "Search for unknotting crossing changes");
  with_input(unknot_cmd);
  unknot_cmd->add_option("--strategy", cfg.strategy)
      ->check(CLI::IsMember({"random", "weighted-random", "simplify-random", "simplify-min-crossing"}));
  unknot_cmd->add_option("--repeats", cfg.repeats);
  unknot_cmd->add_option("--max-steps", cfg.max_steps);
  unknot_cmd->add_option("--revisit", cfg.revisit)->check(CLI::IsMember({"none", "alexander", "jones", "both"}));
  unknot_cmd->add_option("--force-crossings", forced, "Comma separated crossing ids");
  unknot_cmd->add_option("--replay", replay, "Apply these switches and certify");
  auto* brute = app.add_subcommand("brute", "Minimal unknotting sets by exhaustive search");
  with_input(brute);
  brute->add_option("--max-size", cfg.max_size);
  auto* braid = app.add_subcommand("braid", "Braid closure tooling");
  braid->add_option("operation", cfg.subcommand)->required()->check(CLI::IsMember({"closure", "bounds", "sum", "mix"}));
  with_input(braid);
  braid->add_option("--count", cfg.count, "Identity words inserted by mix");
  auto* hardness = app.add_subcommand("hardness", "Hard unknot diagram pipeline");
  with_input(hardness);
  hardness->add_option("--retries", cfg.retries);
  hardness->add_option("--timeout", cfg.timeout, "Seconds per orbit");
  hardness->add_option("--max-diagrams", cfg.max_diagrams);
  hardness->add_flag("!--no-filter", cfg.filter, "Skip the Jones/simplification filter");
  auto* orbit = app.add_subcommand("orbit", "R3 orbit size");
  with_input(orbit);
  orbit->add_option("--timeout", cfg.timeout);
  orbit->add_option("--max-diagrams", cfg.max_diagrams);
  app.add_subcommand("replay-appendix", "Replay the published unknotting trajectories");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!forced.empty()) cfg.forced = parse_int_list(forced);
    if (!replay.empty()) {
      cfg.replay = parse_int_list(replay);
      cfg.has_replay = true;
    }
    unknot::CommandOutput out =
        cfg.command == "replay-appendix" ? unknot::replay_appendix(cfg) : unknot::run_command(cfg, read_input(input_path));
    if (output_path.empty()) {
      std::cout << out.text;
    } else {
      std::ofstream f(output_path);
      f << out.text;
    }
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
