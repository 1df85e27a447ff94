#include "unknot/commands.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "unknot/appendix_data.hpp"
#include "unknot/braid.hpp"
#include "unknot/hardness.hpp"
#include "unknot/invariants.hpp"
#include "unknot/moves.hpp"
#include "unknot/rng.hpp"
#include "unknot/unknotting.hpp"

namespace unknot {

using nlohmann::json;

std::string JobConfig::to_json() const {
  json j{{"command", command},       {"subcommand", subcommand}, {"seed", seed},
         {"jobs", jobs},             {"max_crossings", max_crossings},
         {"mode", mode},             {"max_r3", max_r3},         {"strategy", strategy},
         {"repeats", repeats},       {"max_steps", max_steps},   {"revisit", revisit},
         {"forced", forced},         {"max_size", max_size},     {"count", count},
         {"retries", retries},       {"timeout", timeout},       {"max_diagrams", max_diagrams},
         {"filter", filter}};
  if (has_replay) j["replay"] = replay;
  return j.dump();
}

int default_jobs() {
  if (const char* v = std::getenv("UNKNOT_JOBS")) {
    int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 1;
}

namespace {

struct Item {
  int line;
  std::string text;
};

std::vector<Item> split_items(const std::string& input) {
  std::vector<Item> items;
  std::istringstream in(input);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    items.push_back({no, line.substr(b, e - b + 1)});
  }
  return items;
}

/// Runs `fn` over all items on `jobs` threads; results keep input order.
std::vector<json> parallel_map(const std::vector<Item>& items, int jobs,
                               const std::function<json(const Item&)>& fn) {
  std::vector<json> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        out[i] = fn(items[i]);
      } catch (const std::exception& e) {
        out[i] = json{{"error", e.what()}};
      }
      out[i]["line"] = items[i].line;
    }
  };
  int threads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

json poly_json(const LaurentPolynomial& p) { return json::parse(p.to_json()); }

std::uint64_t line_seed(const JobConfig& c, int line) {
  return Rng::mix(c.seed ^ Rng::mix(static_cast<std::uint64_t>(line)));
}

Diagram load_diagram(const JobConfig& c, const std::string& text) {
  Diagram d = parse_pd(text);
  if (d.size() > c.max_crossings)
    throw std::runtime_error("diagram has " + std::to_string(d.size()) + " crossings, above --max-crossings " +
                             std::to_string(c.max_crossings));
  return d;
}

json cmd_validate(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  return {{"ok", true}, {"n", d.size()}, {"components", component_count(d)}, {"label_base", d.label_base}};
}

json cmd_invariants(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  require_knot(d);
  json r{{"pd", serialize_pd(d)}, {"n", d.size()}, {"writhe", writhe(d)}, {"alternating", is_alternating(d)}};
  json failed = json::array();
  r["det"] = determinant(d).str();
  r["signature"] = signature(d);
  r["alexander"] = poly_json(alexander(d));
  try {
    r["jones"] = poly_json(jones(d));
  } catch (const BracketCapError&) {
    r["jones"] = nullptr;
    failed.push_back("jones");
  }
  auto fv = feature_vector(d);
  r["features"] = fv.values;
  r["feature_failed"] = fv.failed;
  r["failed"] = failed;
  return r;
}

json cmd_simplify(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  auto seed = line_seed(c, item.line);
  SimplifyReport rep;
  if (c.mode == "level") rep = level_simplify(d, seed, c.max_r3);
  else if (c.mode == "global") rep = global_simplify(d, seed, GlobalBudget{c.max_r3, 64, 4});
  else throw std::invalid_argument("unknown mode '" + c.mode + "'");
  return {{"n_before", d.size()},
          {"n_after", rep.final.size()},
          {"pd", serialize_pd(rep.final)},
          {"trivial", rep.reached_trivial},
          {"trace", json::parse(trace_to_json(rep.trace))}};
}

json trajectory_json(const Trajectory& t) {
  return {{"reduced_set", t.reduced},       {"length", t.length()},
          {"outcome", to_string(t.outcome)}, {"certificate_len", t.certificate_len},
          {"ordered", t.ordered},           {"replayable", t.replayable},
          {"forced_satisfied", t.forced_satisfied}};
}

json cmd_unknot(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  require_knot(d);
  auto seed = line_seed(c, item.line);
  if (c.has_replay) {
    auto cert = certify_unknot(change_crossings(d, c.replay), CertifyBudget{3, false, {}, kDefaultBracketCap, seed});
    Trajectory t;
    t.ordered = c.replay;
    std::map<int, int> parity;
    for (int x : c.replay) parity[x] ^= 1;
    for (auto [x, odd] : parity)
      if (odd) t.reduced.push_back(x);
    t.outcome = cert.status == CertifyStatus::Yes ? Outcome::Unknotted : Outcome::Unknown;
    t.certificate_len = static_cast<int>(cert.trace.size());
    json r = trajectory_json(t);
    r["strategy"] = "replay";
    r["certify"] = to_string(cert.status);
    r["pd"] = item.text;
    r["seed"] = c.seed;
    return r;
  }
  StrategyConfig sc;
  sc.kind = strategy_from_string(c.strategy);
  sc.max_steps = c.max_steps;
  sc.revisit = fingerprint_mode_from_string(c.revisit);
  sc.forced = c.forced;
  auto t = run_strategy(d, sc, seed, c.repeats);
  json r = trajectory_json(t);
  r["strategy"] = c.strategy;
  r["pd"] = item.text;
  r["seed"] = c.seed;
  return r;
}

json cmd_brute(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  auto res = brute_force_min_unknotting(d, c.max_size);
  return {{"n", d.size()}, {"u", res.size}, {"sets", res.sets}, {"complete", res.complete}, {"tested", res.tested}};
}

BraidWord parse_braid_item(const std::string& text, int default_strands) {
  std::string body = text;
  int strands = default_strands;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    strands = std::stoi(body.substr(0, colon));
    body = body.substr(colon + 1);
  }
  BraidWord b = parse_braid(body);
  if (strands > 0) b.strands = strands;
  validate_braid(b);
  if (b.strands > kMaxBraidStrands)
    throw BraidError("braids are limited to " + std::to_string(kMaxBraidStrands) + " strands");
  return b;
}

json braid_json(const BraidWord& b) { return {{"strands", b.strands}, {"letters", b.letters}}; }

json cmd_braid(const JobConfig& c, const Item& item, int default_strands) {
  const std::string& op = c.subcommand;
  if (op == "sum") {
    auto semi = item.text.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("sum needs two braids separated by ';'");
    BraidWord b1 = parse_braid_item(item.text.substr(0, semi), default_strands);
    BraidWord b2 = parse_braid_item(item.text.substr(semi + 1), default_strands);
    BraidWord s = braid_connected_sum(b1, b2);
    return {{"braid", braid_json(s)}, {"pd", serialize_pd(closure(s))}};
  }
  BraidWord b = parse_braid_item(item.text, default_strands);
  if (op == "closure") return {{"braid", braid_json(b)}, {"pd", serialize_pd(closure(b))}};
  if (op == "bounds") {
    auto bb = slice_bennequin(b);
    return {{"braid", braid_json(b)},
            {"lower", bb.lower},
            {"upper", bb.upper},
            {"closure_crossings", bb.closure_crossings},
            {"simplified_crossings", bb.simplified_crossings}};
  }
  if (op == "mix") {
    BraidWord m = insert_identity_words(b, line_seed(c, item.line), c.count);
    return {{"braid", braid_json(m)}, {"pd", serialize_pd(closure(m))}};
  }
  throw std::invalid_argument("unknown braid operation '" + op + "'");
}

json cmd_orbit(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  auto o = r3_orbit(d, OrbitLimits{c.max_diagrams, c.timeout});
  return {{"orbit_size", o.codes.size()}, {"timed_out", o.timed_out}, {"explored", o.explored}};
}

json cmd_hardness(const JobConfig& c, const Item& item) {
  Diagram d = load_diagram(c, item.text);
  require_knot(d);
  json r{{"pd", item.text}};
  if (c.filter && !filter_candidate(d, c.retries, line_seed(c, item.line), c.max_r3)) {
    r["filtered"] = true;
    r["verdict"] = nullptr;
    return r;
  }
  r["filtered"] = false;
  auto v = is_hard(d, OrbitLimits{c.max_diagrams, c.timeout});
  r["verdict"] = to_string(v.kind);
  switch (v.kind) {
    case HardnessVerdict::Kind::Hard: r["orbit_size"] = v.orbit_size; break;
    case HardnessVerdict::Kind::NotHard: r["witness"] = json::parse(trace_to_json(v.witness)); break;
    case HardnessVerdict::Kind::Timeout: r["explored"] = v.explored; break;
  }
  return r;
}

}  // namespace

CommandOutput run_command(const JobConfig& c, const std::string& input) {
  auto items = split_items(input);
  std::vector<json> records;
  if (c.command == "braid") {
    // `strands=N` lines set the default strand count for the lines after them.
    std::vector<std::pair<Item, int>> words;
    int strands = 0;
    for (const auto& it : items) {
      if (it.text.rfind("strands=", 0) == 0) strands = std::stoi(it.text.substr(8));
      else words.push_back({it, strands});
    }
    std::vector<Item> plain;
    std::map<int, int> strands_of;
    for (auto& [it, s] : words) {
      plain.push_back(it);
      strands_of[it.line] = s;
    }
    records = parallel_map(plain, c.jobs, [&](const Item& it) { return cmd_braid(c, it, strands_of[it.line]); });
    items = plain;
  } else {
    std::function<json(const Item&)> fn;
    if (c.command == "validate") fn = [&](const Item& it) { return cmd_validate(c, it); };
    else if (c.command == "invariants") fn = [&](const Item& it) { return cmd_invariants(c, it); };
    else if (c.command == "simplify") fn = [&](const Item& it) { return cmd_simplify(c, it); };
    else if (c.command == "unknot") fn = [&](const Item& it) { return cmd_unknot(c, it); };
    else if (c.command == "brute") fn = [&](const Item& it) { return cmd_brute(c, it); };
    else if (c.command == "orbit") fn = [&](const Item& it) { return cmd_orbit(c, it); };
    else if (c.command == "hardness") fn = [&](const Item& it) { return cmd_hardness(c, it); };
    else throw std::invalid_argument("unknown command '" + c.command + "'");
    records = parallel_map(items, c.jobs, fn);
  }

  CommandOutput out;
  int failures = 0;
  for (const auto& r : records) {
    if (r.contains("error")) ++failures;
    out.text += r.dump() + "\n";
  }
  if (!records.empty() && failures == static_cast<int>(records.size())) out.exit_code = 1;

  if (c.command == "unknot" && !records.empty()) {
    int solved = 0, total = 0;
    long long length_sum = 0;
    for (const auto& r : records) {
      if (r.contains("error")) continue;
      ++total;
      if (r["outcome"] == "unknotted") {
        ++solved;
        length_sum += r["length"].get<int>();
      }
    }
    json s{{"strategy", c.has_replay ? "replay" : c.strategy},
           {"diagrams", total},
           {"solved", solved},
           {"unsolved_pct", total ? 100.0 * (total - solved) / total : 0.0},
           {"mean_length", solved ? static_cast<double>(length_sum) / solved : 0.0}};
    out.text += json{{"summary", s}}.dump() + "\n";
  }
  if (c.command == "hardness" && !records.empty()) {
    std::vector<Diagram> hard;
    for (std::size_t i = 0; i < records.size(); ++i)
      if (!records[i].contains("error") && records[i]["verdict"] == "hard") hard.push_back(parse_pd(items[i].text));
    auto part = dedup_and_partition(hard, OrbitLimits{c.max_diagrams, c.timeout});
    json s{{"hard", hard.size()}, {"distinct", part.distinct}, {"classes", part.classes()}};
    out.text += json{{"summary", s}}.dump() + "\n";
  }
  return out;
}

CommandOutput replay_appendix(const JobConfig& c) {
  CertifyBudget budget;
  budget.seed = c.seed;
  json report = json::array();
  bool all_ok = true;

  struct Case {
    const char* name;
    const char* initial;
    const char* first;
    const char* second;
    const char* simplified;
    const char* final_pd;
    std::vector<int> sequence;
    int late_switch;
  };
  const std::vector<Case> cases{
      {"12a898", appendix::k12a898Initial, appendix::k12a898First, appendix::k12a898Second, nullptr, nullptr,
       appendix::k12a898Sequence, -1},
      {"12a916", appendix::k12a916Initial, appendix::k12a916First, appendix::k12a916Second,
       appendix::k12a916Simplified, appendix::k12a916Final, appendix::k12aSequence, appendix::k12a916LateSwitch},
      {"12a999", appendix::k12a999Initial, appendix::k12a999First, appendix::k12a999Second,
       appendix::k12a999Simplified, appendix::k12a999Final, appendix::k12aSequence, appendix::k12a999LateSwitch},
  };
  for (const auto& k : cases) {
    json r{{"name", k.name}};
    Diagram d = parse_pd(k.initial);
    r["n"] = d.size();
    // The listed indices are positions in the tuple list; find which base certifies.
    json bases = json::object();
    std::optional<int> certified_base;
    for (int base : {0, 1}) {
      std::vector<int> seq;
      bool in_range = true;
      for (int x : k.sequence) {
        if (x - base < 0 || x - base >= d.size()) in_range = false;
        seq.push_back(x - base);
      }
      if (!in_range) {
        bases[std::to_string(base)] = "out-of-range";
        continue;
      }
      auto cert = certify_unknot(change_crossings(d, seq), budget);
      bases[std::to_string(base)] = to_string(cert.status);
      if (cert.status == CertifyStatus::Yes && !certified_base) {
        certified_base = base;
        r["certificate_len"] = cert.trace.size();
      }
    }
    r["index_base"] = bases;
    r["sequence_length"] = k.sequence.size();
    r["unknotted"] = certified_base.has_value();
    all_ok = all_ok && certified_base.has_value();

    Diagram sum = connected_sum(parse_pd(k.first), 0, parse_pd(k.second), 0);
    r["summands_alexander_match"] = alexander(sum) == alexander(d);

    if (k.simplified) {
      Diagram listed = parse_pd(k.simplified);
      Diagram inter = trajectory_intermediate(d, appendix::k12aInitialSwitches,
                                              static_cast<int>(appendix::k12aInitialSwitches.size()), c.seed);
      bool match = alexander(inter) == alexander(listed) && jones(inter) == jones(listed);
      r["intermediate_n"] = inter.size();
      r["intermediate_matches"] = match;
      all_ok = all_ok && match;
      Diagram after = change_crossing(listed, k.late_switch);
      Diagram final_pd = parse_pd(k.final_pd);
      r["final_matches"] = alexander(after) == alexander(final_pd) && jones(after) == jones(final_pd);
      r["final_listed_equals_simplified"] = final_pd == listed;
    }
    report.push_back(r);
  }
  bool canonical_equal =
      canonical_code(parse_pd(appendix::k12a916Initial)) == canonical_code(parse_pd(appendix::k12a999Initial));
  all_ok = all_ok && canonical_equal;
  json top{{"cases", report}, {"initial_codes_equal", canonical_equal}, {"ok", all_ok}};
  return {top.dump() + "\n", all_ok ? 0 : 1};
}

}  // namespace unknot
