#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linksched/centralized.hpp"
#include "linksched/engine.hpp"
#include "linksched/io.hpp"
#include "linksched/oracle.hpp"

namespace {

using namespace linksched;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_topology(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

CheckRule parse_rule(const std::string& name) {
  if (name == "interfering") return CheckRule::interfering;
  if (name == "literal") return CheckRule::literal;
  throw UsageError("unknown check rule '" + name + "'");
}

// "family=random,n=12,p=0.3,seed=7,count=100" -> spec plus instance count
struct GenRequest {
  GenSpec spec;
  int count = 1;
  bool count_given = false;
};

GenRequest parse_gen_request(const std::string& text) {
  GenRequest req;
  bool have_family = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    try {
      if (key == "family") {
        if (value == "line") req.spec.family = GenSpec::Family::line;
        else if (value == "ring") req.spec.family = GenSpec::Family::ring;
        else if (value == "grid") req.spec.family = GenSpec::Family::grid;
        else if (value == "random") req.spec.family = GenSpec::Family::random;
        else throw UsageError("unknown family '" + value + "'");
        have_family = true;
      } else if (key == "n") {
        req.spec.nodes = std::stoi(value);
      } else if (key == "rows") {
        req.spec.rows = std::stoi(value);
      } else if (key == "cols") {
        req.spec.cols = std::stoi(value);
      } else if (key == "p") {
        req.spec.edge_prob = std::stod(value);
      } else if (key == "seed") {
        req.spec.seed = std::stoull(value);
      } else if (key == "k") {
        req.spec.k = std::stoi(value);
      } else if (key == "lo") {
        req.spec.price_lo_units = std::stoll(value);
      } else if (key == "hi") {
        req.spec.price_hi_units = std::stoll(value);
      } else if (key == "ties") {
        req.spec.allow_ties = value == "1" || value == "true";
      } else if (key == "count") {
        req.count = std::stoi(value);
        req.count_given = true;
      } else {
        throw UsageError("unknown key '" + key + "'");
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad value for '" + key + "': '" + value + "'");
    }
  }
  if (!have_family) throw UsageError("generate spec needs family=...");
  if (req.count < 1) throw UsageError("count must be at least 1");
  return req;
}

void print_schedule_links(const Topology& t, const LinkSet& schedule) {
  std::vector<LinkId> order(schedule.begin(), schedule.end());
  std::sort(order.begin(), order.end(), [&](LinkId a, LinkId b) { return t.precedes(a, b); });
  for (LinkId l : order) {
    const Link& link = t.links()[l];
    std::cout << "link " << link.src << " " << link.dst << " " << link.price.str() << "\n";
  }
}

int cmd_run(const Topology& t, CheckRule rule, const std::string& trace_path,
            const std::string& json_path) {
  EngineConfig cfg;
  cfg.check_rule = rule;
  RunResult result = run(t, cfg);
  if (!trace_path.empty()) write_file(trace_path, trace_to_tsv(t, result.trace));
  if (!json_path.empty()) write_file(json_path, result_to_json_text(t, result, rule));
  print_schedule_links(t, result.schedule);
  std::cout << "rounds " << result.rounds << "\n";
  return kExitOk;
}

int cmd_greedy(const Topology& t) {
  Schedule s = centralized_greedy(t);
  print_schedule_links(t, s.chosen);
  std::cout << "total " << s.total_price.str() << "\n";
  return kExitOk;
}

int cmd_optimal(const Topology& t, std::size_t cap) {
  OptimalResult best = brute_force_optimal(t, cap);
  std::cout << "weight " << best.best_weight.str() << "\n";
  print_schedule_links(t, best.best);
  return kExitOk;
}

struct CompareStats {
  int passed = 0;
  int total = 0;
  std::vector<double> ratios;
};

bool compare_one(int index, const Topology& t, CheckRule rule, bool with_optimal,
                 std::size_t cap, CompareStats& stats) {
  EngineConfig cfg;
  cfg.check_rule = rule;
  RunResult dist = run(t, cfg);
  Schedule greedy = centralized_greedy(t);
  std::vector<std::string> problems;
  if (dist.schedule != greedy.chosen) problems.push_back("schedule differs from centralized");
  if (!t.is_k_valid_matching(dist.schedule)) {
    problems.push_back("schedule is not a K-valid matching");
  } else if (!t.is_maximal(dist.schedule)) {
    problems.push_back("schedule is not maximal");
  }
  InvariantReport rep = check_lemma_invariants(dist, t);
  for (const InvariantViolation& v : rep.violations) {
    problems.push_back(v.lemma + " violated at " + v.boundary + ": " + v.detail);
  }
  if (dist.rounds > std::max<int>(1, static_cast<int>(dist.schedule.size()))) {
    problems.push_back("rounds exceeded the marked-set bound");
  }

  std::string extra;
  if (with_optimal) {
    if (t.links().size() <= cap) {
      OptimalResult best = brute_force_optimal(t, cap);
      if (greedy.total_price > best.best_weight) problems.push_back("greedy beat the optimum");
      double ratio = best.best_weight.micros() == 0
                         ? 1.0
                         : static_cast<double>(greedy.total_price.micros()) /
                               static_cast<double>(best.best_weight.micros());
      stats.ratios.push_back(ratio);
      char buf[48];
      std::snprintf(buf, sizeof buf, " ratio=%.4f", ratio);
      extra = buf;
    } else {
      extra = " optimal=skipped(cap)";
    }
  }

  ++stats.total;
  if (problems.empty()) {
    ++stats.passed;
    std::cout << "[" << index << "] PASS links=" << t.links().size() << " k=" << t.k()
              << " scheduled=" << dist.schedule.size() << " rounds=" << dist.rounds << extra
              << "\n";
    return true;
  }
  std::cout << "[" << index << "] FAIL links=" << t.links().size() << " k=" << t.k() << extra;
  for (const std::string& p : problems) std::cout << " | " << p;
  std::cout << "\n";
  return false;
}

int cmd_compare(const std::string& topology_path, const std::string& gen_text, CheckRule rule,
                bool with_optimal, std::size_t cap) {
  CompareStats stats;
  bool all_ok = true;
  if (!topology_path.empty()) {
    all_ok = compare_one(0, load_topology(topology_path), rule, with_optimal, cap, stats);
  } else {
    GenRequest req = parse_gen_request(gen_text);
    for (int i = 0; i < req.count; ++i) {
      GenSpec spec = req.spec;
      spec.seed = req.spec.seed + static_cast<std::uint64_t>(i);
      all_ok = compare_one(i, generate(spec), rule, with_optimal, cap, stats) && all_ok;
    }
  }
  std::cout << stats.passed << "/" << stats.total << " equal\n";
  if (!stats.ratios.empty()) {
    double min = stats.ratios[0], sum = 0;
    for (double r : stats.ratios) {
      min = std::min(min, r);
      sum += r;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "ratio min=%.4f mean=%.4f over %zu instances\n", min,
                  sum / static_cast<double>(stats.ratios.size()), stats.ratios.size());
    std::cout << buf;
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_gen(const std::string& gen_text, const std::string& out_path) {
  GenRequest req = parse_gen_request(gen_text);
  if (req.count_given) throw UsageError("count only applies to compare");
  std::string text = serialize_topology(generate(req.spec));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-hop interference link scheduler: distributed protocol simulator and oracles"};
  app.require_subcommand(1);

  std::string topology_path, trace_path, json_path, gen_text, out_path;
  std::string rule_name = "interfering";
  bool with_optimal = false;
  std::size_t cap = 20;

  CLI::App* c_run = app.add_subcommand("run", "simulate the distributed protocol");
  c_run->add_option("--topology", topology_path, "topology file")->required();
  c_run->add_option("--check-rule", rule_name, "interfering|literal");
  c_run->add_option("--trace", trace_path, "write the state table as TSV");
  c_run->add_option("--json", json_path, "write the full run report as JSON");

  CLI::App* c_greedy = app.add_subcommand("greedy", "centralized greedy schedule");
  c_greedy->add_option("--topology", topology_path, "topology file")->required();

  CLI::App* c_optimal = app.add_subcommand("optimal", "exact optimum by branch and bound");
  c_optimal->add_option("--topology", topology_path, "topology file")->required();
  c_optimal->add_option("--cap", cap, "largest link count accepted");

  CLI::App* c_compare =
      app.add_subcommand("compare", "check distributed against centralized (and optionally optimal)");
  c_compare->add_option("--topology", topology_path, "topology file");
  c_compare->add_option("--generate", gen_text, "family=...,n=...,seed=...,count=...");
  c_compare->add_option("--check-rule", rule_name, "interfering|literal");
  c_compare->add_flag("--with-optimal", with_optimal, "also report greedy/optimal ratios");
  c_compare->add_option("--cap", cap, "largest link count for the optimal solver");

  CLI::App* c_gen = app.add_subcommand("gen", "write a generated topology");
  c_gen->add_option("spec", gen_text, "family=line|ring|grid|random,n=...,seed=...")->required();
  c_gen->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_run->parsed()) {
      return cmd_run(load_topology(topology_path), parse_rule(rule_name), trace_path, json_path);
    }
    if (c_greedy->parsed()) return cmd_greedy(load_topology(topology_path));
    if (c_optimal->parsed()) return cmd_optimal(load_topology(topology_path), cap);
    if (c_compare->parsed()) {
      if (topology_path.empty() == gen_text.empty()) {
        throw UsageError("compare needs exactly one of --topology or --generate");
      }
      return cmd_compare(topology_path, gen_text, parse_rule(rule_name), with_optimal, cap);
    }
    if (c_gen->parsed()) return cmd_gen(gen_text, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error " << e.code << " at line " << e.line << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
