#pragma once

#include <cstdint>

#include "linksched/centralized.hpp"
#include "linksched/topology.hpp"

namespace linksched {

struct OptimalResult {
  LinkSet best;
  Price best_weight;
  std::int64_t explored = 0;  // search tree nodes visited
};

// Exact maximum-weight K-valid matching by branch and bound over links in
// tie-break order, pruning with the sum of prices still reachable. The
// witness is extended to a maximal set before returning (a no-op whenever
// prices are positive, since the optimum is already maximal). Throws
// std::invalid_argument above the link cap.
OptimalResult brute_force_optimal(const Topology& t, std::size_t link_cap = 20);

struct GenSpec {
  enum class Family { line, ring, grid, random };
  Family family = Family::line;
  int nodes = 0;           // line, ring, random
  int rows = 0, cols = 0;  // grid
  double edge_prob = 0.0;  // random
  std::uint64_t seed = 0;
  int k = 2;
  std::int64_t price_lo_units = 1;
  std::int64_t price_hi_units = 100;
  // With ties allowed, prices are whole units drawn from the range so
  // collisions actually happen; otherwise draws use full micro resolution
  // and are nudged until pairwise distinct.
  bool allow_ties = false;
};

// Deterministic: the same spec always yields the identical topology. Link
// structure is drawn first, then prices in declaration order.
//   line: nodes 1..n, links (i, i+1)
//   ring: line plus the closing link (n, 1)
//   grid: rows x cols 4-neighbor lattice, links from smaller to larger id
//   random: each pair i < j becomes link (i, j) with probability edge_prob
Topology generate(const GenSpec& spec);

struct ApproximationReport {
  Schedule greedy;
  OptimalResult optimal;
  double ratio = 1.0;  // greedy weight / optimal weight; 1.0 when both empty
};

// Runs both solvers and checks greedy <= optimal and greedy maximality.
// The ratio is reported as measured; no fixed bound is assumed.
ApproximationReport approximation_report(const Topology& t, std::size_t link_cap = 20);

}  // namespace linksched
