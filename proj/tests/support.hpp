#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "linksched/oracle.hpp"
#include "linksched/topology.hpp"

namespace testsupport {

using namespace linksched;

// Line of seven nodes, prices chosen so the strongest link sits at one end
// and the schedule needs a second round to settle the far half.
inline Topology line7_example1() {
  return Topology(2, {
                         {1, 2, Price::from_units(10)},
                         {2, 3, Price::from_units(4)},
                         {3, 4, Price::from_units(7)},
                         {4, 5, Price::from_units(6)},
                         {5, 6, Price::from_units(5)},
                         {6, 7, Price::from_units(3)},
                     });
}

// Same line with the strongest link in the middle; the protocol settles all
// but one link in the first round.
inline Topology line7_example2() {
  return Topology(2, {
                         {1, 2, Price::from_units(8)},
                         {2, 3, Price::from_units(3)},
                         {3, 4, Price::from_units(5)},
                         {4, 5, Price::from_units(10)},
                         {5, 6, Price::from_units(4)},
                         {6, 7, Price::from_units(2)},
                     });
}

// Exhaustive maximum-weight K-valid matching over all link subsets. Slow
// and obviously correct; the reference the branch-and-bound solver is
// checked against.
inline std::pair<LinkSet, Price> enumerate_optimal(const Topology& t) {
  const std::size_t n = t.links().size();
  assert(n <= 20);
  LinkSet best;
  Price best_weight;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    LinkSet s;
    Price weight;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        s.insert(static_cast<LinkId>(i));
        weight += t.links()[i].price;
      }
    }
    if (weight > best_weight && t.is_k_valid_matching(s)) {
      best = s;
      best_weight = weight;
    }
  }
  return {best, best_weight};
}

// A small pool of generated topologies covering every family, K in 1..3,
// and both distinct and tied prices.
inline std::vector<Topology> property_pool(int per_family = 6) {
  std::vector<Topology> pool;
  std::uint64_t seq = 0;
  auto push = [&](GenSpec g) {
    g.seed = 77 + seq;
    g.k = 1 + static_cast<int>(seq % 3);
    if (seq % 4 == 3) {
      g.allow_ties = true;
      g.price_hi_units = 6;
    }
    ++seq;
    pool.push_back(generate(g));
  };
  for (int i = 0; i < per_family; ++i) {
    GenSpec line;
    line.family = GenSpec::Family::line;
    line.nodes = 3 + i;
    push(line);
    GenSpec ring;
    ring.family = GenSpec::Family::ring;
    ring.nodes = 4 + i;
    push(ring);
    GenSpec grid;
    grid.family = GenSpec::Family::grid;
    grid.rows = 2 + i % 2;
    grid.cols = 2 + i / 2;
    push(grid);
    GenSpec rnd;
    rnd.family = GenSpec::Family::random;
    rnd.nodes = 6 + 2 * i;
    rnd.edge_prob = 0.15 + 0.05 * i;
    push(rnd);
  }
  return pool;
}

}  // namespace testsupport
