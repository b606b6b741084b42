#pragma once

#include <vector>

#include "linksched/topology.hpp"

namespace linksched {

struct Schedule {
  LinkSet chosen;
  std::vector<LinkId> order;  // selection order; coincides with the tie-break order
  Price total_price;
};

// Scans links strongest-first and keeps every link compatible with all picks
// so far. The result is a maximal K-valid matching and the reference answer
// the distributed protocol must reproduce.
Schedule centralized_greedy(const Topology& t);

// Links of `remaining` that both precede l in the tie-break order and
// interfere with it. l must be a member of remaining; throws
// std::invalid_argument otherwise. The greedy pick at each step is exactly
// the link whose set here is empty.
LinkSet higher_interfering_remaining(const Topology& t, const LinkSet& remaining, LinkId l);

}  // namespace linksched
