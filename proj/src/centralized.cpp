#include "linksched/centralized.hpp"

#include <stdexcept>

namespace linksched {

Schedule centralized_greedy(const Topology& t) {
  Schedule s;
  for (LinkId cand : t.links_by_priority()) {
    bool compatible = true;
    for (LinkId got : s.chosen) {
      if (t.interferes(cand, got)) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      s.chosen.insert(cand);
      s.order.push_back(cand);
      s.total_price += t.links()[cand].price;
    }
  }
  return s;
}

LinkSet higher_interfering_remaining(const Topology& t, const LinkSet& remaining, LinkId l) {
  if (!remaining.count(l)) throw std::invalid_argument("link is not in the remaining set");
  LinkSet out;
  for (LinkId r : remaining) {
    if (t.precedes(r, l) && t.interferes(r, l)) out.insert(r);
  }
  return out;
}

}  // namespace linksched
