#include "linksched/engine.hpp"

#include <algorithm>
#include <utility>

namespace linksched {

FloodResult flood(const Topology& t, const std::vector<Message>& emissions) {
  FloodResult out;
  for (const Message& msg : emissions) {
    if (!t.has_node(msg.origin)) throw std::out_of_range("flood from unknown node");
    if (msg.ttl < 0) throw std::invalid_argument("negative ttl");
    ++out.transmissions;  // origin broadcast
    for (NodeId n : t.nodes()) {
      if (n == msg.origin) continue;
      auto d = t.node_distance(msg.origin, n);
      if (!d || *d > msg.ttl) continue;
      Message copy = msg;
      copy.ttl = msg.ttl - *d;
      out.delivered[n].push_back(copy);
      if (copy.ttl > 0) ++out.transmissions;  // receiver forwards once
    }
  }
  return out;
}

DntResult dnt_fixpoint(const Topology& t, const std::set<NodeId>& initial_senders) {
  DntResult out;
  const int hop = t.k() + 1;
  for (NodeId s : initial_senders) {
    if (!t.has_node(s)) throw std::out_of_range("sender not in topology");
    ++out.transmissions;  // origination
    std::set<NodeId> covered;
    std::vector<NodeId> frontier{s};
    int steps = 0;
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (NodeId f : frontier) {
        for (NodeId n : t.nodes()) {
          if (n == s || covered.count(n)) continue;
          auto d = t.node_distance(f, n);
          if (d && *d <= hop) {
            covered.insert(n);
            next.push_back(n);
          }
        }
      }
      // every receiver relays the wave once, with a fresh hop budget
      out.transmissions += static_cast<std::int64_t>(next.size());
      if (!next.empty()) ++steps;
      frontier = std::move(next);
    }
    out.micro_steps = std::max(out.micro_steps, steps);
    out.received.insert(covered.begin(), covered.end());
  }
  return out;
}

namespace {

struct Sim {
  const Topology& t;
  std::vector<NodeState> nodes;
  std::map<NodeId, std::size_t> index;

  explicit Sim(const Topology& topo) : t(topo) {
    for (NodeId n : t.nodes()) {
      NodeState ns;
      ns.node = n;
      for (LinkId l : t.attached_links(n)) ns.attached[l] = LinkState::open;
      index[n] = nodes.size();
      nodes.push_back(std::move(ns));
    }
  }

  std::vector<LinkState> link_states() const {
    std::vector<LinkState> states(t.links().size(), LinkState::open);
    for (const NodeState& ns : nodes) {
      for (const auto& [l, st] : ns.attached) states[l] = st;
    }
    return states;
  }
};

}  // namespace

RunResult run(const Topology& t, const EngineConfig& config) {
  const int link_count = static_cast<int>(t.links().size());
  const int cap = config.round_cap > 0 ? config.round_cap : 4 * link_count + 4;
  Sim sim(t);
  RunResult res;
  res.round_bound = t.k() > 0 ? (link_count + t.k() - 1) / t.k() : 0;

  auto snapshot = [&](const std::string& label) {
    if (!config.record_trace) return;
    res.trace.rows.push_back(TraceRow{label, sim.link_states()});
  };
  snapshot("0");

  while (true) {
    const int m = ++res.rounds;
    if (m > cap) throw EngineError("round cap exceeded after " + std::to_string(cap) + " rounds");
    const std::string tag = "T" + std::to_string(m);

    // SEND LINK PRICES
    std::vector<Message> emissions;
    for (const NodeState& ns : sim.nodes) {
      if (ns.terminated) continue;
      if (auto msg = make_price_announcement(ns, t)) emissions.push_back(*msg);
    }
    FloodResult fl = flood(t, emissions);
    res.messages_sent += fl.transmissions;
    for (const auto& [n, msgs] : fl.delivered) {
      NodeState& ns = sim.nodes[sim.index.at(n)];
      if (ns.terminated) continue;
      for (const Message& msg : msgs) ns.inbox_prices.push_back(PriceAd{msg.link, msg.price});
    }
    for (NodeState& ns : sim.nodes) {
      if (!ns.terminated) process_price_inbox(ns, t, config.check_rule);
    }
    snapshot(tag + "_L");

    // SEND MARKED LINK
    emissions.clear();
    for (const NodeState& ns : sim.nodes) {
      if (ns.terminated) continue;
      auto more = make_marked_announcements(ns, t);
      emissions.insert(emissions.end(), more.begin(), more.end());
    }
    fl = flood(t, emissions);
    res.messages_sent += fl.transmissions;
    for (const auto& [n, msgs] : fl.delivered) {
      NodeState& ns = sim.nodes[sim.index.at(n)];
      if (ns.terminated) continue;
      for (const Message& msg : msgs) ns.inbox_marked.push_back(msg.link);
    }
    for (NodeState& ns : sim.nodes) {
      if (!ns.terminated) process_marked_inbox(ns, t);
    }
    snapshot(tag + "_M");

    // SEND STATUS
    std::set<NodeId> senders;
    for (const NodeState& ns : sim.nodes) {
      if (!ns.terminated && ns.has_open_or_check()) senders.insert(ns.node);
    }
    DntResult dnt = dnt_fixpoint(t, senders);
    res.messages_sent += dnt.transmissions;
    bool all_done = true;
    for (NodeState& ns : sim.nodes) {
      if (ns.terminated) continue;
      ns.dnt_received = dnt.received.count(ns.node) > 0;
      process_termination(ns);
      all_done = all_done && ns.terminated;
    }
    if (all_done) break;
  }

  for (const NodeState& ns : sim.nodes) {
    for (const auto& [l, st] : ns.attached) {
      if (st == LinkState::marked) res.schedule.insert(l);
    }
  }
  return res;
}

namespace {

LinkSet states_with(const std::vector<LinkState>& row, LinkState want) {
  LinkSet out;
  for (LinkId l = 0; static_cast<std::size_t>(l) < row.size(); ++l) {
    if (row[l] == want) out.insert(l);
  }
  return out;
}

}  // namespace

InvariantReport check_lemma_invariants(const RunResult& result, const Topology& t) {
  if (result.trace.rows.empty()) {
    throw std::invalid_argument("lemma checks need a recorded trace");
  }
  InvariantReport rep;
  auto flag = [&](std::string lemma, const std::string& boundary, LinkId link,
                  std::string detail) {
    rep.violations.push_back(
        InvariantViolation{std::move(lemma), boundary, link, std::move(detail)});
  };

  // Round-start boundaries: the initial row plus every T{m}_M row.
  std::vector<const TraceRow*> starts;
  for (const TraceRow& row : result.trace.rows) {
    if (row.label == "0" || row.label.ends_with("_M")) starts.push_back(&row);
  }

  for (const TraceRow* rowp : starts) {
    const auto& row = rowp->states;
    const LinkSet closed = states_with(row, LinkState::closed);
    const LinkSet marked = states_with(row, LinkState::marked);
    const LinkSet check = states_with(row, LinkState::check);
    const LinkSet open = states_with(row, LinkState::open);

    for (LinkId c : closed) {
      bool covered = false;
      for (LinkId m : marked) {
        if (t.interferes(c, m)) {
          covered = true;
          break;
        }
      }
      if (!covered) flag("L2", rowp->label, c, "CLOSED link has no MARKED link within K");
    }
    for (LinkId h : check) {
      bool preceded = false;
      for (LinkId o : open) {
        if (t.precedes(o, h)) {
          preceded = true;
          break;
        }
      }
      if (!preceded) flag("L3", rowp->label, h, "CHECK link without a stronger OPEN link");
    }
    LinkId top = -1;
    for (LinkId l : open) {
      if (top < 0 || t.precedes(l, top)) top = l;
    }
    for (LinkId l : check) {
      if (top < 0 || t.precedes(l, top)) top = l;
    }
    if (top >= 0 && row[top] != LinkState::open) {
      flag("L4", rowp->label, top, "strongest unresolved link is not OPEN");
    }
  }

  for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
    const auto& before = starts[i]->states;
    const auto& after = starts[i + 1]->states;
    const LinkSet m0 = states_with(before, LinkState::marked);
    const LinkSet m1 = states_with(after, LinkState::marked);
    const LinkSet c0 = states_with(before, LinkState::closed);
    const LinkSet c1 = states_with(after, LinkState::closed);
    for (LinkId l : m0) {
      if (!m1.count(l)) flag("L1", starts[i + 1]->label, l, "MARKED link left the marked set");
    }
    for (LinkId l : c0) {
      if (!c1.count(l)) flag("L1", starts[i + 1]->label, l, "CLOSED link left the closed set");
    }
    const std::size_t u0 = states_with(before, LinkState::open).size() +
                           states_with(before, LinkState::check).size();
    const std::size_t u1 = states_with(after, LinkState::open).size() +
                           states_with(after, LinkState::check).size();
    if (u0 > 0) {
      if (m1.size() <= m0.size()) {
        flag("L1", starts[i + 1]->label, -1, "round with unsettled links marked nothing");
      }
      if (u1 >= u0) {
        flag("L1", starts[i + 1]->label, -1, "unsettled set failed to shrink");
      }
    }
  }

  const int count = static_cast<int>(t.links().size());
  const int bound = (count + t.k() - 1) / t.k();
  if (!t.links().empty()) {
    rep.round_bound_exceeded = result.rounds > bound;
    rep.schedule_premise_exceeded = static_cast<int>(result.schedule.size()) > bound;
  }
  return rep;
}

}  // namespace linksched
