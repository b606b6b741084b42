#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "linksched/topology.hpp"

namespace linksched {

// Per-link scheduling state. MARKED and CLOSED are absorbing; a link may
// move between OPEN and CHECK any number of times before it settles.
enum class LinkState { open, check, marked, closed };

std::string_view to_string(LinkState s);

// How a node reacts to price announcements that beat its own best link.
//   interfering: a link steps back to CHECK when any received announcement
//     both precedes it and interferes with it. This is the rule the state
//     tables and the equivalence tests are written against.
//   literal: a link steps back to CHECK only when it interferes with the
//     single strongest received announcement. Kept for comparison studies;
//     it can strand interfering links in OPEN and yield invalid schedules.
enum class CheckRule { interfering, literal };

struct Message {
  enum class Kind { price, marked, dnt };
  Kind kind = Kind::price;
  NodeId origin = 0;
  LinkId link = -1;  // price, marked
  Price price;       // price only
  int ttl = 0;       // remaining hop budget; K+1 at origination
};

// A received price announcement: the advertised link and its price.
struct PriceAd {
  LinkId link = -1;
  Price price;
};

// Everything one node can see: the states of the links it owns, the
// messages delivered this round, and its termination flags. Every decision
// function below reads only this plus topology distances, so nodes can be
// evaluated in any order.
struct NodeState {
  NodeId node = 0;
  std::map<LinkId, LinkState> attached;  // links with src == node
  std::vector<PriceAd> inbox_prices;
  std::vector<LinkId> inbox_marked;
  bool dnt_received = false;
  bool terminated = false;

  bool has_open() const;
  bool has_open_or_check() const;  // local do-not-terminate condition
};

// SEND LINK PRICES: advertise the strongest OPEN attached link, if any.
std::optional<Message> make_price_announcement(const NodeState& ns, const Topology& t);

// Price boundary. If the node's strongest OPEN link precedes every received
// announcement (or nothing was received) it is MARKED and all other OPEN
// attached links are CLOSED; otherwise OPEN links step back to CHECK per
// the configured rule. Consumes inbox_prices.
void process_price_inbox(NodeState& ns, const Topology& t,
                         CheckRule rule = CheckRule::interfering);

// SEND MARKED LINK: one announcement per MARKED attached link. Re-emitted
// every round until the node terminates, so links that reach CHECK late
// still learn about older winners.
std::vector<Message> make_marked_announcements(const NodeState& ns, const Topology& t);

// Marked boundary. CHECK links interfering with an announced MARKED link
// are CLOSED, then the strongest attached link still in CHECK (if any)
// reopens. A node's own MARKED links count alongside the received
// announcements: a node never receives its own dissemination, yet a CHECK
// sibling of a freshly MARKED link must still close. Consumes inbox_marked.
void process_marked_inbox(NodeState& ns, const Topology& t);

// SEND STATUS: a DO-NOT-TERMINATE message while any attached link is still
// OPEN or CHECK. Settled nodes relay instead (handled by the engine).
std::optional<Message> make_status_message(const NodeState& ns, const Topology& t);

// Status boundary: terminate only when the node is settled and heard no
// DO-NOT-TERMINATE this round. Resets dnt_received.
void process_termination(NodeState& ns);

}  // namespace linksched
