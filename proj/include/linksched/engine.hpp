#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linksched/protocol.hpp"
#include "linksched/topology.hpp"

namespace linksched {

struct EngineConfig {
  CheckRule check_rule = CheckRule::interfering;
  bool record_trace = true;
  // Safety net against a non-terminating protocol bug; 0 means 4*|L|+4.
  int round_cap = 0;
};

// Raised when the round cap trips. A correct protocol terminates long
// before the cap, so this always signals a logic bug.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One row per recorded boundary: "0" before round 1, then "T{m}_L" and
// "T{m}_M" per round. states is indexed by LinkId (declaration order).
struct TraceRow {
  std::string label;
  std::vector<LinkState> states;
};

struct Trace {
  std::vector<TraceRow> rows;
};

struct RunResult {
  LinkSet schedule;  // MARKED links at termination
  Trace trace;
  int rounds = 0;
  std::int64_t messages_sent = 0;
  int round_bound = 0;  // ceil(|L| / K)
};

struct FloodResult {
  std::map<NodeId, std::vector<Message>> delivered;
  std::int64_t transmissions = 0;
};

// Delivers each message to every node within its ttl on the support graph,
// excluding the origin, exactly once. Delivered copies carry the remaining
// hop budget; transmissions counts the origin broadcast plus one forward by
// each receiver that still had budget left.
FloodResult flood(const Topology& t, const std::vector<Message>& emissions);

struct DntResult {
  std::set<NodeId> received;
  std::int64_t transmissions = 0;
  int micro_steps = 0;
};

// STATUS slot closure. Every receiver relays a DO-NOT-TERMINATE wave with a
// fresh hop budget, so one unsettled sender reaches its entire support
// component; a node never hears a wave it originated itself.
DntResult dnt_fixpoint(const Topology& t, const std::set<NodeId>& initial_senders);

// Runs the protocol to global termination and collects the schedule, the
// state trace, and message counts. Deterministic: identical inputs produce
// identical results. Throws EngineError when the round cap trips.
RunResult run(const Topology& t, const EngineConfig& config = {});

struct InvariantViolation {
  std::string lemma;     // "L1".."L4"
  std::string boundary;  // round-start row label
  LinkId link = -1;      // witness
  std::string detail;
};

struct InvariantReport {
  std::vector<InvariantViolation> violations;
  // rounds exceeded ceil(|L|/K). Reported, never fatal: the schedule-size
  // premise behind that bound does not hold on every topology.
  bool round_bound_exceeded = false;
  // |schedule| exceeded ceil(|L|/K); informational for the same reason.
  bool schedule_premise_exceeded = false;
  bool ok() const { return violations.empty(); }
};

// Checks, at every round-start boundary of a recorded trace:
//   L1: MARKED grows strictly and OPEN|CHECK shrinks strictly over every
//       round that still had unsettled links; MARKED and CLOSED never lose
//       members.
//   L2: every CLOSED link has a MARKED link within distance < K.
//   L3: every CHECK link is preceded by some OPEN link in the tie-break
//       order.
//   L4: the strongest link that is neither CLOSED nor MARKED is OPEN.
// Requires result.trace to be populated.
InvariantReport check_lemma_invariants(const RunResult& result, const Topology& t);

}  // namespace linksched
