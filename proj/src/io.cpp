#include "linksched/io.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace linksched {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

NodeId parse_node_id(const std::string& tok, int line) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("BAD_NODE", line, "bad node id '" + tok + "'");
  }
  if (pos != tok.size() || v <= 0 || v > 2'000'000'000L) {
    throw ParseError("BAD_NODE", line, "bad node id '" + tok + "'");
  }
  return static_cast<NodeId>(v);
}

}  // namespace

Topology parse_topology(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_k = false;
  int k = 0;
  std::vector<Link> links;
  std::vector<NodeId> extra;
  std::set<std::pair<NodeId, NodeId>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& directive = toks[0];
    if (directive == "k") {
      if (have_k) throw ParseError("DUPLICATE_K", line_no, "k declared twice");
      if (toks.size() != 2) throw ParseError("MALFORMED_LINE", line_no, "expected: k <int>");
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(toks[1], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != toks[1].size() || v < 1 || v > 1'000'000L) {
        throw ParseError("BAD_K", line_no, "k must be a positive integer");
      }
      k = static_cast<int>(v);
      have_k = true;
    } else if (directive == "node") {
      if (toks.size() != 2) throw ParseError("MALFORMED_LINE", line_no, "expected: node <id>");
      extra.push_back(parse_node_id(toks[1], line_no));
    } else if (directive == "link") {
      if (toks.size() != 4) {
        throw ParseError("MALFORMED_LINE", line_no, "expected: link <src> <dst> <price>");
      }
      NodeId src = parse_node_id(toks[1], line_no);
      NodeId dst = parse_node_id(toks[2], line_no);
      if (src == dst) {
        throw ParseError("SELF_LOOP", line_no, "link endpoints must differ");
      }
      auto price = Price::parse(toks[3]);
      if (!price || price->micros() <= 0) {
        throw ParseError("BAD_PRICE", line_no,
                         "price must be positive with at most six fractional digits");
      }
      if (!seen.insert({src, dst}).second) {
        throw ParseError("DUPLICATE_LINK", line_no,
                         "link (" + toks[1] + "," + toks[2] + ") declared twice");
      }
      links.push_back(Link{src, dst, *price});
    } else {
      throw ParseError("MALFORMED_LINE", line_no, "unknown directive '" + directive + "'");
    }
  }
  if (!have_k) throw ParseError("MISSING_K", 0, "no k line");
  return Topology(k, std::move(links), extra);
}

Topology parse_topology(const std::string& text) {
  std::istringstream in(text);
  return parse_topology(in);
}

std::string serialize_topology(const Topology& t) {
  std::string out = "k " + std::to_string(t.k()) + "\n";
  std::set<NodeId> linked;
  for (const Link& l : t.links()) {
    linked.insert(l.src);
    linked.insert(l.dst);
  }
  for (NodeId n : t.nodes()) {
    if (!linked.count(n)) out += "node " + std::to_string(n) + "\n";
  }
  for (const Link& l : t.links()) {
    out += "link " + std::to_string(l.src) + " " + std::to_string(l.dst) + " " + l.price.str() +
           "\n";
  }
  return out;
}

std::string link_label(const Link& l) {
  return "(" + std::to_string(l.src) + "," + std::to_string(l.dst) + ")";
}

std::string trace_to_tsv(const Topology& t, const Trace& trace) {
  std::string out = "T";
  for (const Link& l : t.links()) {
    out += "\t";
    out += link_label(l);
  }
  out += "\n";
  for (const TraceRow& row : trace.rows) {
    out += row.label;
    for (LinkState st : row.states) {
      out += "\t";
      out += to_string(st);
    }
    out += "\n";
  }
  return out;
}

std::string result_to_json_text(const Topology& t, const RunResult& result, CheckRule rule) {
  nlohmann::json j;
  j["check_rule"] = rule == CheckRule::interfering ? "interfering" : "literal";
  j["k"] = t.k();
  j["links"] = nlohmann::json::array();
  for (const Link& l : t.links()) {
    j["links"].push_back({{"src", l.src}, {"dst", l.dst}, {"price", l.price.str()}});
  }
  std::vector<LinkId> sched(result.schedule.begin(), result.schedule.end());
  std::sort(sched.begin(), sched.end(),
            [&](LinkId a, LinkId b) { return t.precedes(a, b); });
  j["schedule"] = nlohmann::json::array();
  for (LinkId l : sched) {
    const Link& link = t.links()[l];
    j["schedule"].push_back({{"src", link.src}, {"dst", link.dst}, {"price", link.price.str()}});
  }
  j["rounds"] = result.rounds;
  j["round_bound"] = result.round_bound;
  j["messages_sent"] = result.messages_sent;
  j["trace"] = nlohmann::json::array();
  for (const TraceRow& row : result.trace.rows) {
    nlohmann::json states = nlohmann::json::array();
    for (LinkState st : row.states) states.push_back(std::string(to_string(st)));
    j["trace"].push_back({{"label", row.label}, {"states", states}});
  }
  return j.dump(2) + "\n";
}

}  // namespace linksched
