#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "linksched/engine.hpp"
#include "linksched/topology.hpp"

namespace linksched {

// Parse failure with a machine-readable code (MISSING_K, DUPLICATE_K,
// BAD_K, MALFORMED_LINE, SELF_LOOP, DUPLICATE_LINK, BAD_PRICE, BAD_NODE)
// and the 1-based offending line (0 for whole-file problems).
struct ParseError : std::runtime_error {
  ParseError(std::string code_, int line_, const std::string& what_)
      : std::runtime_error(what_), code(std::move(code_)), line(line_) {}
  std::string code;
  int line = 0;
};

// Topology file: one directive per line.
//   k <int>              required, exactly once
//   node <id>            optional; registers a node with no links
//   link <src> <dst> <price>
// '#' starts a comment; blank lines are ignored.
Topology parse_topology(std::istream& in);
Topology parse_topology(const std::string& text);

// Canonical form: the k line, node lines for isolated nodes only (sorted),
// then links in declaration order with canonical prices. Parsing the output
// reproduces the topology exactly.
std::string serialize_topology(const Topology& t);

std::string link_label(const Link& l);  // "(1,2)"

// Tab-separated state table: header "T" plus one column per link in
// declaration order, one row per recorded boundary, cells O/CH/M/CL.
std::string trace_to_tsv(const Topology& t, const Trace& trace);

// Full machine-readable run report; stable key order, trailing newline.
std::string result_to_json_text(const Topology& t, const RunResult& result, CheckRule rule);

}  // namespace linksched
