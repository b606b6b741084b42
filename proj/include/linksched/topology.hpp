#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linksched/price.hpp"

namespace linksched {

using NodeId = std::int32_t;  // positive, unique within a topology
using LinkId = std::int32_t;  // index into Topology::links(), declaration order

// Directed data link. Control traffic is assumed symmetric, so all distance
// and interference queries run on the undirected support graph; the
// direction only identifies the link and names its owning (source) node.
struct Link {
  NodeId src = 0;
  NodeId dst = 0;
  Price price;
};

using LinkSet = std::set<LinkId>;

// Global total order used everywhere a winner must be picked: higher price
// first, ties broken by the smaller (src, dst) pair. Returns true when a
// strictly precedes b.
bool tie_break_before(const Link& a, const Link& b);

// Static network under a K-hop link interference model: two links interfere
// when their link distance is below K. Construction precomputes all-pairs
// node distances; afterwards the object is immutable and every query is
// read-only.
class Topology {
public:
  // Validates and takes ownership of the link list. extra_nodes registers
  // nodes that no link touches (pure relays). Throws std::invalid_argument
  // on k < 1, non-positive ids or prices, self loops, or duplicate (src,
  // dst) pairs. Antiparallel pairs (i,j) and (j,i) are two distinct links.
  explicit Topology(int k, std::vector<Link> links = {},
                    const std::vector<NodeId>& extra_nodes = {});

  int k() const { return k_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }  // sorted

  // Hop count on the undirected support graph; nullopt when disconnected.
  std::optional<int> node_distance(NodeId a, NodeId b) const;

  // Minimum node distance over the four endpoint pairs; nullopt when every
  // endpoint pair is disconnected.
  std::optional<int> link_distance(LinkId a, LinkId b) const;

  // d(a, b) < K. A link interferes with itself.
  bool interferes(LinkId a, LinkId b) const;

  // All links pairwise at distance >= K (a K-valid matching).
  bool is_k_valid_matching(const LinkSet& s) const;

  // No link outside s can be added while keeping the set K-valid. Throws
  // std::invalid_argument when s itself is not K-valid.
  bool is_maximal(const LinkSet& s) const;

  // Every link interfering with y, including y itself.
  LinkSet interference_set(LinkId y) const;

  // Nodes within `radius` hops of n, excluding n.
  std::set<NodeId> neighborhood(NodeId n, int radius) const;

  // tie_break_before on link ids.
  bool precedes(LinkId a, LinkId b) const;

  // All link ids sorted by the tie-break order, strongest first.
  const std::vector<LinkId>& links_by_priority() const { return priority_; }

  // Links owned by n (src == n), ascending id.
  std::vector<LinkId> attached_links(NodeId n) const;

  std::optional<LinkId> find_link(NodeId src, NodeId dst) const;

  bool has_node(NodeId n) const { return node_index_.count(n) > 0; }

  bool operator==(const Topology& o) const;

private:
  int node_index(NodeId n) const;  // throws std::out_of_range on unknown id
  void check_link(LinkId l) const;

  int k_ = 1;
  std::vector<Link> links_;
  std::vector<NodeId> nodes_;
  std::map<NodeId, int> node_index_;
  std::map<std::pair<NodeId, NodeId>, LinkId> link_index_;
  std::vector<LinkId> priority_;
  std::vector<int> dist_;  // n*n matrix, -1 for unreachable
};

}  // namespace linksched
