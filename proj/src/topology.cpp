#include "linksched/topology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace linksched {

bool tie_break_before(const Link& a, const Link& b) {
  if (a.price != b.price) return a.price > b.price;
  return std::pair{a.src, a.dst} < std::pair{b.src, b.dst};
}

Topology::Topology(int k, std::vector<Link> links, const std::vector<NodeId>& extra_nodes)
    : k_(k), links_(std::move(links)) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  std::set<NodeId> node_set(extra_nodes.begin(), extra_nodes.end());
  for (const Link& l : links_) {
    if (l.src <= 0 || l.dst <= 0) throw std::invalid_argument("node ids must be positive");
    if (l.src == l.dst) throw std::invalid_argument("self loop");
    if (l.price.micros() <= 0) throw std::invalid_argument("link price must be positive");
    node_set.insert(l.src);
    node_set.insert(l.dst);
  }
  for (NodeId n : extra_nodes) {
    if (n <= 0) throw std::invalid_argument("node ids must be positive");
  }
  nodes_.assign(node_set.begin(), node_set.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) node_index_[nodes_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < links_.size(); ++i) {
    auto key = std::pair{links_[i].src, links_[i].dst};
    if (!link_index_.emplace(key, static_cast<LinkId>(i)).second) {
      throw std::invalid_argument("duplicate link");
    }
  }

  const int n = static_cast<int>(nodes_.size());
  std::vector<std::vector<int>> adj(n);
  for (const Link& l : links_) {
    int a = node_index_.at(l.src), b = node_index_.at(l.dst);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  dist_.assign(static_cast<std::size_t>(n) * n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          q.push(v);
        }
      }
    }
  }

  priority_.resize(links_.size());
  for (std::size_t i = 0; i < links_.size(); ++i) priority_[i] = static_cast<LinkId>(i);
  std::sort(priority_.begin(), priority_.end(),
            [&](LinkId a, LinkId b) { return tie_break_before(links_[a], links_[b]); });
}

int Topology::node_index(NodeId n) const {
  auto it = node_index_.find(n);
  if (it == node_index_.end()) throw std::out_of_range("unknown node id");
  return it->second;
}

void Topology::check_link(LinkId l) const {
  if (l < 0 || static_cast<std::size_t>(l) >= links_.size()) {
    throw std::out_of_range("unknown link id");
  }
}

std::optional<int> Topology::node_distance(NodeId a, NodeId b) const {
  int d = dist_[static_cast<std::size_t>(node_index(a)) * nodes_.size() + node_index(b)];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> Topology::link_distance(LinkId a, LinkId b) const {
  check_link(a);
  check_link(b);
  std::optional<int> best;
  for (NodeId u : {links_[a].src, links_[a].dst}) {
    for (NodeId v : {links_[b].src, links_[b].dst}) {
      auto d = node_distance(u, v);
      if (d && (!best || *d < *best)) best = d;
    }
  }
  return best;
}

bool Topology::interferes(LinkId a, LinkId b) const {
  auto d = link_distance(a, b);
  return d && *d < k_;
}

bool Topology::is_k_valid_matching(const LinkSet& s) const {
  for (LinkId l : s) check_link(l);
  for (auto i = s.begin(); i != s.end(); ++i) {
    for (auto j = std::next(i); j != s.end(); ++j) {
      if (interferes(*i, *j)) return false;
    }
  }
  return true;
}

bool Topology::is_maximal(const LinkSet& s) const {
  if (!is_k_valid_matching(s)) throw std::invalid_argument("set is not a K-valid matching");
  for (LinkId cand = 0; static_cast<std::size_t>(cand) < links_.size(); ++cand) {
    if (s.count(cand)) continue;
    bool addable = true;
    for (LinkId m : s) {
      if (interferes(cand, m)) {
        addable = false;
        break;
      }
    }
    if (addable) return false;
  }
  return true;
}

LinkSet Topology::interference_set(LinkId y) const {
  check_link(y);
  LinkSet out;
  for (LinkId l = 0; static_cast<std::size_t>(l) < links_.size(); ++l) {
    if (interferes(y, l)) out.insert(l);
  }
  return out;
}

std::set<NodeId> Topology::neighborhood(NodeId n, int radius) const {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const int* row = dist_.data() + static_cast<std::size_t>(node_index(n)) * nodes_.size();
  std::set<NodeId> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (row[i] > 0 && row[i] <= radius) out.insert(nodes_[i]);
  }
  return out;
}

bool Topology::precedes(LinkId a, LinkId b) const {
  check_link(a);
  check_link(b);
  return tie_break_before(links_[a], links_[b]);
}

std::vector<LinkId> Topology::attached_links(NodeId n) const {
  node_index(n);
  std::vector<LinkId> out;
  for (LinkId l = 0; static_cast<std::size_t>(l) < links_.size(); ++l) {
    if (links_[l].src == n) out.push_back(l);
  }
  return out;
}

std::optional<LinkId> Topology::find_link(NodeId src, NodeId dst) const {
  auto it = link_index_.find({src, dst});
  if (it == link_index_.end()) return std::nullopt;
  return it->second;
}

bool Topology::operator==(const Topology& o) const {
  if (k_ != o.k_ || nodes_ != o.nodes_ || links_.size() != o.links_.size()) return false;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (links_[i].src != o.links_[i].src || links_[i].dst != o.links_[i].dst ||
        links_[i].price != o.links_[i].price) {
      return false;
    }
  }
  return true;
}

}  // namespace linksched
