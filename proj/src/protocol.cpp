#include "linksched/protocol.hpp"

#include <stdexcept>
#include <utility>

namespace linksched {

namespace {

void check_known(const Topology& t, LinkId l) {
  if (l < 0 || static_cast<std::size_t>(l) >= t.links().size()) {
    throw std::out_of_range("announcement names a link not in the topology");
  }
}

}  // namespace

std::string_view to_string(LinkState s) {
  switch (s) {
    case LinkState::open: return "O";
    case LinkState::check: return "CH";
    case LinkState::marked: return "M";
    case LinkState::closed: return "CL";
  }
  return "?";
}

bool NodeState::has_open() const {
  for (const auto& [l, st] : attached) {
    if (st == LinkState::open) return true;
  }
  return false;
}

bool NodeState::has_open_or_check() const {
  for (const auto& [l, st] : attached) {
    if (st == LinkState::open || st == LinkState::check) return true;
  }
  return false;
}

std::optional<Message> make_price_announcement(const NodeState& ns, const Topology& t) {
  LinkId best = -1;
  for (const auto& [l, st] : ns.attached) {
    if (st == LinkState::open && (best < 0 || t.precedes(l, best))) best = l;
  }
  if (best < 0) return std::nullopt;
  return Message{Message::Kind::price, ns.node, best, t.links()[best].price, t.k() + 1};
}

void process_price_inbox(NodeState& ns, const Topology& t, CheckRule rule) {
  const std::vector<PriceAd> inbox = std::exchange(ns.inbox_prices, {});
  std::vector<LinkId> open;
  for (const auto& [l, st] : ns.attached) {
    if (st == LinkState::open) open.push_back(l);
  }
  if (open.empty()) return;
  for (const PriceAd& ad : inbox) check_known(t, ad.link);

  LinkId own_max = open.front();
  for (LinkId l : open) {
    if (t.precedes(l, own_max)) own_max = l;
  }

  bool beaten = false;
  for (const PriceAd& ad : inbox) {
    if (t.precedes(ad.link, own_max)) {
      beaten = true;
      break;
    }
  }
  if (!beaten) {
    ns.attached[own_max] = LinkState::marked;
    for (LinkId l : open) {
      if (l != own_max) ns.attached[l] = LinkState::closed;
    }
    return;
  }

  if (rule == CheckRule::interfering) {
    for (LinkId l : open) {
      for (const PriceAd& ad : inbox) {
        if (t.precedes(ad.link, l) && t.interferes(ad.link, l)) {
          ns.attached[l] = LinkState::check;
          break;
        }
      }
    }
  } else {
    LinkId recv_max = inbox.front().link;
    for (const PriceAd& ad : inbox) {
      if (t.precedes(ad.link, recv_max)) recv_max = ad.link;
    }
    for (LinkId l : open) {
      if (t.interferes(l, recv_max)) ns.attached[l] = LinkState::check;
    }
  }
}

std::vector<Message> make_marked_announcements(const NodeState& ns, const Topology& t) {
  std::vector<Message> out;
  for (const auto& [l, st] : ns.attached) {
    if (st == LinkState::marked) {
      out.push_back(Message{Message::Kind::marked, ns.node, l, Price{}, t.k() + 1});
    }
  }
  return out;
}

void process_marked_inbox(NodeState& ns, const Topology& t) {
  std::vector<LinkId> marked = std::exchange(ns.inbox_marked, {});
  for (LinkId m : marked) check_known(t, m);
  for (const auto& [l, st] : ns.attached) {
    if (st == LinkState::marked) marked.push_back(l);
  }

  for (auto& [l, st] : ns.attached) {
    if (st != LinkState::check) continue;
    for (LinkId m : marked) {
      if (t.interferes(l, m)) {
        st = LinkState::closed;
        break;
      }
    }
  }

  LinkId reopen = -1;
  for (const auto& [l, st] : ns.attached) {
    if (st == LinkState::check && (reopen < 0 || t.precedes(l, reopen))) reopen = l;
  }
  if (reopen >= 0) ns.attached[reopen] = LinkState::open;
}

std::optional<Message> make_status_message(const NodeState& ns, const Topology& t) {
  if (!ns.has_open_or_check() && !ns.dnt_received) return std::nullopt;
  return Message{Message::Kind::dnt, ns.node, -1, Price{}, t.k() + 1};
}

void process_termination(NodeState& ns) {
  ns.terminated = !ns.dnt_received && !ns.has_open_or_check();
  ns.dnt_received = false;
}

}  // namespace linksched
