#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "linksched/protocol.hpp"
#include "support.hpp"

using namespace linksched;
using testsupport::line7_example1;
using testsupport::line7_example2;

namespace {

PriceAd ad(const Topology& t, NodeId src, NodeId dst) {
  LinkId l = *t.find_link(src, dst);
  return PriceAd{l, t.links()[l].price};
}

NodeState node_with(const Topology& t, NodeId n) {
  NodeState ns;
  ns.node = n;
  for (LinkId l : t.attached_links(n)) ns.attached[l] = LinkState::open;
  return ns;
}

}  // namespace

TEST_CASE("price announcement picks the strongest open attached link") {
  Topology t = line7_example2();
  NodeState n4 = node_with(t, 4);
  auto msg = make_price_announcement(n4, t);
  REQUIRE(msg.has_value());
  CHECK_EQ(msg->kind, Message::Kind::price);
  CHECK_EQ(msg->origin, 4);
  CHECK_EQ(msg->link, *t.find_link(4, 5));
  CHECK_EQ(msg->price, Price::from_units(10));
  CHECK_EQ(msg->ttl, 3);  // K + 1

  n4.attached[*t.find_link(4, 5)] = LinkState::marked;
  CHECK_FALSE(make_price_announcement(n4, t).has_value());

  Topology multi(2, {{1, 2, Price::from_units(4)}, {1, 3, Price::from_units(9)}});
  NodeState n1 = node_with(multi, 1);
  CHECK_EQ(make_price_announcement(n1, multi)->link, *multi.find_link(1, 3));
}

TEST_CASE("a link preceding every received announcement is marked") {
  Topology t = line7_example2();
  NodeState n4 = node_with(t, 4);
  n4.inbox_prices = {ad(t, 1, 2), ad(t, 2, 3), ad(t, 3, 4), ad(t, 5, 6), ad(t, 6, 7)};
  process_price_inbox(n4, t);
  CHECK_EQ(n4.attached[*t.find_link(4, 5)], LinkState::marked);
  CHECK(n4.inbox_prices.empty());
}

TEST_CASE("an empty inbox marks the local maximum") {
  Topology t = line7_example2();
  NodeState n1 = node_with(t, 1);
  process_price_inbox(n1, t);
  CHECK_EQ(n1.attached[*t.find_link(1, 2)], LinkState::marked);
}

TEST_CASE("a beaten link stays open unless an interfering announcement precedes it") {
  Topology t = line7_example2();
  NodeState n1 = node_with(t, 1);
  // (4,5)=10 precedes (1,2)=8 but sits at distance 2; nothing else precedes
  n1.inbox_prices = {ad(t, 2, 3), ad(t, 3, 4), ad(t, 4, 5)};
  process_price_inbox(n1, t);
  CHECK_EQ(n1.attached[*t.find_link(1, 2)], LinkState::open);
}

TEST_CASE("check rules differ on which announcement may demote a link") {
  Topology t = line7_example1();
  // node 4: (3,4)=7 precedes (4,5)=6 and interferes; the strongest received
  // announcement (1,2)=10 does not interfere
  NodeState n4 = node_with(t, 4);
  n4.inbox_prices = {ad(t, 1, 2), ad(t, 2, 3), ad(t, 3, 4), ad(t, 5, 6), ad(t, 6, 7)};
  process_price_inbox(n4, t, CheckRule::interfering);
  CHECK_EQ(n4.attached[*t.find_link(4, 5)], LinkState::check);

  NodeState again = node_with(t, 4);
  again.inbox_prices = {ad(t, 1, 2), ad(t, 2, 3), ad(t, 3, 4), ad(t, 5, 6), ad(t, 6, 7)};
  process_price_inbox(again, t, CheckRule::literal);
  CHECK_EQ(again.attached[*t.find_link(4, 5)], LinkState::open);
}

TEST_CASE("marking closes the other open attached links") {
  Topology t(2, {{1, 2, Price::from_units(9)}, {1, 3, Price::from_units(4)}});
  NodeState n1 = node_with(t, 1);
  process_price_inbox(n1, t);
  CHECK_EQ(n1.attached[*t.find_link(1, 2)], LinkState::marked);
  CHECK_EQ(n1.attached[*t.find_link(1, 3)], LinkState::closed);
}

TEST_CASE("price boundary ignores nodes without open links but clears the inbox") {
  Topology t = line7_example2();
  NodeState n2 = node_with(t, 2);
  n2.attached[*t.find_link(2, 3)] = LinkState::check;
  n2.inbox_prices = {ad(t, 1, 2)};
  process_price_inbox(n2, t);
  CHECK_EQ(n2.attached[*t.find_link(2, 3)], LinkState::check);
  CHECK(n2.inbox_prices.empty());
}

TEST_CASE("price inbox naming an unknown link throws") {
  Topology t = line7_example2();
  NodeState n1 = node_with(t, 1);
  n1.inbox_prices = {PriceAd{99, Price::from_units(1)}};
  CHECK_THROWS_AS(process_price_inbox(n1, t), std::out_of_range);
}

TEST_CASE("marked boundary closes interfering check links and reopens the best survivor") {
  Topology t = line7_example1();
  NodeState n2 = node_with(t, 2);
  n2.attached[*t.find_link(2, 3)] = LinkState::check;
  n2.inbox_marked = {*t.find_link(1, 2)};
  process_marked_inbox(n2, t);
  CHECK_EQ(n2.attached[*t.find_link(2, 3)], LinkState::closed);
  CHECK(n2.inbox_marked.empty());

  // (4,5) is two hops from (1,2): survives and reopens
  NodeState n4 = node_with(t, 4);
  n4.attached[*t.find_link(4, 5)] = LinkState::check;
  n4.inbox_marked = {*t.find_link(1, 2)};
  process_marked_inbox(n4, t);
  CHECK_EQ(n4.attached[*t.find_link(4, 5)], LinkState::open);
}

TEST_CASE("reopening picks the strongest surviving check link only") {
  Topology t(3, {{1, 2, Price::from_units(4)},
                 {1, 3, Price::from_units(7)},
                 {1, 4, Price::from_units(6)}});
  NodeState n1 = node_with(t, 1);
  for (auto& [l, st] : n1.attached) st = LinkState::check;
  process_marked_inbox(n1, t);
  CHECK_EQ(n1.attached[*t.find_link(1, 3)], LinkState::open);
  CHECK_EQ(n1.attached[*t.find_link(1, 4)], LinkState::check);
  CHECK_EQ(n1.attached[*t.find_link(1, 2)], LinkState::check);
}

// A node never receives its own dissemination, so its freshly marked link
// must close check siblings directly at the marked boundary.
TEST_CASE("own marked link closes attached check siblings without any inbox") {
  Topology t(2, {{1, 2, Price::from_units(9)}, {1, 3, Price::from_units(4)}});
  NodeState n1 = node_with(t, 1);
  n1.attached[*t.find_link(1, 2)] = LinkState::marked;
  n1.attached[*t.find_link(1, 3)] = LinkState::check;
  process_marked_inbox(n1, t);
  CHECK_EQ(n1.attached[*t.find_link(1, 3)], LinkState::closed);
}

TEST_CASE("marked announcements cover every marked attached link, every round") {
  Topology t(2, {{1, 2, Price::from_units(9)}, {3, 4, Price::from_units(4)}});
  NodeState n1 = node_with(t, 1);
  CHECK(make_marked_announcements(n1, t).empty());
  n1.attached[*t.find_link(1, 2)] = LinkState::marked;
  auto msgs = make_marked_announcements(n1, t);
  REQUIRE_EQ(msgs.size(), 1);
  CHECK_EQ(msgs[0].kind, Message::Kind::marked);
  CHECK_EQ(msgs[0].link, *t.find_link(1, 2));
  CHECK_EQ(msgs[0].ttl, 3);
  // stateless in the round: a later call announces again
  CHECK_EQ(make_marked_announcements(n1, t).size(), 1);
}

TEST_CASE("status messages and termination") {
  Topology t = line7_example2();
  NodeState n1 = node_with(t, 1);
  CHECK(make_status_message(n1, t).has_value());  // open link

  n1.attached[*t.find_link(1, 2)] = LinkState::check;
  CHECK(make_status_message(n1, t).has_value());

  n1.attached[*t.find_link(1, 2)] = LinkState::closed;
  CHECK_FALSE(make_status_message(n1, t).has_value());

  n1.dnt_received = true;  // settled relays re-originate
  auto msg = make_status_message(n1, t);
  REQUIRE(msg.has_value());
  CHECK_EQ(msg->kind, Message::Kind::dnt);

  process_termination(n1);
  CHECK_FALSE(n1.terminated);  // heard a do-not-terminate
  CHECK_FALSE(n1.dnt_received);
  process_termination(n1);
  CHECK(n1.terminated);

  NodeState busy = node_with(t, 4);
  process_termination(busy);
  CHECK_FALSE(busy.terminated);  // still has an open link
}
