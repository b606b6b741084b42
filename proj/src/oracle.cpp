#include "linksched/oracle.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace linksched {

namespace {

struct Search {
  const Topology& t;
  const std::vector<LinkId>& order;
  std::vector<std::int64_t> suffix;  // micros reachable from position i on
  std::vector<LinkId> current;
  std::int64_t weight = 0;
  std::int64_t best_weight = 0;
  std::vector<LinkId> best;
  std::int64_t explored = 0;

  explicit Search(const Topology& topo) : t(topo), order(topo.links_by_priority()) {
    suffix.assign(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1] + t.links()[order[i]].price.micros();
    }
  }

  bool compatible(LinkId cand) const {
    for (LinkId got : current) {
      if (t.interferes(cand, got)) return false;
    }
    return true;
  }

  void visit(std::size_t idx) {
    ++explored;
    if (weight > best_weight) {
      best_weight = weight;
      best = current;
    }
    if (idx == order.size()) return;
    if (weight + suffix[idx] <= best_weight) return;  // cannot improve
    LinkId cand = order[idx];
    if (compatible(cand)) {
      current.push_back(cand);
      weight += t.links()[cand].price.micros();
      visit(idx + 1);
      weight -= t.links()[cand].price.micros();
      current.pop_back();
    }
    visit(idx + 1);
  }
};

std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  // hi - lo is tiny next to 2^64, so the modulo bias is irrelevant here
  return lo + static_cast<std::int64_t>(next_u64(rng) % static_cast<std::uint64_t>(hi - lo + 1));
}

bool bernoulli(std::mt19937_64& rng, double p) {
  return (next_u64(rng) >> 11) * 0x1.0p-53 < p;
}

}  // namespace

OptimalResult brute_force_optimal(const Topology& t, std::size_t link_cap) {
  if (t.links().size() > link_cap) {
    throw std::invalid_argument("instance above the brute-force link cap");
  }
  Search s(t);
  s.visit(0);

  LinkSet best(s.best.begin(), s.best.end());
  // extend the witness to a maximal set
  for (LinkId cand : t.links_by_priority()) {
    if (best.count(cand)) continue;
    bool addable = true;
    for (LinkId got : best) {
      if (t.interferes(cand, got)) {
        addable = false;
        break;
      }
    }
    if (addable) best.insert(cand);
  }
  OptimalResult out;
  out.best = best;
  for (LinkId l : best) out.best_weight += t.links()[l].price;
  out.explored = s.explored;
  return out;
}

Topology generate(const GenSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("k must be at least 1");
  if (spec.price_lo_units < 1 || spec.price_hi_units < spec.price_lo_units) {
    throw std::invalid_argument("bad price range");
  }
  std::vector<std::pair<NodeId, NodeId>> pairs;
  int node_count = 0;
  switch (spec.family) {
    case GenSpec::Family::line:
    case GenSpec::Family::ring: {
      if (spec.nodes < 2) throw std::invalid_argument("line/ring needs at least 2 nodes");
      node_count = spec.nodes;
      for (int i = 1; i < spec.nodes; ++i) pairs.emplace_back(i, i + 1);
      if (spec.family == GenSpec::Family::ring) pairs.emplace_back(spec.nodes, 1);
      break;
    }
    case GenSpec::Family::grid: {
      if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols < 2) {
        throw std::invalid_argument("grid needs at least 2 cells");
      }
      node_count = spec.rows * spec.cols;
      auto id = [&](int r, int c) { return r * spec.cols + c + 1; };
      for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) pairs.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < spec.rows) pairs.emplace_back(id(r, c), id(r + 1, c));
        }
      }
      break;
    }
    case GenSpec::Family::random: {
      if (spec.nodes < 2) throw std::invalid_argument("random needs at least 2 nodes");
      if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0) {
        throw std::invalid_argument("edge probability outside [0, 1]");
      }
      node_count = spec.nodes;
      break;
    }
  }

  std::mt19937_64 rng(spec.seed);
  if (spec.family == GenSpec::Family::random) {
    for (int i = 1; i <= spec.nodes; ++i) {
      for (int j = i + 1; j <= spec.nodes; ++j) {
        if (bernoulli(rng, spec.edge_prob)) pairs.emplace_back(i, j);
      }
    }
  }

  const std::int64_t lo = spec.price_lo_units * Price::scale;
  const std::int64_t hi = spec.price_hi_units * Price::scale;
  std::set<std::int64_t> used;
  std::vector<Link> links;
  links.reserve(pairs.size());
  for (const auto& [src, dst] : pairs) {
    std::int64_t micros;
    if (spec.allow_ties) {
      micros = uniform_int(rng, spec.price_lo_units, spec.price_hi_units) * Price::scale;
    } else {
      if (static_cast<std::int64_t>(pairs.size()) > hi - lo + 1) {
        throw std::invalid_argument("price range too small for distinct prices");
      }
      micros = uniform_int(rng, lo, hi);
      while (!used.insert(micros).second) {
        micros = micros == hi ? lo : micros + 1;
      }
    }
    links.push_back(Link{src, dst, Price::from_micros(micros)});
  }

  std::vector<NodeId> extra;
  for (int n = 1; n <= node_count; ++n) extra.push_back(n);
  return Topology(spec.k, std::move(links), extra);
}

ApproximationReport approximation_report(const Topology& t, std::size_t link_cap) {
  ApproximationReport rep;
  rep.greedy = centralized_greedy(t);
  rep.optimal = brute_force_optimal(t, link_cap);
  if (rep.greedy.total_price > rep.optimal.best_weight) {
    throw std::logic_error("greedy exceeded the exact optimum");
  }
  if (!t.is_maximal(rep.greedy.chosen)) {
    throw std::logic_error("greedy schedule is not maximal");
  }
  rep.ratio = rep.optimal.best_weight.micros() == 0
                  ? 1.0
                  : static_cast<double>(rep.greedy.total_price.micros()) /
                        static_cast<double>(rep.optimal.best_weight.micros());
  return rep;
}

}  // namespace linksched
