#include "culat/poset.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace culat {

namespace {

std::string cycle_message(const std::vector<Element>& cycle) {
  std::string msg = "order relation has a cycle:";
  for (Element e : cycle) msg += " " + std::to_string(e);
  return msg;
}

}  // namespace

CycleError::CycleError(std::vector<Element> cycle)
    : std::runtime_error(cycle_message(cycle)), cycle_(std::move(cycle)) {}

struct Poset::MobiusCache {
  std::once_flag once;
  std::vector<int> values;
};

Poset::Poset() : mobius_(std::make_shared<MobiusCache>()) {}

Poset::Poset(std::vector<BitSet> down)
    : n_(static_cast<int>(down.size())),
      down_(std::move(down)),
      up_(n_),
      lower_(n_),
      upper_(n_),
      mobius_(std::make_shared<MobiusCache>()) {
  for (Element x = 0; x < n_; ++x) {
    for (Element y : down_[x]) up_[y].insert(x);
  }
  for (Element x = 0; x < n_; ++x) {
    BitSet strict = down_[x] - BitSet::singleton(x);
    BitSet below_strict;
    for (Element y : strict) below_strict |= down_[y] - BitSet::singleton(y);
    lower_[x] = strict - below_strict;
    for (Element y : lower_[x]) upper_[y].insert(x);
  }
}

Poset Poset::from_covers(int n, std::span<const Relation> relations, std::vector<Element>* relabel) {
  if (n < 0 || n > kMaxElements) {
    throw std::invalid_argument("poset size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxElements));
  }
  std::vector<std::vector<Element>> succ(n);
  std::vector<int> indegree(n, 0);
  for (auto [u, v] : relations) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("relation (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) continue;
    succ[u].push_back(v);
    ++indegree[v];
  }

  // Stable topological sort: always place the smallest available index.
  std::vector<Element> order;
  order.reserve(n);
  BitSet available;
  for (Element x = 0; x < n; ++x) {
    if (indegree[x] == 0) available.insert(x);
  }
  while (!available.empty()) {
    Element x = available.front();
    available.erase(x);
    order.push_back(x);
    for (Element y : succ[x]) {
      if (--indegree[y] == 0) available.insert(y);
    }
  }

  if (static_cast<int>(order.size()) != n) {
    // Every unplaced element has an unplaced predecessor; walk backwards.
    std::vector<std::vector<Element>> pred(n);
    for (auto [u, v] : relations) {
      if (u != v && indegree[v] > 0 && indegree[u] > 0) pred[v].push_back(u);
    }
    Element start = 0;
    while (indegree[start] == 0) ++start;
    std::vector<int> seen_at(n, -1);
    std::vector<Element> walk;
    Element cur = start;
    while (seen_at[cur] < 0) {
      seen_at[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      cur = pred[cur].front();
    }
    std::vector<Element> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    cycle.push_back(cycle.front());
    throw CycleError(std::move(cycle));
  }

  std::vector<Element> new_index(n);
  for (int i = 0; i < n; ++i) new_index[order[i]] = i;
  std::vector<BitSet> down(n);
  for (Element x : order) {
    down[new_index[x]].insert(new_index[x]);
  }
  // Propagate down-sets in topological order.
  for (Element x : order) {
    for (Element y : succ[x]) down[new_index[y]] |= down[new_index[x]];
  }
  if (relabel != nullptr) *relabel = new_index;
  return Poset(std::move(down));
}

Poset Poset::from_down_sets(std::vector<BitSet> down) {
  const int n = static_cast<int>(down.size());
  if (n > kMaxElements) throw std::invalid_argument("poset larger than " + std::to_string(kMaxElements));
  for (Element x = 0; x < n; ++x) {
    if (!down[x].contains(x)) throw std::invalid_argument("down-set of " + std::to_string(x) + " is not reflexive");
    if (!down[x].is_subset_of(BitSet::range(x + 1))) {
      throw std::invalid_argument("indices are not a linear extension at " + std::to_string(x));
    }
    for (Element y : down[x]) {
      if (!down[y].is_subset_of(down[x])) {
        throw std::invalid_argument("down-sets are not transitive at " + std::to_string(x));
      }
    }
  }
  return Poset(std::move(down));
}

std::vector<Relation> Poset::cover_relations() const {
  std::vector<Relation> out;
  for (Element u = 0; u < n_; ++u) {
    for (Element v : upper_[u]) out.emplace_back(u, v);
  }
  return out;
}

int Poset::cover_count() const {
  int count = 0;
  for (Element x = 0; x < n_; ++x) count += lower_[x].size();
  return count;
}

BitSet Poset::minimal_elements() const {
  BitSet out;
  for (Element x = 0; x < n_; ++x) {
    if (lower_[x].empty()) out.insert(x);
  }
  return out;
}

BitSet Poset::maximal_elements() const {
  BitSet out;
  for (Element x = 0; x < n_; ++x) {
    if (upper_[x].empty()) out.insert(x);
  }
  return out;
}

int Poset::mobius(Element x, Element y) const {
  std::call_once(mobius_->once, [this] {
    std::vector<int>& mu = mobius_->values;
    mu.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Element a = 0; a < n_; ++a) {
      mu[a * n_ + a] = 1;
      for (Element b : up_[a] - BitSet::singleton(a)) {
        int sum = 0;
        for (Element z : interval(a, b) - BitSet::singleton(b)) sum += mu[a * n_ + z];
        mu[a * n_ + b] = -sum;
      }
    }
  });
  return mobius_->values[x * n_ + y];
}

Poset dual(const Poset& p) {
  const int n = p.size();
  std::vector<BitSet> down(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up(x)) down[n - 1 - x].insert(n - 1 - y);
  }
  return Poset::from_down_sets(std::move(down));
}

Poset induced_subposet(const Poset& p, ElementSet keep, std::vector<Element>* index_map) {
  std::vector<Element> old_of_new(keep.begin(), keep.end());
  std::vector<int> new_of_old(p.size(), -1);
  for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i) new_of_old[old_of_new[i]] = i;
  std::vector<BitSet> down(old_of_new.size());
  for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i) {
    for (Element y : p.down(old_of_new[i]) & keep) down[i].insert(new_of_old[y]);
  }
  if (index_map != nullptr) *index_map = old_of_new;
  return Poset::from_down_sets(std::move(down));
}

bool is_antichain(const Poset& p, ElementSet x) {
  for (Element a : x) {
    if (((p.down(a) | p.up(a)) & x) != BitSet::singleton(a)) return false;
  }
  return true;
}

bool is_chain(const Poset& p, ElementSet x) {
  for (Element a : x) {
    if (!x.is_subset_of(p.down(a) | p.up(a))) return false;
  }
  return true;
}

bool is_order_convex(const Poset& p, ElementSet x) {
  for (Element a : x) {
    for (Element b : x & p.up(a)) {
      if (!p.interval(a, b).is_subset_of(x)) return false;
    }
  }
  return true;
}

void for_each_maximal_chain(const Poset& p, const std::function<void(std::span<const Element>)>& visit) {
  std::vector<Element> chain;
  std::function<void(Element)> extend = [&](Element x) {
    chain.push_back(x);
    if (p.upper_covers(x).empty()) {
      visit(chain);
    } else {
      for (Element y : p.upper_covers(x)) extend(y);
    }
    chain.pop_back();
  };
  for (Element x : p.minimal_elements()) extend(x);
}

std::vector<std::vector<Element>> maximal_chains(const Poset& p) {
  std::vector<std::vector<Element>> out;
  for_each_maximal_chain(p, [&](std::span<const Element> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

std::optional<Element> poset_meet(const Poset& p, Element x, Element y) {
  BitSet lower = p.down(x) & p.down(y);
  if (lower.empty()) return std::nullopt;
  // A greatest lower bound, if any, has the largest index.
  Element top = lower.back();
  if (p.down(top) != lower) return std::nullopt;
  return top;
}

std::optional<Element> poset_join(const Poset& p, Element x, Element y) {
  BitSet upper = p.up(x) & p.up(y);
  if (upper.empty()) return std::nullopt;
  Element bottom = upper.front();
  if (p.up(bottom) != upper) return std::nullopt;
  return bottom;
}

}  // namespace culat
