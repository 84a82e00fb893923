#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "culat/bitset.hpp"

namespace culat {

inline constexpr int kMaxElements = BitSet::kCapacity;

using Relation = std::pair<Element, Element>;

// Thrown by Poset::from_covers when the relation has a directed cycle.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(std::vector<Element> cycle);
  // Elements along the cycle, first element repeated at the end.
  const std::vector<Element>& cycle() const { return cycle_; }

 private:
  std::vector<Element> cycle_;
};

// A finite poset on 0..n-1. Indices always form a linear extension
// (x < y in the order implies x < y as integers). Immutable.
class Poset {
 public:
  Poset();

  // Order generated by `relations` (reflexive-transitive closure); the
  // relations need not be covers. If the identity labeling is not a linear
  // extension the elements are relabeled by a stable topological sort and
  // `relabel` (if given) receives old index -> new index.
  static Poset from_covers(int n, std::span<const Relation> relations,
                           std::vector<Element>* relabel = nullptr);

  // Reflexive down-sets indexed by a linear extension. Validated.
  static Poset from_down_sets(std::vector<BitSet> down);

  int size() const { return n_; }
  BitSet elements() const { return BitSet::range(n_); }

  bool leq(Element x, Element y) const { return down_[y].contains(x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool covers(Element x, Element y) const { return lower_[y].contains(x); }

  BitSet down(Element x) const { return down_[x]; }
  BitSet up(Element x) const { return up_[x]; }
  BitSet lower_covers(Element x) const { return lower_[x]; }
  BitSet upper_covers(Element x) const { return upper_[x]; }
  // [x, y]; empty unless x <= y.
  BitSet interval(Element x, Element y) const { return up_[x] & down_[y]; }

  std::vector<Relation> cover_relations() const;
  int cover_count() const;
  BitSet minimal_elements() const;
  BitSet maximal_elements() const;

  // Computed for all pairs on first call; safe to call concurrently.
  int mobius(Element x, Element y) const;

  const std::vector<BitSet>& down_sets() const { return down_; }

  bool operator==(const Poset& other) const { return down_ == other.down_; }

 private:
  struct MobiusCache;

  explicit Poset(std::vector<BitSet> down);

  int n_ = 0;
  std::vector<BitSet> down_;
  std::vector<BitSet> up_;
  std::vector<BitSet> lower_;
  std::vector<BitSet> upper_;
  std::shared_ptr<MobiusCache> mobius_;
};

// Order-reversed poset, re-indexed by x -> n-1-x.
Poset dual(const Poset& p);

// Subposet induced on `keep`; `index_map` (if given) receives the original
// index of each new element.
Poset induced_subposet(const Poset& p, ElementSet keep, std::vector<Element>* index_map = nullptr);

bool is_antichain(const Poset& p, ElementSet x);
bool is_chain(const Poset& p, ElementSet x);
bool is_order_convex(const Poset& p, ElementSet x);

// Calls `visit` once per maximal chain (listed bottom to top).
void for_each_maximal_chain(const Poset& p, const std::function<void(std::span<const Element>)>& visit);
std::vector<std::vector<Element>> maximal_chains(const Poset& p);

// Greatest lower bound / least upper bound of x and y if one exists.
std::optional<Element> poset_meet(const Poset& p, Element x, Element y);
std::optional<Element> poset_join(const Poset& p, Element x, Element y);

}  // namespace culat
