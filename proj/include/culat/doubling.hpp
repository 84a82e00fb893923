#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "culat/lattice.hpp"

namespace culat {

// Element (x, bit) of P x 2 that a doubled element came from.
struct DoubledFrom {
  Element x;
  int bit;
  bool operator==(const DoubledFrom&) const = default;
};

struct Doubled {
  Poset poset;
  std::vector<DoubledFrom> provenance;  // new index -> (x, bit)
};

// P[I]: the subposet of P x 2 on (P_{<=I} x {0}) ⊎ ((P \ P_{<=I}) ∪ I) x {1},
// where P_{<=I} is the down-closure of I. No convexity required; the result
// is indexed by lexicographic (x, bit) order.
Doubled double_set(const Poset& p, ElementSet i);

// L[[a, b]]. Throws std::invalid_argument unless a <= b.
Lattice double_interval(const Lattice& l, Element a, Element b, std::vector<DoubledFrom>* provenance = nullptr);

// Number of minimal elements of the order-convex set I, i.e. how many
// join-irreducibles doubling by I adds. Throws std::invalid_argument if I
// is not order convex.
int irreducible_count_delta(const Poset& p, ElementSet i);

struct Interval {
  Element lo;
  Element hi;
  bool operator==(const Interval&) const = default;
};

// Each step is a set (or interval) of the lattice produced so far, starting
// from the singleton lattice.
using DoublingScript = std::vector<ElementSet>;

class ScriptError : public std::invalid_argument {
 public:
  ScriptError(int step, const std::string& what) : std::invalid_argument(what), step_(step) {}
  int step() const { return step_; }  // 0-based

 private:
  int step_;
};

// Throws ScriptError if a step is not an interval.
Lattice run_script(std::span<const ElementSet> steps);
Lattice run_script(std::span<const Interval> steps);

inline constexpr int kMaxGeneratedSize = 16;

// Every congruence-uniform lattice with at most max_n elements, once per
// isomorphism class, ordered by size (then by canonical form). Throws
// std::invalid_argument if max_n exceeds kMaxGeneratedSize.
void generate_cu(int max_n, const std::function<void(const Lattice&)>& visit);
std::vector<Lattice> generate_cu(int max_n);

}  // namespace culat
