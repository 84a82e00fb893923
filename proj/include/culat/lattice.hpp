#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "culat/bitset.hpp"
#include "culat/poset.hpp"

namespace culat {

// Why a poset is not a lattice. For a missing meet, `bounds` holds two
// incomparable maximal lower bounds of (x, y); for a missing join, two
// incomparable minimal upper bounds. Empty posets and posets where x, y have
// no common bound at all leave `bounds` empty.
struct NotALattice {
  enum class Kind { kEmpty, kNoMeet, kNoJoin };
  Kind kind = Kind::kEmpty;
  Element x = -1;
  Element y = -1;
  ElementSet bounds;

  std::string describe() const;
};

class NotALatticeError : public std::runtime_error {
 public:
  explicit NotALatticeError(NotALattice witness);
  const NotALattice& witness() const { return witness_; }

 private:
  NotALattice witness_;
};

struct JoinIrreducible {
  Element j;
  Element j_star;  // the unique lower cover
  bool operator==(const JoinIrreducible&) const = default;
};

class Lattice;
std::variant<Lattice, NotALattice> as_lattice(const Poset& p);

// A finite lattice with precomputed meet and join tables. Immutable.
class Lattice {
 public:
  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  Element bottom() const { return 0; }
  Element top() const { return poset_.size() - 1; }

  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  // Join of the empty set is the bottom, meet of the empty set the top.
  Element join_of(ElementSet xs) const;
  Element meet_of(ElementSet xs) const;

  // Sorted by index.
  const std::vector<JoinIrreducible>& join_irreducibles() const { return join_irreducibles_; }
  // Meet-irreducibles paired with their unique upper cover (in the j_star slot).
  const std::vector<JoinIrreducible>& meet_irreducibles() const { return meet_irreducibles_; }
  ElementSet join_irreducible_set() const { return join_irreducible_set_; }
  ElementSet meet_irreducible_set() const { return meet_irreducible_set_; }
  // Position of j in join_irreducibles(), or -1.
  int join_irreducible_index(Element j) const { return ji_index_[j]; }

  ElementSet atoms() const { return poset_.upper_covers(bottom()); }
  ElementSet coatoms() const { return poset_.lower_covers(top()); }

 private:
  friend std::variant<Lattice, NotALattice> as_lattice(const Poset& p);
  Lattice(Poset p, std::vector<std::uint8_t> meet, std::vector<std::uint8_t> join);

  Poset poset_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  std::vector<JoinIrreducible> join_irreducibles_;
  std::vector<JoinIrreducible> meet_irreducibles_;
  ElementSet join_irreducible_set_;
  ElementSet meet_irreducible_set_;
  std::vector<int> ji_index_;
};

// Throws NotALatticeError.
Lattice make_lattice(const Poset& p);
Lattice lattice_from_covers(int n, std::span<const Relation> covers);

Lattice dual(const Lattice& l);
Lattice boolean_lattice(int rank);
Lattice chain_lattice(int size);
// The interval [a, b] as a lattice; `index_map` receives original indices.
Lattice interval_sublattice(const Lattice& l, Element a, Element b, std::vector<Element>* index_map = nullptr);

std::vector<JoinIrreducible> join_irreducibles(const Lattice& l);
ElementSet atoms(const Lattice& l);
ElementSet coatoms(const Lattice& l);

int mobius_bottom_top(const Lattice& l);

// Semidistributivity. A join violation (x; y, z) has x∨y = x∨z but
// x∨(y∧z) != x∨y; meet violations are the dual.
struct SemidistributivityViolation {
  Element x;
  Element y;
  Element z;
  bool operator==(const SemidistributivityViolation&) const = default;
};

std::optional<SemidistributivityViolation> join_semidistributivity_violation(const Lattice& l);
std::optional<SemidistributivityViolation> meet_semidistributivity_violation(const Lattice& l);
bool is_join_semidistributive(const Lattice& l);
bool is_meet_semidistributive(const Lattice& l);
bool is_semidistributive(const Lattice& l);

// All irredundant join representations of x (every one is an antichain
// without the bottom). Exponential in the size of the down-set of x.
std::vector<ElementSet> irredundant_join_representations(const Lattice& l, Element x);
// The irredundant representation refining every other one, found by
// exhaustive search; nullopt when none exists.
std::optional<ElementSet> canonical_join_representation(const Lattice& l, Element x);
// Dual notion, through the dual lattice.
std::optional<ElementSet> canonical_meet_representation(const Lattice& l, Element x);

bool is_atomic(const Lattice& l);

bool is_crosscut(const Lattice& l, ElementSet c);
// Sum of (-1)^|X| over spanning X ⊆ C. Throws std::invalid_argument if C is
// not a crosscut.
int crosscut_mobius(const Lattice& l, ElementSet c);

// mu(0,1) != 0. Only meaningful for meet-semidistributive lattices; throws
// std::invalid_argument otherwise.
bool is_spherical(const Lattice& l);

}  // namespace culat
