#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "culat/lattice.hpp"

namespace culat {

class NotCongruenceUniform : public std::invalid_argument {
 public:
  NotCongruenceUniform() : std::invalid_argument("lattice is not congruence-uniform") {}
};

// Labels every cover u ⋖ v of a congruence-uniform lattice by the unique
// join-irreducible j whose cover (j_*, j) is perspective to it
// (j ∨ u = v, j ∧ u = j_*). Labels are positions in join_irreducibles().
class CoverLabeling {
 public:
  // Throws NotCongruenceUniform.
  explicit CoverLabeling(Lattice l);

  const Lattice& lattice() const { return lattice_; }
  int label_count() const { return static_cast<int>(lattice_.join_irreducibles().size()); }
  // -1 if u ⋖ v is not a cover.
  int label(Element u, Element v) const { return labels_[u * lattice_.size() + v]; }
  Element label_element(Element u, Element v) const { return lattice_.join_irreducibles()[label(u, v)].j; }

 private:
  Lattice lattice_;
  std::vector<int> labels_;
};

CoverLabeling label_covers(const Lattice& l);

// Meet of the lower covers of x; the bottom for x = 0̂.
Element nucleus(const Lattice& l, Element x);

// Labels of covers inside the core [nucleus(x), x].
LabelSet psi(const CoverLabeling& cl, Element x);
// Labels of the lower covers of x (its canonical join representation).
LabelSet gamma(const CoverLabeling& cl, Element x);

// Elements of L ordered by containment of their core label sets. Indices
// coincide with those of L.
struct CoreLabelOrder {
  std::vector<LabelSet> psi;
  Poset order;
};

CoreLabelOrder core_label_order(const CoverLabeling& cl);
bool is_clo_meet_semilattice(const CoreLabelOrder& clo);
bool is_clo_lattice(const CoreLabelOrder& clo);

// A pair whose core label sets intersect in a set that is no Ψ(z).
struct IntersectionViolation {
  Element x;
  Element y;
};

std::optional<IntersectionViolation> intersection_property_violation(const CoreLabelOrder& clo);
bool has_intersection_property(const CoreLabelOrder& clo);

// Sum over x of |Ψ(x) \ Γ(x)|.
int boolean_defect(const CoverLabeling& cl);

// Elements whose canonical join representation consists of atoms.
struct BooleanNexus {
  ElementSet elements;
  Poset order;  // induced subposet of L
};

BooleanNexus boolean_nexus(const CoverLabeling& cl);

// Non-spanning subsets of the crosscut C (the empty set included), sorted
// by size, then by bit pattern. Throws std::invalid_argument if C is not a
// crosscut or has more than 24 elements.
std::vector<ElementSet> crosscut_complex(const Lattice& l, ElementSet c);

// Given distinct upper covers `covers` of y with join x, lower covers of x
// (one per upper cover, in the same ascending order) whose meet is y and
// whose labels match; nullopt if no such matching exists.
std::optional<std::vector<Element>> check_label_swap(const CoverLabeling& cl, Element y, ElementSet covers);

}  // namespace culat
