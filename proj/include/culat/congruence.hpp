#pragma once

#include <optional>
#include <vector>

#include "culat/lattice.hpp"

namespace culat {

// An equivalence relation on 0..n-1 stored as class indices. Classes are
// numbered in order of their smallest element.
class Congruence {
 public:
  Congruence() = default;
  // `class_of` may use arbitrary labels; they are renumbered.
  explicit Congruence(std::vector<int> class_of);

  int ground_size() const { return static_cast<int>(class_of_.size()); }
  int class_count() const { return class_count_; }
  int class_of(Element x) const { return class_of_[x]; }
  bool related(Element x, Element y) const { return class_of_[x] == class_of_[y]; }
  const std::vector<int>& class_indices() const { return class_of_; }
  std::vector<ElementSet> classes() const;

  bool is_identity() const { return class_count_ == ground_size(); }
  bool is_full() const { return class_count_ <= 1; }
  // Every class of *this lies inside a class of `coarser`.
  bool refines(const Congruence& coarser) const;

  bool operator==(const Congruence& other) const { return class_of_ == other.class_of_; }
  auto operator<=>(const Congruence& other) const { return class_of_ <=> other.class_of_; }

 private:
  std::vector<int> class_of_;
  int class_count_ = 0;
};

Congruence identity_congruence(const Lattice& l);
Congruence full_congruence(const Lattice& l);

// Finest congruence containing the given equivalence (closure under meet
// and join compatibility).
Congruence congruence_closure(const Lattice& l, const std::vector<int>& class_of);
bool is_congruence(const Lattice& l, const Congruence& t);

// Finest congruence collapsing the cover x ⋖ y. Throws
// std::invalid_argument for non-covers.
Congruence cg(const Lattice& l, Element x, Element y);
// cg(j_*, j) for a join-irreducible j.
Congruence cg(const Lattice& l, Element j);

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // index i is element i of `order`
  Lattice order;                        // refinement order
};

// Every congruence, finer ones first (a linear extension of refinement).
std::vector<Congruence> all_congruences(const Lattice& l);

// Throws std::length_error if there are more than kMaxElements congruences.
CongruenceLattice congruence_lattice(const Lattice& l);

// Two join-irreducibles (or, with `dual` set, two meet-irreducibles) that
// generate the same congruence. When |J| != |M| the pair is (-1, -1).
struct UniformityViolation {
  bool dual = false;
  Element a = -1;
  Element b = -1;
};

std::optional<UniformityViolation> congruence_uniformity_violation(const Lattice& l);
bool is_congruence_uniform(const Lattice& l);

struct Quotient {
  Lattice lattice;
  std::vector<Element> projection;  // x -> [x]
};

Quotient quotient(const Lattice& l, const Congruence& t);

// Join-irreducibles j with (j_*, j) collapsed by t.
ElementSet kernel_irreducibles(const Lattice& l, const Congruence& t);

}  // namespace culat
