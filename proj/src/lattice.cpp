#include "culat/lattice.hpp"

#include <algorithm>
#include <functional>

namespace culat {

namespace {

// Two incomparable maximal elements of `s` (s non-empty, no maximum).
ElementSet two_maximal(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element e : s) {
    if ((p.up(e) & s) == BitSet::singleton(e)) {
      out.insert(e);
      if (out.size() == 2) break;
    }
  }
  return out;
}

ElementSet two_minimal(const Poset& p, ElementSet s) {
  ElementSet out;
  for (Element e : s) {
    if ((p.down(e) & s) == BitSet::singleton(e)) {
      out.insert(e);
      if (out.size() == 2) break;
    }
  }
  return out;
}

const char* kind_name(NotALattice::Kind kind) {
  switch (kind) {
    case NotALattice::Kind::kEmpty:
      return "empty poset";
    case NotALattice::Kind::kNoMeet:
      return "no meet";
    case NotALattice::Kind::kNoJoin:
      return "no join";
  }
  return "?";
}

}  // namespace

std::string NotALattice::describe() const {
  if (kind == Kind::kEmpty) return "not a lattice: empty poset";
  std::string msg = std::string("not a lattice: ") + kind_name(kind) + " for " + std::to_string(x) + " and " +
                    std::to_string(y);
  if (!bounds.empty()) {
    msg += kind == Kind::kNoMeet ? " (maximal lower bounds " : " (minimal upper bounds ";
    msg += bounds.to_string() + ")";
  }
  return msg;
}

NotALatticeError::NotALatticeError(NotALattice witness)
    : std::runtime_error(witness.describe()), witness_(witness) {}

Lattice::Lattice(Poset p, std::vector<std::uint8_t> meet, std::vector<std::uint8_t> join)
    : poset_(std::move(p)), meet_(std::move(meet)), join_(std::move(join)), ji_index_(poset_.size(), -1) {
  for (Element x = 0; x < size(); ++x) {
    if (poset_.lower_covers(x).size() == 1) {
      ji_index_[x] = static_cast<int>(join_irreducibles_.size());
      join_irreducibles_.push_back({x, poset_.lower_covers(x).front()});
      join_irreducible_set_.insert(x);
    }
    if (poset_.upper_covers(x).size() == 1) {
      meet_irreducibles_.push_back({x, poset_.upper_covers(x).front()});
      meet_irreducible_set_.insert(x);
    }
  }
}

std::variant<Lattice, NotALattice> as_lattice(const Poset& p) {
  const int n = p.size();
  if (n == 0) return NotALattice{};
  std::vector<std::uint8_t> meet(static_cast<std::size_t>(n) * n);
  std::vector<std::uint8_t> join(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      ElementSet lower = p.down(x) & p.down(y);
      if (lower.empty() || p.down(lower.back()) != lower) {
        return NotALattice{NotALattice::Kind::kNoMeet, x, y, lower.empty() ? ElementSet{} : two_maximal(p, lower)};
      }
      ElementSet upper = p.up(x) & p.up(y);
      if (upper.empty() || p.up(upper.front()) != upper) {
        return NotALattice{NotALattice::Kind::kNoJoin, x, y, upper.empty() ? ElementSet{} : two_minimal(p, upper)};
      }
      meet[x * n + y] = meet[y * n + x] = static_cast<std::uint8_t>(lower.back());
      join[x * n + y] = join[y * n + x] = static_cast<std::uint8_t>(upper.front());
    }
  }
  return Lattice(p, std::move(meet), std::move(join));
}

Lattice make_lattice(const Poset& p) {
  auto result = as_lattice(p);
  if (auto* witness = std::get_if<NotALattice>(&result)) throw NotALatticeError(*witness);
  return std::get<Lattice>(std::move(result));
}

Lattice lattice_from_covers(int n, std::span<const Relation> covers) {
  return make_lattice(Poset::from_covers(n, covers));
}

Element Lattice::join_of(ElementSet xs) const {
  Element acc = bottom();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Lattice::meet_of(ElementSet xs) const {
  Element acc = top();
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

Lattice dual(const Lattice& l) { return make_lattice(dual(l.poset())); }

Lattice boolean_lattice(int rank) {
  if (rank < 0 || rank > 6) throw std::invalid_argument("boolean lattice rank must be in 0..6");
  const int n = 1 << rank;
  std::vector<BitSet> down(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if ((x & ~y) == 0) down[y].insert(x);
    }
  }
  return make_lattice(Poset::from_down_sets(std::move(down)));
}

Lattice chain_lattice(int size) {
  if (size < 1 || size > kMaxElements) throw std::invalid_argument("chain size out of range");
  std::vector<BitSet> down(size);
  for (int y = 0; y < size; ++y) down[y] = BitSet::range(y + 1);
  return make_lattice(Poset::from_down_sets(std::move(down)));
}

Lattice interval_sublattice(const Lattice& l, Element a, Element b, std::vector<Element>* index_map) {
  if (!l.leq(a, b)) throw std::invalid_argument("interval endpoints are not ordered");
  return make_lattice(induced_subposet(l.poset(), l.poset().interval(a, b), index_map));
}

std::vector<JoinIrreducible> join_irreducibles(const Lattice& l) { return l.join_irreducibles(); }
ElementSet atoms(const Lattice& l) { return l.atoms(); }
ElementSet coatoms(const Lattice& l) { return l.coatoms(); }

int mobius_bottom_top(const Lattice& l) { return l.poset().mobius(l.bottom(), l.top()); }

std::optional<SemidistributivityViolation> join_semidistributivity_violation(const Lattice& l) {
  const int n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = l.join(x, y);
      for (Element z = y + 1; z < n; ++z) {
        if (l.join(x, z) == xy && l.join(x, l.meet(y, z)) != xy) return SemidistributivityViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<SemidistributivityViolation> meet_semidistributivity_violation(const Lattice& l) {
  const int n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = l.meet(x, y);
      for (Element z = y + 1; z < n; ++z) {
        if (l.meet(x, z) == xy && l.meet(x, l.join(y, z)) != xy) return SemidistributivityViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool is_join_semidistributive(const Lattice& l) { return !join_semidistributivity_violation(l).has_value(); }
bool is_meet_semidistributive(const Lattice& l) { return !meet_semidistributivity_violation(l).has_value(); }
bool is_semidistributive(const Lattice& l) { return is_join_semidistributive(l) && is_meet_semidistributive(l); }

std::vector<ElementSet> irredundant_join_representations(const Lattice& l, Element x) {
  std::vector<ElementSet> out;
  const ElementSet candidates = l.poset().down(x) - BitSet::singleton(l.bottom());
  std::vector<Element> pool(candidates.begin(), candidates.end());

  auto irredundant = [&](ElementSet xs) {
    for (Element z : xs) {
      if (l.join_of(xs - BitSet::singleton(z)) == x) return false;
    }
    return true;
  };

  // Enumerate antichains of `pool` (irredundant sets are antichains).
  std::function<void(std::size_t, ElementSet, ElementSet)> grow = [&](std::size_t from, ElementSet chosen,
                                                                      ElementSet blocked) {
    if (l.join_of(chosen) == x && irredundant(chosen)) out.push_back(chosen);
    for (std::size_t i = from; i < pool.size(); ++i) {
      const Element e = pool[i];
      if (blocked.contains(e)) continue;
      grow(i + 1, chosen | BitSet::singleton(e), blocked | l.poset().down(e) | l.poset().up(e));
    }
  };
  grow(0, ElementSet{}, ElementSet{});
  return out;
}

std::optional<ElementSet> canonical_join_representation(const Lattice& l, Element x) {
  const auto reps = irredundant_join_representations(l, x);
  auto refines = [&](ElementSet a, ElementSet b) {
    for (Element z : a) {
      if (!(l.poset().up(z) & b).empty()) continue;
      return false;
    }
    return true;
  };
  for (ElementSet candidate : reps) {
    if (std::all_of(reps.begin(), reps.end(), [&](ElementSet other) { return refines(candidate, other); })) {
      return candidate;
    }
  }
  return std::nullopt;
}

std::optional<ElementSet> canonical_meet_representation(const Lattice& l, Element x) {
  const int n = l.size();
  const Lattice d = dual(l);
  auto rep = canonical_join_representation(d, n - 1 - x);
  if (!rep) return std::nullopt;
  ElementSet out;
  for (Element e : *rep) out.insert(n - 1 - e);
  return out;
}

bool is_atomic(const Lattice& l) {
  const ElementSet at = l.atoms();
  for (Element x = 0; x < l.size(); ++x) {
    if (l.join_of(at & l.poset().down(x)) != x) return false;
  }
  return true;
}

bool is_crosscut(const Lattice& l, ElementSet c) {
  if (!c.is_subset_of(l.poset().elements())) return false;
  if (c.contains(l.bottom()) || c.contains(l.top())) return false;
  if (!is_antichain(l.poset(), c)) return false;
  // Maximal chains are cover paths from bottom to top; look for one avoiding C.
  ElementSet reachable = BitSet::singleton(l.bottom());
  for (Element x = 1; x < l.size(); ++x) {
    if (!c.contains(x) && l.poset().lower_covers(x).intersects(reachable)) reachable.insert(x);
  }
  return !reachable.contains(l.top());
}

int crosscut_mobius(const Lattice& l, ElementSet c) {
  if (!is_crosscut(l, c)) throw std::invalid_argument("not a crosscut: " + c.to_string());
  if (c.size() > 30) throw std::invalid_argument("crosscut too large for subset enumeration");
  const std::vector<Element> members(c.begin(), c.end());
  const std::uint64_t subsets = std::uint64_t{1} << members.size();
  int total = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    ElementSet xs;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) xs.insert(members[i]);
    }
    if (l.meet_of(xs) == l.bottom() && l.join_of(xs) == l.top()) total += (xs.size() % 2 == 0) ? 1 : -1;
  }
  return total;
}

bool is_spherical(const Lattice& l) {
  if (auto v = meet_semidistributivity_violation(l)) {
    throw std::invalid_argument("sphericity via the Moebius function needs a meet-semidistributive lattice; "
                                "violated at (" + std::to_string(v->x) + "; " + std::to_string(v->y) + ", " +
                                std::to_string(v->z) + ")");
  }
  return mobius_bottom_top(l) != 0;
}

}  // namespace culat
