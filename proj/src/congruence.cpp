#include "culat/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace culat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<int> labels() {
    std::vector<int> out(parent_.size());
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<int> parent_;
};

// Worklist closure: each merged pair (a, b) forces a∨z ~ b∨z and a∧z ~ b∧z.
Congruence close(const Lattice& l, UnionFind& uf, std::vector<std::pair<Element, Element>> pending) {
  const int n = l.size();
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    for (Element z = 0; z < n; ++z) {
      const Element ja = l.join(a, z), jb = l.join(b, z);
      if (uf.unite(ja, jb)) pending.emplace_back(ja, jb);
      const Element ma = l.meet(a, z), mb = l.meet(b, z);
      if (uf.unite(ma, mb)) pending.emplace_back(ma, mb);
    }
  }
  return Congruence(uf.labels());
}

}  // namespace

Congruence::Congruence(std::vector<int> class_of) : class_of_(std::move(class_of)) {
  std::vector<int> seen_label;
  for (int& c : class_of_) {
    auto it = std::find(seen_label.begin(), seen_label.end(), c);
    if (it == seen_label.end()) {
      seen_label.push_back(c);
      c = static_cast<int>(seen_label.size()) - 1;
    } else {
      c = static_cast<int>(it - seen_label.begin());
    }
  }
  class_count_ = static_cast<int>(seen_label.size());
}

std::vector<ElementSet> Congruence::classes() const {
  std::vector<ElementSet> out(class_count_);
  for (Element x = 0; x < ground_size(); ++x) out[class_of_[x]].insert(x);
  return out;
}

bool Congruence::refines(const Congruence& coarser) const {
  std::vector<int> image(class_count_, -1);
  for (Element x = 0; x < ground_size(); ++x) {
    int& slot = image[class_of_[x]];
    if (slot == -1) slot = coarser.class_of(x);
    else if (slot != coarser.class_of(x)) return false;
  }
  return true;
}

Congruence identity_congruence(const Lattice& l) {
  std::vector<int> c(l.size());
  std::iota(c.begin(), c.end(), 0);
  return Congruence(std::move(c));
}

Congruence full_congruence(const Lattice& l) { return Congruence(std::vector<int>(l.size(), 0)); }

Congruence congruence_closure(const Lattice& l, const std::vector<int>& class_of) {
  const int n = l.size();
  if (static_cast<int>(class_of.size()) != n) throw std::invalid_argument("partition size does not match lattice");
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> pending;
  std::vector<int> first(n, -1);
  for (Element x = 0; x < n; ++x) {
    const int c = class_of[x];
    if (c < 0 || c >= n) throw std::invalid_argument("class label out of range");
    if (first[c] == -1) first[c] = x;
    else if (uf.unite(first[c], x)) pending.emplace_back(first[c], x);
  }
  return close(l, uf, std::move(pending));
}

bool is_congruence(const Lattice& l, const Congruence& t) {
  const int n = l.size();
  if (t.ground_size() != n) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!t.related(a, b)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!t.related(l.join(a, z), l.join(b, z)) || !t.related(l.meet(a, z), l.meet(b, z))) return false;
      }
    }
  }
  return true;
}

Congruence cg(const Lattice& l, Element x, Element y) {
  if (x < 0 || y < 0 || x >= l.size() || y >= l.size() || !l.poset().covers(x, y)) {
    throw std::invalid_argument("cg: (" + std::to_string(x) + ", " + std::to_string(y) + ") is not a cover");
  }
  UnionFind uf(l.size());
  uf.unite(x, y);
  return close(l, uf, {{x, y}});
}

Congruence cg(const Lattice& l, Element j) {
  const int idx = l.join_irreducible_index(j);
  if (idx < 0) throw std::invalid_argument("cg: " + std::to_string(j) + " is not join-irreducible");
  return cg(l, l.join_irreducibles()[idx].j_star, j);
}

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b) {
  const int n = l.size();
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> pending;
  for (const Congruence* t : {&a, &b}) {
    std::vector<int> first(t->class_count(), -1);
    for (Element x = 0; x < n; ++x) {
      int& f = first[t->class_of(x)];
      if (f == -1) f = x;
      else if (uf.unite(f, x)) pending.emplace_back(f, x);
    }
  }
  return close(l, uf, std::move(pending));
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  std::vector<int> c(a.ground_size());
  for (Element x = 0; x < a.ground_size(); ++x) c[x] = a.class_of(x) * b.class_count() + b.class_of(x);
  return Congruence(std::move(c));
}

std::vector<Congruence> all_congruences(const Lattice& l) {
  std::set<Congruence> found;
  found.insert(identity_congruence(l));
  std::vector<Congruence> generators;
  for (const auto& ji : l.join_irreducibles()) generators.push_back(cg(l, ji.j_star, ji.j));
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& t : frontier) {
      for (const Congruence& g : generators) {
        Congruence joined = congruence_join(l, t, g);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> all(found.begin(), found.end());
  // Finer congruences first: a linear extension of refinement.
  std::stable_sort(all.begin(), all.end(),
                   [](const Congruence& a, const Congruence& b) { return a.class_count() > b.class_count(); });
  return all;
}

CongruenceLattice congruence_lattice(const Lattice& l) {
  std::vector<Congruence> all = all_congruences(l);
  if (static_cast<int>(all.size()) > kMaxElements) throw std::length_error("congruence lattice too large");
  std::vector<BitSet> down(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if (all[k].refines(all[i])) down[i].insert(static_cast<Element>(k));
    }
  }
  Lattice order = make_lattice(Poset::from_down_sets(std::move(down)));
  return CongruenceLattice{std::move(all), std::move(order)};
}

std::optional<UniformityViolation> congruence_uniformity_violation(const Lattice& l) {
  const auto& js = l.join_irreducibles();
  const auto& ms = l.meet_irreducibles();
  if (js.size() != ms.size()) return UniformityViolation{};
  // Congruences of L and of its dual coincide, so cg(m, m^*) computed in L
  // is the congruence of m in the dual.
  for (bool dual_side : {false, true}) {
    const auto& irr = dual_side ? ms : js;
    std::vector<Congruence> seen;
    seen.reserve(irr.size());
    for (const auto& e : irr) {
      Congruence t = dual_side ? cg(l, e.j, e.j_star) : cg(l, e.j_star, e.j);
      for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k] == t) return UniformityViolation{dual_side, irr[k].j, e.j};
      }
      seen.push_back(std::move(t));
    }
  }
  return std::nullopt;
}

bool is_congruence_uniform(const Lattice& l) { return !congruence_uniformity_violation(l).has_value(); }

Quotient quotient(const Lattice& l, const Congruence& t) {
  const int n = l.size();
  if (t.ground_size() != n) throw std::invalid_argument("congruence does not belong to this lattice");
  const int k = t.class_count();
  // Class i's smallest element precedes class i+1's, and x <= y implies
  // [x] <= [y], so class numbering is a linear extension of the quotient.
  std::vector<BitSet> down(k);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (l.leq(x, y)) down[t.class_of(y)].insert(t.class_of(x));
    }
  }
  Quotient out{make_lattice(Poset::from_down_sets(std::move(down))), {}};
  out.projection.assign(t.class_indices().begin(), t.class_indices().end());
  return out;
}

ElementSet kernel_irreducibles(const Lattice& l, const Congruence& t) {
  ElementSet out;
  for (const auto& ji : l.join_irreducibles()) {
    if (t.related(ji.j_star, ji.j)) out.insert(ji.j);
  }
  return out;
}

}  // namespace culat
