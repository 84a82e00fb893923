#include "culat/core_label.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "culat/congruence.hpp"

namespace culat {

CoverLabeling::CoverLabeling(Lattice l) : lattice_(std::move(l)) {
  if (!is_congruence_uniform(lattice_)) throw NotCongruenceUniform();
  const int n = lattice_.size();
  const auto& js = lattice_.join_irreducibles();
  labels_.assign(n * n, -1);
  for (auto [u, v] : lattice_.poset().cover_relations()) {
    int found = -1;
    for (int k = 0; k < static_cast<int>(js.size()); ++k) {
      if (lattice_.join(js[k].j, u) != v || lattice_.meet(js[k].j, u) != js[k].j_star) continue;
      if (found != -1) {
        throw std::logic_error("cover " + std::to_string(u) + " < " + std::to_string(v) +
                               " is perspective to several join-irreducible covers");
      }
      found = k;
    }
    if (found == -1) {
      throw std::logic_error("cover " + std::to_string(u) + " < " + std::to_string(v) +
                             " is perspective to no join-irreducible cover");
    }
    labels_[u * n + v] = found;
  }
}

CoverLabeling label_covers(const Lattice& l) { return CoverLabeling(l); }

Element nucleus(const Lattice& l, Element x) {
  const ElementSet lower = l.poset().lower_covers(x);
  return lower.empty() ? x : l.meet_of(lower);
}

LabelSet psi(const CoverLabeling& cl, Element x) {
  const Lattice& l = cl.lattice();
  const ElementSet core = l.poset().interval(nucleus(l, x), x);
  LabelSet out;
  for (Element v : core) {
    for (Element u : l.poset().lower_covers(v) & core) out.insert(cl.label(u, v));
  }
  return out;
}

LabelSet gamma(const CoverLabeling& cl, Element x) {
  LabelSet out;
  for (Element y : cl.lattice().poset().lower_covers(x)) out.insert(cl.label(y, x));
  return out;
}

CoreLabelOrder core_label_order(const CoverLabeling& cl) {
  const int n = cl.lattice().size();
  CoreLabelOrder out;
  out.psi.reserve(n);
  for (Element x = 0; x < n; ++x) out.psi.push_back(psi(cl, x));
  std::vector<BitSet> down(n);
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      if (!out.psi[x].is_subset_of(out.psi[y])) continue;
      if (x > y) throw std::logic_error("core label containment does not respect the lattice order");
      down[y].insert(x);
    }
  }
  out.order = Poset::from_down_sets(std::move(down));
  return out;
}

bool is_clo_meet_semilattice(const CoreLabelOrder& clo) {
  const Poset& p = clo.order;
  if (p.size() == 0 || p.minimal_elements().size() != 1) return false;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!poset_meet(p, x, y)) return false;
    }
  }
  return true;
}

bool is_clo_lattice(const CoreLabelOrder& clo) {
  return is_clo_meet_semilattice(clo) && clo.order.maximal_elements().size() == 1;
}

std::optional<IntersectionViolation> intersection_property_violation(const CoreLabelOrder& clo) {
  const int n = static_cast<int>(clo.psi.size());
  std::vector<LabelSet> sorted = clo.psi;
  std::sort(sorted.begin(), sorted.end());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!std::binary_search(sorted.begin(), sorted.end(), clo.psi[x] & clo.psi[y])) {
        return IntersectionViolation{x, y};
      }
    }
  }
  return std::nullopt;
}

bool has_intersection_property(const CoreLabelOrder& clo) { return !intersection_property_violation(clo); }

int boolean_defect(const CoverLabeling& cl) {
  int total = 0;
  for (Element x = 0; x < cl.lattice().size(); ++x) total += (psi(cl, x) - gamma(cl, x)).size();
  return total;
}

BooleanNexus boolean_nexus(const CoverLabeling& cl) {
  const Lattice& l = cl.lattice();
  const ElementSet atoms = l.atoms();
  LabelSet atom_labels;
  for (Element a : atoms) atom_labels.insert(l.join_irreducible_index(a));
  BooleanNexus out;
  for (Element x = 0; x < l.size(); ++x) {
    if (gamma(cl, x).is_subset_of(atom_labels)) out.elements.insert(x);
  }
  out.order = induced_subposet(l.poset(), out.elements);
  return out;
}

std::vector<ElementSet> crosscut_complex(const Lattice& l, ElementSet c) {
  if (!is_crosscut(l, c)) throw std::invalid_argument("not a crosscut: " + c.to_string());
  if (c.size() > 24) throw std::invalid_argument("crosscut too large for face enumeration");
  const std::vector<Element> members(c.begin(), c.end());
  const int k = static_cast<int>(members.size());
  std::vector<ElementSet> faces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet face;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) face.insert(members[i]);
    }
    const bool spanning = l.join_of(face) == l.top() && l.meet_of(face) == l.bottom();
    if (!spanning) faces.push_back(face);
  }
  std::sort(faces.begin(), faces.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return faces;
}

std::optional<std::vector<Element>> check_label_swap(const CoverLabeling& cl, Element y, ElementSet covers) {
  const Lattice& l = cl.lattice();
  if (covers.empty() || !covers.is_subset_of(l.poset().upper_covers(y))) {
    throw std::invalid_argument("swap matching needs a nonempty set of upper covers of " + std::to_string(y));
  }
  const std::vector<Element> a(covers.begin(), covers.end());
  const Element x = l.join_of(covers);
  const std::vector<Element> lower(l.poset().lower_covers(x).begin(), l.poset().lower_covers(x).end());
  std::vector<Element> chosen;
  ElementSet used;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == a.size()) return l.meet_of(used) == y;
    const int want = cl.label(y, a[i]);
    for (Element c : lower) {
      if (used.contains(c) || cl.label(c, x) != want) continue;
      used.insert(c);
      chosen.push_back(c);
      if (extend(i + 1)) return true;
      chosen.pop_back();
      used.erase(c);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return chosen;
}

}  // namespace culat
