#include "culat/doubling.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "culat/canonical.hpp"

namespace culat {

Doubled double_set(const Poset& p, ElementSet i) {
  const int n = p.size();
  if (!i.is_subset_of(p.elements())) throw std::invalid_argument("doubling set contains unknown elements");
  ElementSet below;
  for (Element y : i) below |= p.down(y);
  const ElementSet upper_part = (p.elements() - below) | i;

  std::vector<DoubledFrom> from;
  for (Element x = 0; x < n; ++x) {
    if (below.contains(x)) from.push_back({x, 0});
    if (upper_part.contains(x)) from.push_back({x, 1});
  }
  const int m = static_cast<int>(from.size());
  if (m > kMaxElements) throw std::length_error("doubled poset exceeds " + std::to_string(kMaxElements) + " elements");
  std::vector<BitSet> down(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b <= a; ++b) {
      if (from[b].bit <= from[a].bit && p.leq(from[b].x, from[a].x)) down[a].insert(b);
    }
  }
  return Doubled{Poset::from_down_sets(std::move(down)), std::move(from)};
}

Lattice double_interval(const Lattice& l, Element a, Element b, std::vector<DoubledFrom>* provenance) {
  if (a < 0 || b < 0 || a >= l.size() || b >= l.size() || !l.leq(a, b)) {
    throw std::invalid_argument("doubling interval [" + std::to_string(a) + ", " + std::to_string(b) + "] is empty");
  }
  Doubled d = double_set(l.poset(), l.poset().interval(a, b));
  auto result = as_lattice(d.poset);
  if (auto* bad = std::get_if<NotALattice>(&result)) {
    throw std::logic_error("interval doubling produced a non-lattice: " + bad->describe());
  }
  if (provenance != nullptr) *provenance = std::move(d.provenance);
  return std::get<Lattice>(std::move(result));
}

int irreducible_count_delta(const Poset& p, ElementSet i) {
  if (!is_order_convex(p, i)) throw std::invalid_argument("set is not order convex");
  int count = 0;
  for (Element x : i) {
    if ((p.down(x) & i) == BitSet::singleton(x)) ++count;
  }
  return count;
}

namespace {

std::optional<Interval> as_interval(const Lattice& l, ElementSet s) {
  if (s.empty()) return std::nullopt;
  const Element lo = l.meet_of(s);
  const Element hi = l.join_of(s);
  if (!s.contains(lo) || !s.contains(hi) || l.poset().interval(lo, hi) != s) return std::nullopt;
  return Interval{lo, hi};
}

}  // namespace

Lattice run_script(std::span<const ElementSet> steps) {
  Lattice l = chain_lattice(1);
  for (int k = 0; k < static_cast<int>(steps.size()); ++k) {
    if (!steps[k].is_subset_of(l.poset().elements())) {
      throw ScriptError(k, "step " + std::to_string(k + 1) + ": set has elements outside the lattice");
    }
    const auto iv = as_interval(l, steps[k]);
    if (!iv) throw ScriptError(k, "step " + std::to_string(k + 1) + ": set is not an interval");
    l = double_interval(l, iv->lo, iv->hi);
  }
  return l;
}

Lattice run_script(std::span<const Interval> steps) {
  Lattice l = chain_lattice(1);
  for (int k = 0; k < static_cast<int>(steps.size()); ++k) {
    const auto [lo, hi] = steps[k];
    if (lo < 0 || hi < 0 || lo >= l.size() || hi >= l.size() || !l.leq(lo, hi)) {
      throw ScriptError(k, "step " + std::to_string(k + 1) + ": [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] is not an interval of the current lattice");
    }
    l = double_interval(l, lo, hi);
  }
  return l;
}

void generate_cu(int max_n, const std::function<void(const Lattice&)>& visit) {
  if (max_n > kMaxGeneratedSize) {
    throw std::invalid_argument("generate_cu supports at most " + std::to_string(kMaxGeneratedSize) + " elements");
  }
  if (max_n < 1) return;
  // levels[k]: canonical form -> representative, for lattices of size k.
  std::vector<std::map<CanonicalForm, Lattice>> levels(max_n + 1);
  const Lattice one = chain_lattice(1);
  levels[1].emplace(canonical_form(one.poset()), one);
  for (int k = 1; k <= max_n; ++k) {
    for (const auto& [form, l] : levels[k]) {
      visit(l);
      for (Element a = 0; a < k; ++a) {
        for (Element b : l.poset().up(a)) {
          const int grown = k + l.poset().interval(a, b).size();
          if (grown > max_n) continue;
          Lattice doubled = double_interval(l, a, b);
          CanonicalForm key = canonical_form(doubled.poset());
          levels[grown].try_emplace(std::move(key), std::move(doubled));
        }
      }
    }
    levels[k].clear();
  }
}

std::vector<Lattice> generate_cu(int max_n) {
  std::vector<Lattice> out;
  generate_cu(max_n, [&](const Lattice& l) { out.push_back(l); });
  return out;
}

}  // namespace culat
