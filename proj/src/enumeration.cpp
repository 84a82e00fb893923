#include "culat/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/doubling.hpp"

namespace culat {

namespace {

constexpr int kCap = 16;
using Masks = std::array<std::uint64_t, kCap>;
using Form = std::array<std::uint64_t, kCap>;

std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

struct Node {
  int k = 0;
  Masks down{};
  bool has_form = false;
  Form form{};
};

Poset to_poset(const Node& node) {
  std::vector<BitSet> down(node.k);
  for (int i = 0; i < node.k; ++i) down[i] = BitSet(node.down[i]);
  return Poset::from_down_sets(std::move(down));
}

// Removes element r from the masks and renumbers those above it.
void delete_element(const Masks& in, int k, int r, Masks& out) {
  const std::uint64_t low = bit(r) - 1;
  int w = 0;
  for (int i = 0; i < k; ++i) {
    if (i == r) continue;
    const std::uint64_t m = in[i];
    out[w++] = (m & low) | ((m >> 1) & ~low);
  }
}

class Extender {
 public:
  Extender(int max_n, int worker, const std::function<void(const Poset&, int)>& visit)
      : max_n_(max_n), worker_(worker), visit_(visit) {}

  // Visits all proper descendants of `node` (node itself is not visited).
  void descend(Node& node, int stop_size, std::vector<Node>* seeds) {
    if (node.k >= max_n_) return;
    const int k = node.k;
    const int top = k - 1;

    // Join table of the parent, for pruning down-set candidates.
    std::array<std::uint64_t, kCap> up{};
    for (int y = 0; y < k; ++y) {
      for (std::uint64_t rest = node.down[y]; rest != 0; rest &= rest - 1) up[std::countr_zero(rest)] |= bit(y);
    }
    std::array<std::array<std::uint8_t, kCap>, kCap> join{};
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) join[x][y] = static_cast<std::uint8_t>(std::countr_zero(up[x] & up[y]));
    }

    canon_.refine_root(k, node.down.data());
    bool parent_rigid = true;
    {
      std::array<bool, kCap> seen{};
      for (int i = 0; i < k && parent_rigid; ++i) {
        const int c = canon_.root_colors()[i];
        if (seen[c]) parent_rigid = false;
        seen[c] = true;
      }
    }

    std::vector<Form> accepted;
    Node child;
    child.k = k + 1;
    // Down-sets D of L \ {top} that are join-closed below the top: exactly
    // the lower sets of a new coatom that keep the result a lattice.
    auto try_child = [&](std::uint64_t d) {
      const int c = top;  // new coatom index; the new top is k
      for (int i = 0; i < top; ++i) child.down[i] = node.down[i];
      child.down[c] = d | bit(c);
      child.down[k] = bit(k + 1) - 1;
      child.has_form = false;
      if (!accept(node, child, c)) return;
      if (!parent_rigid) {
        ensure_form(child);
        if (std::find(accepted.begin(), accepted.end(), child.form) != accepted.end()) return;
        accepted.push_back(child.form);
      }
      visit_(to_poset(child), worker_);
      if (seeds != nullptr && child.k == stop_size) {
        seeds->push_back(child);
      } else {
        Node next = child;
        descend(next, stop_size, seeds);
      }
    };

    // Decide elements 1..top-1 in index order; 0 is always in D.
    std::function<void(int, std::uint64_t, std::uint64_t)> choose = [&](int x, std::uint64_t d, std::uint64_t required) {
      if (x == top) {
        if ((required & ~d & ~bit(top)) != 0) return;
        try_child(d);
        return;
      }
      // Exclude x.
      if (!(required & bit(x))) choose(x + 1, d, required);
      // Include x when its strict down-set is already in D.
      if ((node.down[x] & ~bit(x) & ~d) == 0) {
        std::uint64_t req = required;
        for (std::uint64_t rest = d; rest != 0; rest &= rest - 1) req |= bit(join[x][std::countr_zero(rest)]);
        if ((req & ~(d | bit(x)) & (bit(x + 1) - 1)) == 0) choose(x + 1, d | bit(x), req);
      }
    };
    choose(1, bit(0), 0);
  }

 private:
  void ensure_form(Node& n) {
    if (n.has_form) return;
    canon_.canonize(n.k, n.down.data());
    std::copy(canon_.form(), canon_.form() + n.k, n.form.begin());
    std::fill(n.form.begin() + n.k, n.form.end(), 0);
    n.has_form = true;
  }

  // Whether the coatom c is the canonical one to delete from `child`: it
  // must lie in the least-coloured coatom cell, and deleting the
  // lowest-labelled coatom of that cell must give the parent back.
  bool accept(Node& parent, Node& child, int c) {
    const int n = child.k;
    const std::uint64_t coatoms = [&] {
      // Lower covers of the top.
      std::uint64_t strict = child.down[n - 1] & ~bit(n - 1);
      std::uint64_t below = 0;
      for (std::uint64_t rest = strict; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        below |= child.down[u] & ~bit(u);
      }
      return strict & ~below;
    }();
    canon_.refine_root(n, child.down.data());
    const std::uint8_t* color = canon_.root_colors();
    int best = 255;
    for (std::uint64_t rest = coatoms; rest != 0; rest &= rest - 1) best = std::min<int>(best, color[std::countr_zero(rest)]);
    if (color[c] != best) return false;
    std::uint64_t cell = 0;
    for (std::uint64_t rest = coatoms; rest != 0; rest &= rest - 1) {
      if (color[std::countr_zero(rest)] == best) cell |= bit(std::countr_zero(rest));
    }
    if (cell == bit(c)) return true;

    ensure_form(child);
    const std::uint8_t* label = canon_.labels();
    int star = -1;
    for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (star == -1 || label[x] < label[star]) star = x;
    }
    if (star == c) return true;
    Masks reduced{};
    delete_element(child.down, n, star, reduced);
    canon_.canonize(n - 1, reduced.data());
    Form reduced_form{};
    std::copy(canon_.form(), canon_.form() + n - 1, reduced_form.begin());
    ensure_form(parent);
    return reduced_form == parent.form;
  }

  int max_n_;
  int worker_;
  const std::function<void(const Poset&, int)>& visit_;
  detail::Canonizer canon_;
};

int checked_bound(int max_n, const EnumerationOptions& options) {
  const int bound = options.extended ? kExtendedMaxLatticeSize : kDefaultMaxLatticeSize;
  if (max_n > bound) {
    throw std::invalid_argument("lattice enumeration is limited to " + std::to_string(bound) +
                                " elements" + (options.extended ? "" : " without the extended option"));
  }
  return bound;
}

}  // namespace

void enumerate_lattices(int max_n, const std::function<void(const Poset&, int)>& visit,
                        const EnumerationOptions& options) {
  checked_bound(max_n, options);
  if (max_n < 1) return;
  Node one;
  one.k = 1;
  one.down[0] = 1;
  visit(to_poset(one), 0);
  if (max_n < 2) return;
  Node two;
  two.k = 2;
  two.down[0] = 1;
  two.down[1] = 3;
  visit(to_poset(two), 0);

  const int threads = std::max(1, options.threads);
  if (threads == 1 || max_n <= 8) {
    Extender(max_n, 0, visit).descend(two, 0, nullptr);
    return;
  }
  // Expand serially to a seed level, then share the subtrees.
  const int seed_size = std::min(max_n - 3, 9);
  std::vector<Node> seeds;
  Extender(max_n, 0, visit).descend(two, seed_size, &seeds);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      Extender ext(max_n, w, visit);
      for (std::size_t i = next++; i < seeds.size(); i = next++) ext.descend(seeds[i], 0, nullptr);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<Poset> enumerate_lattices(int n) {
  std::vector<Poset> out;
  EnumerationOptions options;
  options.extended = n > kDefaultMaxLatticeSize;
  enumerate_lattices(
      n, [&](const Poset& p, int) { if (p.size() == n) out.push_back(p); }, options);
  return out;
}

std::vector<CountsRow> table1(int max_n, const EnumerationOptions& options) {
  checked_bound(max_n, options);
  const int threads = std::max(1, options.threads);
  std::vector<std::vector<CountsRow>> per_worker(threads, std::vector<CountsRow>(std::max(max_n, 0) + 1));
  enumerate_lattices(
      max_n,
      [&](const Poset& p, int worker) {
        CountsRow& row = per_worker[worker][p.size()];
        ++row.l;
        int joins = 0, meets = 0;
        for (Element x = 0; x < p.size(); ++x) {
          joins += p.lower_covers(x).size() == 1;
          meets += p.upper_covers(x).size() == 1;
        }
        if (joins != meets) return;
        const Lattice l = make_lattice(p);
        if (!is_congruence_uniform(l)) return;
        ++row.c;
        if (mobius_bottom_top(l) != 0) ++row.s;
        if (is_clo_lattice(core_label_order(CoverLabeling(l)))) ++row.S;
      },
      options);
  std::vector<CountsRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    CountsRow total;
    total.n = n;
    for (const auto& w : per_worker) {
      total.l += w[n].l;
      total.c += w[n].c;
      total.s += w[n].s;
      total.S += w[n].S;
    }
    rows.push_back(total);
  }
  return rows;
}

CounterexampleScan smallest_counterexample_scan(int max_n) {
  CounterexampleScan scan;
  scan.max_n = max_n;
  scan.spherical.assign(std::max(max_n, 0) + 1, 0);
  scan.failures.assign(std::max(max_n, 0) + 1, 0);
  generate_cu(max_n, [&](const Lattice& l) {
    if (mobius_bottom_top(l) == 0) return;
    ++scan.spherical[l.size()];
    if (!is_clo_lattice(core_label_order(CoverLabeling(l)))) {
      ++scan.failures[l.size()];
      scan.failing_lattices.push_back(l);
    }
  });
  return scan;
}

}  // namespace culat
