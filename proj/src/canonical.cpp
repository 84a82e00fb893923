#include "culat/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace culat {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 48;

constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Dense ranks of keys[0..n); returns the number of distinct keys.
int rank_keys(int n, const std::uint64_t* keys, std::uint8_t* out) {
  std::array<std::uint8_t, kMaxElements> idx;
  std::iota(idx.begin(), idx.begin() + n, std::uint8_t{0});
  std::sort(idx.begin(), idx.begin() + n, [&](std::uint8_t a, std::uint8_t b) { return keys[a] < keys[b]; });
  int rank = -1;
  std::uint64_t prev = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keys[idx[i]] != prev) {
      ++rank;
      prev = keys[idx[i]];
    }
    out[idx[i]] = static_cast<std::uint8_t>(rank);
  }
  return rank + 1;
}

}  // namespace

namespace detail {

void Canonizer::prepare(int n, const std::uint64_t* down) {
  n_ = n;
  for (int v = 0; v < n; ++v) {
    down_[v] = down[v];
    up_[v] = 0;
  }
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t rest = down[v]; rest != 0; rest &= rest - 1) up_[std::countr_zero(rest)] |= std::uint64_t{1} << v;
  }
  for (int v = 0; v < n; ++v) {
    const std::uint64_t self = std::uint64_t{1} << v;
    const std::uint64_t strict = down_[v] & ~self;
    std::uint64_t below = 0;
    for (std::uint64_t rest = strict; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      below |= down_[u] & ~(std::uint64_t{1} << u);
    }
    lower_[v] = strict & ~below;
    upper_[v] = 0;
  }
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t rest = lower_[v]; rest != 0; rest &= rest - 1) upper_[std::countr_zero(rest)] |= std::uint64_t{1} << v;
  }
  // Twins share strict down- and up-sets; swapping two twins is an automorphism.
  for (int v = 0; v < n; ++v) {
    twin_[v] = static_cast<std::uint8_t>(v);
    const std::uint64_t sv = std::uint64_t{1} << v;
    for (int u = 0; u < v; ++u) {
      const std::uint64_t su = std::uint64_t{1} << u;
      if ((down_[u] & ~su) == (down_[v] & ~sv) && (up_[u] & ~su) == (up_[v] & ~sv)) {
        twin_[v] = twin_[u];
        break;
      }
    }
  }
}

int Canonizer::initial_colors(Colors& c) const {
  std::array<std::uint64_t, kMaxElements> keys;
  for (int v = 0; v < n_; ++v) {
    keys[v] = (static_cast<std::uint64_t>(std::popcount(down_[v])) << 24) |
              (static_cast<std::uint64_t>(std::popcount(up_[v])) << 16) |
              (static_cast<std::uint64_t>(std::popcount(lower_[v])) << 8) |
              static_cast<std::uint64_t>(std::popcount(upper_[v]));
  }
  return rank_keys(n_, keys.data(), c.data());
}

int Canonizer::refine(Colors& c, int k) const {
  std::array<std::uint64_t, kMaxElements> keys;
  while (k < n_) {
    for (int v = 0; v < n_; ++v) {
      std::uint64_t h = 0;
      for (std::uint64_t rest = lower_[v]; rest != 0; rest &= rest - 1) h += mix(c[std::countr_zero(rest)] + 1);
      for (std::uint64_t rest = upper_[v]; rest != 0; rest &= rest - 1) h += mix((c[std::countr_zero(rest)] + 1) << 8);
      keys[v] = (static_cast<std::uint64_t>(c[v]) << 56) | (mix(h) >> 8);
    }
    const int refined = rank_keys(n_, keys.data(), c.data());
    if (refined == k) break;
    k = refined;
  }
  return k;
}

int Canonizer::individualize(Colors& c, int k, int v) const {
  std::array<std::uint64_t, kMaxElements> keys;
  const std::uint8_t cell = c[v];
  for (int w = 0; w < n_; ++w) keys[w] = 2 * static_cast<std::uint64_t>(c[w]) + (c[w] == cell && w != v ? 1 : 0);
  (void)k;
  return rank_keys(n_, keys.data(), c.data());
}

void Canonizer::leaf(const Colors& c) {
  std::array<std::uint64_t, kMaxElements> rows{};
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = 0;
    for (std::uint64_t rest = down_[v]; rest != 0; rest &= rest - 1) row |= std::uint64_t{1} << c[std::countr_zero(rest)];
    rows[c[v]] = row;
  }
  int cmp = 0;
  if (have_best_) {
    for (int i = 0; i < n_ && cmp == 0; ++i) {
      if (rows[i] != best_rows_[i]) cmp = rows[i] < best_rows_[i] ? -1 : 1;
    }
  }
  if (!have_best_ || cmp < 0) {
    have_best_ = true;
    best_rows_ = rows;
    for (int v = 0; v < n_; ++v) {
      best_labels_[v] = c[v];
      best_inverse_[c[v]] = static_cast<std::uint8_t>(v);
    }
  } else if (cmp == 0 && automorphisms_.size() < kMaxStoredAutomorphisms) {
    std::array<std::uint8_t, kMaxElements> gamma{};
    for (int v = 0; v < n_; ++v) gamma[v] = best_inverse_[c[v]];
    automorphisms_.push_back(gamma);
  }
}

bool Canonizer::orbit_pruned(int depth, int v, std::uint64_t tried) const {
  if (automorphisms_.empty() || tried == 0) return false;
  std::array<std::uint8_t, kMaxElements> parent;
  std::iota(parent.begin(), parent.begin() + n_, std::uint8_t{0});
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool any = false;
  for (const auto& gamma : automorphisms_) {
    bool fixes_prefix = true;
    for (int d = 0; d < depth && fixes_prefix; ++d) fixes_prefix = gamma[prefix_[d]] == prefix_[d];
    if (!fixes_prefix) continue;
    any = true;
    for (int x = 0; x < n_; ++x) {
      const int a = find(x);
      const int b = find(gamma[x]);
      if (a != b) parent[a] = static_cast<std::uint8_t>(b);
    }
  }
  if (!any) return false;
  const int root = find(v);
  for (std::uint64_t rest = tried; rest != 0; rest &= rest - 1) {
    if (find(std::countr_zero(rest)) == root) return true;
  }
  return false;
}

void Canonizer::search(Colors c, int k, int depth) {
  k = refine(c, k);
  if (k == n_) {
    leaf(c);
    return;
  }
  // Target: the lowest-coloured non-singleton cell.
  std::array<int, kMaxElements> cell_size{};
  for (int v = 0; v < n_; ++v) ++cell_size[c[v]];
  int target = 0;
  while (cell_size[target] < 2) ++target;

  std::uint64_t tried = 0;
  std::uint64_t tried_twins = 0;
  for (int v = 0; v < n_; ++v) {
    if (c[v] != target) continue;
    if ((tried_twins >> twin_[v]) & 1U) continue;
    if (orbit_pruned(depth, v, tried)) continue;
    tried |= std::uint64_t{1} << v;
    tried_twins |= std::uint64_t{1} << twin_[v];
    Colors next = c;
    const int k2 = individualize(next, k, v);
    prefix_[depth] = static_cast<std::uint8_t>(v);
    search(next, k2, depth + 1);
  }
}

void Canonizer::canonize(int n, const std::uint64_t* down) {
  prepare(n, down);
  have_best_ = false;
  automorphisms_.clear();
  if (n == 0) return;
  Colors c{};
  int k = initial_colors(c);
  k = refine(c, k);
  root_ = c;
  search(c, k, 0);
}

void Canonizer::refine_root(int n, const std::uint64_t* down) {
  prepare(n, down);
  if (n == 0) return;
  Colors c{};
  int k = initial_colors(c);
  refine(c, k);
  root_ = c;
}

}  // namespace detail

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = mix(static_cast<std::uint64_t>(f.n));
  for (std::uint64_t r : f.rows) h = mix(h ^ r);
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> down(n);
  for (int v = 0; v < n; ++v) down[v] = p.down(v).bits();
  detail::Canonizer canon;
  canon.canonize(n, down.data());
  CanonicalLabeling out;
  out.form.n = n;
  out.form.rows.assign(canon.form(), canon.form() + n);
  out.label.assign(canon.labels(), canon.labels() + n);
  return out;
}

CanonicalForm canonical_form(const Poset& p) { return canonical_labeling(p).form; }

bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && a.cover_count() == b.cover_count() && canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalLabeling la = canonical_labeling(a);
  const CanonicalLabeling lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<Element> b_of_label(b.size());
  for (Element x = 0; x < b.size(); ++x) b_of_label[lb.label[x]] = x;
  std::vector<Element> map(a.size());
  for (Element x = 0; x < a.size(); ++x) map[x] = b_of_label[la.label[x]];
  return map;
}

}  // namespace culat
