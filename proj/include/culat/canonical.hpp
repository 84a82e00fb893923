#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "culat/poset.hpp"

namespace culat {

// Isomorphism-invariant encoding of a poset: row i is the down-set of the
// element with canonical label i, written in canonical labels.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Element> label;  // label[x] = canonical position of x
};

CanonicalLabeling canonical_labeling(const Poset& p);
CanonicalForm canonical_form(const Poset& p);
bool isomorphic(const Poset& a, const Poset& b);
// Bijection a -> b preserving the order, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);

namespace detail {

// Reusable canonical labeling engine over raw reflexive down-set masks
// (indices must be a linear extension, n <= 64).
class Canonizer {
 public:
  using Colors = std::array<std::uint8_t, kMaxElements>;

  void canonize(int n, const std::uint64_t* down);
  // Only the equitable colouring at the root of the search.
  void refine_root(int n, const std::uint64_t* down);

  int size() const { return n_; }
  const std::uint64_t* form() const { return best_rows_.data(); }
  const std::uint8_t* labels() const { return best_labels_.data(); }
  const std::uint8_t* root_colors() const { return root_.data(); }

 private:
  void prepare(int n, const std::uint64_t* down);
  int initial_colors(Colors& c) const;
  int refine(Colors& c, int k) const;
  int individualize(Colors& c, int k, int v) const;
  void search(Colors c, int k, int depth);
  void leaf(const Colors& c);
  bool orbit_pruned(int depth, int v, std::uint64_t tried) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxElements> down_{};
  std::array<std::uint64_t, kMaxElements> up_{};
  std::array<std::uint64_t, kMaxElements> lower_{};
  std::array<std::uint64_t, kMaxElements> upper_{};
  std::array<std::uint8_t, kMaxElements> twin_{};
  std::array<std::uint8_t, kMaxElements> prefix_{};
  Colors root_{};

  bool have_best_ = false;
  std::array<std::uint64_t, kMaxElements> best_rows_{};
  std::array<std::uint8_t, kMaxElements> best_labels_{};
  std::array<std::uint8_t, kMaxElements> best_inverse_{};
  std::vector<std::array<std::uint8_t, kMaxElements>> automorphisms_;
};

}  // namespace detail
}  // namespace culat
