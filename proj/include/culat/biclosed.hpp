#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "culat/lattice.hpp"

namespace culat {

inline constexpr int kMaxGroundSize = 6;

// Subsets of the ground set {0..m-1} as bit masks.
using GroundSet = std::uint8_t;
// A family of subsets as a bit mask indexed by subset (m <= 6).
using SetFamily = std::uint64_t;

// A map X -> cl(X) on all subsets of an m-element ground set, stored as a
// full table. Not necessarily a valid closure operator; see validate().
class ClosureOperator {
 public:
  // Throws std::invalid_argument unless table.size() == 2^m and m <= 6.
  ClosureOperator(int m, std::vector<GroundSet> table, std::vector<std::string> names = {});
  static ClosureOperator identity(int m);
  // cl(X) = intersection of the members of `family` containing X. The
  // family must contain the full ground set.
  static ClosureOperator from_closed_sets(int m, SetFamily family);

  int ground_size() const { return m_; }
  GroundSet full_set() const { return static_cast<GroundSet>((1U << m_) - 1); }
  GroundSet closure(GroundSet x) const { return table_[x]; }
  const std::vector<GroundSet>& table() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }

  // Sets X with cl(X) = X.
  SetFamily closed_family() const;
  std::string format_set(GroundSet x) const;

 private:
  int m_;
  std::vector<GroundSet> table_;
  std::vector<std::string> names_;
};

struct ClosureViolation {
  enum class Kind { kExtensive, kMonotone, kIdempotent };
  Kind kind;
  GroundSet x;
  GroundSet y;  // only for monotonicity: x ⊆ y but cl(x) ⊄ cl(y)

  std::string describe(const ClosureOperator& op) const;
};

std::optional<ClosureViolation> validate(const ClosureOperator& op);

// Sets of a family ordered by inclusion; `sets` is sorted by size, then by
// mask, so indices form a linear extension.
struct SetPoset {
  std::vector<GroundSet> sets;
  Poset poset;

  int index_of(GroundSet x) const;  // -1 if absent
};

SetPoset family_poset(SetFamily family, int m);
SetPoset closed_sets(const ClosureOperator& op);
// Throws NotALatticeError (cannot happen for a valid operator).
Lattice closed_sets_lattice(const ClosureOperator& op);

SetFamily biclosed_family(const ClosureOperator& op);
SetPoset biclosed_sets(const ClosureOperator& op);
std::variant<Lattice, NotALattice> biclosed_lattice(const ClosureOperator& op);

// A cover X ⋖ Y of biclosed sets with |Y \ X| > 1.
struct SingleStepViolation {
  GroundSet lower;
  GroundSet upper;
};

std::optional<SingleStepViolation> single_step_violation(const ClosureOperator& op);
bool is_single_step(const ClosureOperator& op);

// Calls `visit` on every intersection-closed family of subsets of [m]
// containing the full set. Returns the number visited. Throws
// std::invalid_argument for m > 6.
std::uint64_t for_each_moore_family(int m, const std::function<void(SetFamily)>& visit);

// Whether `family` is the smallest mask among its images under
// permutations of the ground set.
bool is_symmetry_minimal(SetFamily family, int m);

struct SearchFilters {
  bool require_lattice = true;
  bool require_congruence_uniform = true;
  bool require_spherical = true;
  bool require_single_step = true;
  bool require_non_lattice_clo = true;
  bool up_to_symmetry = true;
};

struct SearchCandidate {
  ClosureOperator op;
  std::optional<Lattice> biclosed;  // present whenever Bic is a lattice
};

struct SearchReport {
  int m = 0;
  std::uint64_t families = 0;  // all Moore families on [m]
  std::uint64_t examined = 0;  // families after symmetry reduction
  std::uint64_t candidates = 0;
};

// Streams operators passing all enabled filters to `emit`. With
// up_to_symmetry, one operator per relabeling class is examined. m = 6
// requires allow_m6.
SearchReport search_biclosed(int m, const SearchFilters& filters,
                             const std::function<void(const SearchCandidate&)>& emit, bool allow_m6 = false);

// Closure table file: optional `ground a,b,c` line, then `X -> Y` lines for
// non-identity assignments; `{}` is the empty set and `#` starts a comment.
// Unlisted sets map to themselves. Throws ParseError (see io.hpp).
ClosureOperator parse_closure(std::string_view text);
std::string format_closure(const ClosureOperator& op);

}  // namespace culat
