#include "culat/biclosed.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/io.hpp"

namespace culat {

namespace {

void check_ground_size(int m) {
  if (m < 0 || m > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be between 0 and " + std::to_string(kMaxGroundSize));
  }
}

std::vector<std::string> letter_names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

bool family_has(SetFamily f, GroundSet x) { return (f >> x) & 1U; }

}  // namespace

ClosureOperator::ClosureOperator(int m, std::vector<GroundSet> table, std::vector<std::string> names)
    : m_(m), table_(std::move(table)), names_(std::move(names)) {
  check_ground_size(m);
  if (table_.size() != (std::size_t{1} << m)) throw std::invalid_argument("closure table must have 2^m entries");
  for (GroundSet y : table_) {
    if ((y & ~full_set()) != 0) throw std::invalid_argument("closure table value outside the ground set");
  }
  if (names_.empty()) names_ = letter_names(m);
  if (static_cast<int>(names_.size()) != m) throw std::invalid_argument("need one name per ground element");
}

ClosureOperator ClosureOperator::identity(int m) {
  check_ground_size(m);
  std::vector<GroundSet> table(std::size_t{1} << m);
  std::iota(table.begin(), table.end(), GroundSet{0});
  return ClosureOperator(m, std::move(table));
}

ClosureOperator ClosureOperator::from_closed_sets(int m, SetFamily family) {
  check_ground_size(m);
  const unsigned full = (1U << m) - 1;
  if (!family_has(family, static_cast<GroundSet>(full))) throw std::invalid_argument("family must contain the ground set");
  std::vector<GroundSet> table(std::size_t{1} << m);
  for (unsigned x = 0; x <= full; ++x) {
    unsigned acc = full;
    for (SetFamily rest = family; rest != 0; rest &= rest - 1) {
      const unsigned f = static_cast<unsigned>(std::countr_zero(rest));
      if ((x & ~f) == 0) acc &= f;
    }
    table[x] = static_cast<GroundSet>(acc);
  }
  return ClosureOperator(m, std::move(table));
}

SetFamily ClosureOperator::closed_family() const {
  SetFamily out = 0;
  for (unsigned x = 0; x < table_.size(); ++x) {
    if (table_[x] == x) out |= SetFamily{1} << x;
  }
  return out;
}

std::string ClosureOperator::format_set(GroundSet x) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < m_; ++i) {
    if (!((x >> i) & 1U)) continue;
    if (!first) out += ',';
    out += names_[i];
    first = false;
  }
  return out + "}";
}

std::string ClosureViolation::describe(const ClosureOperator& op) const {
  switch (kind) {
    case Kind::kExtensive:
      return "not extensive: " + op.format_set(x) + " is not contained in its closure " + op.format_set(op.closure(x));
    case Kind::kMonotone:
      return "not monotone: " + op.format_set(x) + " is contained in " + op.format_set(y) + " but cl" +
             op.format_set(x) + " = " + op.format_set(op.closure(x)) + " is not contained in cl" + op.format_set(y) +
             " = " + op.format_set(op.closure(y));
    case Kind::kIdempotent:
      return "not idempotent at " + op.format_set(x);
  }
  return {};
}

std::optional<ClosureViolation> validate(const ClosureOperator& op) {
  const unsigned count = 1U << op.ground_size();
  for (unsigned x = 0; x < count; ++x) {
    if ((x & ~op.closure(x)) != 0) return ClosureViolation{ClosureViolation::Kind::kExtensive, GroundSet(x), 0};
  }
  for (unsigned x = 0; x < count; ++x) {
    for (unsigned y = 0; y < count; ++y) {
      if ((x & ~y) == 0 && (op.closure(x) & ~op.closure(y)) != 0) {
        return ClosureViolation{ClosureViolation::Kind::kMonotone, GroundSet(x), GroundSet(y)};
      }
    }
  }
  for (unsigned x = 0; x < count; ++x) {
    if (op.closure(op.closure(x)) != op.closure(x)) {
      return ClosureViolation{ClosureViolation::Kind::kIdempotent, GroundSet(x), 0};
    }
  }
  return std::nullopt;
}

int SetPoset::index_of(GroundSet x) const {
  const auto it = std::find(sets.begin(), sets.end(), x);
  return it == sets.end() ? -1 : static_cast<int>(it - sets.begin());
}

SetPoset family_poset(SetFamily family, int m) {
  check_ground_size(m);
  SetPoset out;
  for (SetFamily rest = family; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    if (x >= (1 << m)) throw std::invalid_argument("family contains sets outside the ground set");
    out.sets.push_back(static_cast<GroundSet>(x));
  }
  std::sort(out.sets.begin(), out.sets.end(), [](GroundSet a, GroundSet b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<BitSet> down(out.sets.size());
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if ((out.sets[k] & ~out.sets[i]) == 0) down[i].insert(static_cast<Element>(k));
    }
  }
  out.poset = Poset::from_down_sets(std::move(down));
  return out;
}

SetPoset closed_sets(const ClosureOperator& op) { return family_poset(op.closed_family(), op.ground_size()); }

Lattice closed_sets_lattice(const ClosureOperator& op) { return make_lattice(closed_sets(op).poset); }

SetFamily biclosed_family(const ClosureOperator& op) {
  const SetFamily closed = op.closed_family();
  SetFamily out = 0;
  for (SetFamily rest = closed; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    if (family_has(closed, static_cast<GroundSet>(op.full_set() & ~x))) out |= SetFamily{1} << x;
  }
  return out;
}

SetPoset biclosed_sets(const ClosureOperator& op) { return family_poset(biclosed_family(op), op.ground_size()); }

std::variant<Lattice, NotALattice> biclosed_lattice(const ClosureOperator& op) {
  return as_lattice(biclosed_sets(op).poset);
}

namespace {

// A cover of a set poset that adds more than one element. Every strict
// inclusion X ⊊ Y climbs through covers, so single-step inclusion holds
// exactly when each cover adds one element.
std::optional<SingleStepViolation> multi_element_cover(const SetPoset& bic) {
  for (auto [u, v] : bic.poset.cover_relations()) {
    if (std::popcount(static_cast<unsigned>(bic.sets[v] & ~bic.sets[u])) > 1) {
      return SingleStepViolation{bic.sets[u], bic.sets[v]};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SingleStepViolation> single_step_violation(const ClosureOperator& op) {
  return multi_element_cover(biclosed_sets(op));
}

bool is_single_step(const ClosureOperator& op) { return !single_step_violation(op); }

std::uint64_t for_each_moore_family(int m, const std::function<void(SetFamily)>& visit) {
  check_ground_size(m);
  const unsigned full = (1U << m) - 1;
  // Decide subsets from largest to smallest; a set is forced into the family
  // when it is the intersection of the members above it.
  std::vector<unsigned> order;
  for (unsigned x = 0; x < full; ++x) order.push_back(x);
  std::stable_sort(order.begin(), order.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) > std::popcount(b); });
  std::uint64_t count = 0;
  std::function<void(std::size_t, SetFamily)> step = [&](std::size_t i, SetFamily family) {
    if (i == order.size()) {
      ++count;
      visit(family);
      return;
    }
    const unsigned z = order[i];
    unsigned meet = full;
    for (SetFamily rest = family; rest != 0; rest &= rest - 1) {
      const unsigned f = static_cast<unsigned>(std::countr_zero(rest));
      if ((z & ~f) == 0) meet &= f;
    }
    const SetFamily with = family | (SetFamily{1} << z);
    if (meet == z) {
      step(i + 1, with);
    } else {
      step(i + 1, family);
      step(i + 1, with);
    }
  };
  step(0, SetFamily{1} << full);
  return count;
}

namespace {

// For each permutation of [m] (m <= 6), the induced map on subsets.
const std::vector<std::array<GroundSet, 64>>& subset_permutations(int m) {
  static std::array<std::vector<std::array<GroundSet, 64>>, kMaxGroundSize + 1> cache;
  static std::array<std::once_flag, kMaxGroundSize + 1> once;
  std::call_once(once[m], [m] {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::array<GroundSet, 64> image{};
      for (unsigned x = 0; x < (1U << m); ++x) {
        unsigned y = 0;
        for (int i = 0; i < m; ++i) {
          if ((x >> i) & 1U) y |= 1U << perm[i];
        }
        image[x] = static_cast<GroundSet>(y);
      }
      cache[m].push_back(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return cache[m];
}

}  // namespace

bool is_symmetry_minimal(SetFamily family, int m) {
  check_ground_size(m);
  for (const auto& image : subset_permutations(m)) {
    SetFamily mapped = 0;
    for (SetFamily rest = family; rest != 0; rest &= rest - 1) mapped |= SetFamily{1} << image[std::countr_zero(rest)];
    if (mapped < family) return false;
  }
  return true;
}

SearchReport search_biclosed(int m, const SearchFilters& filters,
                             const std::function<void(const SearchCandidate&)>& emit, bool allow_m6) {
  check_ground_size(m);
  if (m == 6 && !allow_m6) throw std::invalid_argument("m = 6 needs an explicit opt-in; the search space is enormous");
  SearchReport report;
  report.m = m;
  report.families = for_each_moore_family(m, [&](SetFamily family) {
    if (filters.up_to_symmetry && !is_symmetry_minimal(family, m)) return;
    ++report.examined;
    ClosureOperator op = ClosureOperator::from_closed_sets(m, family);
    const SetPoset bic = family_poset(biclosed_family(op), m);
    auto as_lat = as_lattice(bic.poset);
    Lattice* lat = std::get_if<Lattice>(&as_lat);
    const bool needs_lattice = filters.require_lattice || filters.require_congruence_uniform ||
                               filters.require_spherical || filters.require_non_lattice_clo;
    if (needs_lattice && lat == nullptr) return;
    if (filters.require_single_step && multi_element_cover(bic)) return;
    if ((filters.require_congruence_uniform || filters.require_spherical || filters.require_non_lattice_clo) &&
        !is_congruence_uniform(*lat)) {
      return;
    }
    if (filters.require_spherical && mobius_bottom_top(*lat) == 0) return;
    if (filters.require_non_lattice_clo && is_clo_lattice(core_label_order(CoverLabeling(*lat)))) return;
    ++report.candidates;
    SearchCandidate candidate{std::move(op), std::nullopt};
    if (lat != nullptr) candidate.biclosed = std::move(*lat);
    emit(candidate);
  });
  return report;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

ClosureOperator parse_closure(std::string_view text) {
  struct Rule {
    int line;
    std::vector<std::string> from;
    std::vector<std::string> to;
  };
  std::vector<std::string> ground;
  bool explicit_ground = false;
  std::vector<Rule> rules;

  auto parse_set = [](std::string_view s, int line) {
    s = strip(s);
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = strip(s.substr(1, s.size() - 2));
    std::vector<std::string> out;
    if (s.empty()) return out;
    for (std::string_view part : split(s, ',')) {
      part = strip(part);
      if (part.empty()) throw ParseError(line, "empty element name in set");
      out.emplace_back(part);
    }
    return out;
  };

  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.starts_with("ground")) {
      if (explicit_ground || !rules.empty()) throw ParseError(number, "`ground` must come first and only once");
      ground = parse_set(line.substr(6), number);
      explicit_ground = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(number, "expected `X -> Y`");
    rules.push_back({number, parse_set(line.substr(0, arrow), number), parse_set(line.substr(arrow + 2), number)});
  }

  auto index_of = [&](const std::string& name, int line) -> int {
    const auto it = std::find(ground.begin(), ground.end(), name);
    if (it != ground.end()) return static_cast<int>(it - ground.begin());
    if (explicit_ground) throw ParseError(line, "element '" + name + "' is not in the ground set");
    ground.push_back(name);
    return static_cast<int>(ground.size()) - 1;
  };
  std::vector<std::pair<int, std::pair<unsigned, unsigned>>> assignments;
  for (const Rule& r : rules) {
    unsigned from = 0, to = 0;
    for (const auto& name : r.from) from |= 1U << std::min(index_of(name, r.line), 31);
    for (const auto& name : r.to) to |= 1U << std::min(index_of(name, r.line), 31);
    if (static_cast<int>(ground.size()) > kMaxGroundSize) {
      throw ParseError(r.line, "ground set larger than " + std::to_string(kMaxGroundSize));
    }
    assignments.push_back({r.line, {from, to}});
  }
  if (!explicit_ground) {
    // Implicit ground sets are listed alphabetically; remap the masks.
    std::vector<std::string> sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> new_index(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) {
      new_index[i] = static_cast<int>(std::find(sorted.begin(), sorted.end(), ground[i]) - sorted.begin());
    }
    auto remap = [&](unsigned mask) {
      unsigned out = 0;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        if ((mask >> i) & 1U) out |= 1U << new_index[i];
      }
      return out;
    };
    for (auto& a : assignments) a.second = {remap(a.second.first), remap(a.second.second)};
    ground = std::move(sorted);
  }
  const int m = static_cast<int>(ground.size());
  std::vector<GroundSet> table(std::size_t{1} << m);
  std::iota(table.begin(), table.end(), GroundSet{0});
  std::vector<int> assigned_on(table.size(), 0);
  for (const auto& [line, ft] : assignments) {
    if (assigned_on[ft.first] != 0 && table[ft.first] != ft.second) {
      throw ParseError(line, "conflicting closure for a set already assigned on line " +
                                 std::to_string(assigned_on[ft.first]));
    }
    assigned_on[ft.first] = line;
    table[ft.first] = static_cast<GroundSet>(ft.second);
  }
  return ClosureOperator(m, std::move(table), ground);
}

std::string format_closure(const ClosureOperator& op) {
  std::string out = "ground ";
  for (int i = 0; i < op.ground_size(); ++i) out += (i ? "," : "") + op.names()[i];
  out += '\n';
  for (unsigned x = 0; x < op.table().size(); ++x) {
    if (op.closure(static_cast<GroundSet>(x)) != x) {
      out += op.format_set(static_cast<GroundSet>(x)) + " -> " + op.format_set(op.closure(static_cast<GroundSet>(x))) + '\n';
    }
  }
  return out;
}

}  // namespace culat
