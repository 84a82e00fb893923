#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "culat/lattice.hpp"

namespace culat {

inline constexpr int kDefaultMaxLatticeSize = 12;
inline constexpr int kExtendedMaxLatticeSize = 14;

struct EnumerationOptions {
  int threads = 1;
  bool extended = false;  // allow sizes up to kExtendedMaxLatticeSize
};

// Visits every lattice with at most max_n elements once per isomorphism
// class. Lattices are built by adding a coatom to a smaller lattice and
// keeping only canonical extensions, so nothing is stored. With several
// threads `visit` runs concurrently; `worker` is in [0, threads).
// Throws std::invalid_argument if max_n exceeds the allowed bound.
void enumerate_lattices(int max_n, const std::function<void(const Poset& lattice, int worker)>& visit,
                        const EnumerationOptions& options = {});

// All lattices with exactly n elements, up to isomorphism.
std::vector<Poset> enumerate_lattices(int n);

struct CountsRow {
  int n = 0;
  std::uint64_t l = 0;  // lattices
  std::uint64_t c = 0;  // congruence-uniform
  std::uint64_t s = 0;  // congruence-uniform and spherical
  std::uint64_t S = 0;  // congruence-uniform with a lattice core label order

  bool operator==(const CountsRow&) const = default;
};

// Rows for n = 1..max_n.
std::vector<CountsRow> table1(int max_n, const EnumerationOptions& options = {});

struct CounterexampleScan {
  int max_n = 0;
  // Indexed by size: spherical congruence-uniform lattices, and those among
  // them whose core label order is not a lattice.
  std::vector<int> spherical;
  std::vector<int> failures;
  std::vector<Lattice> failing_lattices;
};

// Spherical congruence-uniform lattices with at most max_n elements whose
// core label order is not a lattice (via the doubling generator).
CounterexampleScan smallest_counterexample_scan(int max_n);

}  // namespace culat
