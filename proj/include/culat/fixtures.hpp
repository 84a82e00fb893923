#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "culat/biclosed.hpp"
#include "culat/doubling.hpp"
#include "culat/io.hpp"

namespace culat {

enum class FixtureKind { kPoset, kScript, kClosure };

// A lattice, doubling script or closure table from the figure catalog.
struct Fixture {
  std::string name;       // e.g. "fig7a"
  std::string file_name;  // e.g. "fig7a.lat"
  FixtureKind kind;
  std::string_view text;  // file contents
  std::vector<std::string> highlighted;  // marked elements, by name
};

const std::vector<Fixture>& fixture_catalog();
// Throws std::out_of_range for unknown names.
const Fixture& fixture(std::string_view name);

NamedPoset fixture_poset(std::string_view name);
Lattice fixture_lattice(std::string_view name);
std::vector<Interval> fixture_script(std::string_view name);
ClosureOperator fixture_closure(std::string_view name);
ElementSet fixture_highlighted(std::string_view name);

struct FixtureCheck {
  std::string fixture;
  std::string property;
  bool passed;
  std::string detail;  // observed value on failure
};

// Checks every fixture against the verdicts recorded for its figure.
std::vector<FixtureCheck> verify_fixtures();

// Writes every fixture into `directory`; returns the paths written.
std::vector<std::string> export_fixtures(const std::string& directory);

}  // namespace culat
