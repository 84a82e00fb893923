// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "culat/biclosed.hpp"
#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/doubling.hpp"
#include "culat/enumeration.hpp"
#include "culat/fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace culat;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

Outcome lattice_counts() {
  Outcome out;
  const std::vector<std::uint64_t> l{1, 1, 1, 2, 5, 15, 53, 222, 1078, 5994, 37622};
  const std::vector<std::uint64_t> c{1, 1, 1, 2, 4, 9, 22, 60, 174, 534, 1720};
  const std::vector<std::uint64_t> s{1, 1, 0, 1, 1, 2, 3, 8, 17, 45, 123};
  const std::vector<std::uint64_t> S{1, 1, 0, 1, 1, 2, 3, 8, 16, 41, 107};
  auto start = std::chrono::steady_clock::now();
  auto rows = table1(11);
  double t = seconds_since(start);
  out.require(rows.size() == 11, "eleven rows");
  for (std::size_t i = 0; i < rows.size() && i < 11; ++i) {
    const auto& r = rows[i];
    bool ok = r.n == static_cast<int>(i + 1) && r.l == l[i] && r.c == c[i] && r.s == s[i] && r.S == S[i];
    out.require(ok, "row n=" + std::to_string(i + 1) + " got " + std::to_string(r.l) + "/" + std::to_string(r.c) +
                        "/" + std::to_string(r.s) + "/" + std::to_string(r.S));
  }
  out.require(t < 300, "runtime under 5 minutes");
  out.note("n=11: 37622/1720/123/107 in " + fmt_seconds(t));
  return out;
}

Outcome twelve_element_core_labels() {
  Outcome out;
  NamedPoset named = fixture_poset("fig7a");
  Lattice l = make_lattice(named.poset);
  out.require(is_congruence_uniform(l), "congruence-uniform");
  CoverLabeling cl(l);
  auto clo = core_label_order(cl);
  const std::map<std::string, std::string> expected{
      {"bot", "{}"},   {"a1", "{1}"}, {"a2", "{2}"}, {"b1", "{3}"},          {"b2", "{1,2}"},        {"b3", "{4}"},
      {"c1", "{5}"},   {"c2", "{6}"}, {"c3", "{7}"}, {"d1", "{2,3,5,6}"}, {"d2", "{1,4,6,7}"}, {"top", "{3,4}"}};
  int matched = 0;
  for (const auto& [name, psi] : expected) {
    std::string got = clo.psi[named.resolve(name)].to_string(1);
    if (got == psi) ++matched;
    else out.require(false, "core labels of " + name + " = " + got);
  }
  out.require(is_clo_meet_semilattice(clo), "meet-semilattice");
  ElementSet maximal = clo.order.maximal_elements();
  out.require(maximal.size() > 1, "no greatest element");
  ElementSet expected_max;
  for (const char* n : {"b2", "d1", "d2", "top"}) expected_max.insert(named.resolve(n));
  out.require(maximal == expected_max, "maximal elements are b2, d1, d2, top (as forced by the listed core label sets)");
  out.require(mobius_bottom_top(l) == 0, "mobius 0");
  NamedPoset fig = fixture_poset("fig7b");
  bool same = true;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      same = same && clo.order.leq(x, y) == fig.poset.leq(fig.resolve(named.names[x]), fig.resolve(named.names[y]));
  out.require(same, "core label order equals the printed order element by element");
  out.note(std::to_string(matched) + "/12 core label sets match; maximal elements b2 d1 d2 top; mu 0");
  return out;
}

Outcome doubled_boolean() {
  Outcome out;
  NamedPoset named = fixture_poset("fig8a");
  Lattice fixture = make_lattice(named.poset);
  Lattice l = double_interval(boolean_lattice(3), 1, 1);
  out.require(l.size() == 9, "9 elements");
  out.require(isomorphic(l.poset(), fixture.poset()), "isomorphic to the fixture");
  out.require(is_congruence_uniform(l), "congruence-uniform");
  out.require(is_spherical(l), "spherical");
  CoverLabeling cl(l);
  out.require(boolean_defect(cl) == 3, "Boolean defect 3");
  out.require(!is_clo_lattice(core_label_order(cl)), "core label order not a lattice");
  auto scan = smallest_counterexample_scan(9);
  int below = 0;
  for (int n = 0; n <= 8; ++n) below += scan.failures[n];
  out.require(below == 0, "no failures up to 8 elements");
  out.require(scan.failures[9] == 1, "exactly one failure at 9 elements");
  out.require(scan.failing_lattices.size() == 1 && isomorphic(scan.failing_lattices[0].poset(), fixture.poset()),
              "the failure is the fixture");
  out.note("bdef 3; scan failures n<=8: " + std::to_string(below) + ", n=9: " + std::to_string(scan.failures[9]));
  return out;
}

Outcome four_point_closure() {
  Outcome out;
  ClosureOperator op = fixture_closure("example61");
  out.require(!validate(op).has_value(), "valid closure operator");
  SetPoset closed = closed_sets(op);
  out.require(closed.sets.size() == 13, "13 closed sets");
  out.require(isomorphic(closed.poset, fixture_poset("fig9").poset), "closed sets match the fixture");
  SetPoset bic = biclosed_sets(op);
  out.require(bic.sets.size() == 10, "10 biclosed sets");
  out.require(isomorphic(bic.poset, fixture_poset("fig10a").poset), "biclosed sets match the fixture");
  auto lat = biclosed_lattice(op);
  out.require(std::holds_alternative<Lattice>(lat), "biclosed sets form a lattice");
  if (!out.passed) return out;
  const Lattice& l = std::get<Lattice>(lat);
  out.require(is_congruence_uniform(l), "congruence-uniform");
  out.require(is_spherical(l), "spherical");
  NamedPoset fig8 = fixture_poset("fig8a");
  Element c2 = fig8.resolve("c2");
  out.require(isomorphic(l.poset(), double_interval(make_lattice(fig8.poset), c2, c2).poset()),
              "isomorphic to the nine-element fixture doubled by c2");
  auto step = single_step_violation(op);
  out.require(step && op.format_set(step->lower) == "{c}" && op.format_set(step->upper) == "{a,b,c}",
              "single-step inclusion fails at {c} < {a,b,c}");
  out.require(!is_clo_lattice(core_label_order(CoverLabeling(l))), "core label order not a lattice");
  out.note("13 closed, 10 biclosed, cover {c}<{a,b,c}");
  return out;
}

Outcome property_suites() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  props::Report cu = props::run_congruence_uniform_suite(11);
  props::Report all = props::run_lattice_suite(10);
  double t = seconds_since(start);
  out.require(cu.violations() == 0, "congruence-uniform suite:\n" + cu.failures());
  out.require(all.violations() == 0, "lattice suite:\n" + all.failures());
  for (const auto* r : {&cu, &all})
    for (const auto& tally : r->tallies()) out.require(tally.checked > 0, tally.name + " never exercised");
  out.require(t < 120, "runtime under 2 minutes");
  out.note(std::to_string(cu.tallies().size() + all.tallies().size()) + " properties, " +
           std::to_string(cu.checks() + all.checks()) + " checks, 0 violations in " + fmt_seconds(t));
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  // (a) canonical joinands from cover labels vs exhaustive search.
  std::uint64_t elements = 0, gamma_mismatch = 0;
  std::vector<Lattice> corpus = generate_cu(9);
  for (const Lattice& l : corpus) {
    CoverLabeling cl(l);
    for (Element x = 0; x < l.size(); ++x) {
      ++elements;
      ElementSet from_labels;
      for (int i : gamma(cl, x)) from_labels.insert(l.join_irreducibles()[i].j);
      auto searched = canonical_join_representation(l, x);
      if (!searched || *searched != from_labels) ++gamma_mismatch;
    }
  }
  out.require(gamma_mismatch == 0, std::to_string(gamma_mismatch) + " canonical join mismatches");

  // (b) crosscut sums vs the recursive Möbius function.
  std::uint64_t crosscuts = 0, mobius_mismatch = 0;
  for (int n = 3; n <= 8; ++n)
    for (const Poset& p : enumerate_lattices(n)) {
      Lattice l = make_lattice(p);
      int mu = oracle::mobius(oracle::order_matrix(p), 0, n - 1);
      std::uint64_t middle = ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1} & ~(std::uint64_t{1} << (n - 1));
      for (std::uint64_t c = middle; c; c = (c - 1) & middle) {
        if (!is_crosscut(l, ElementSet(c))) continue;
        ++crosscuts;
        if (crosscut_mobius(l, ElementSet(c)) != mu) ++mobius_mismatch;
      }
    }
  out.require(mobius_mismatch == 0, std::to_string(mobius_mismatch) + " crosscut mismatches");

  // (c) doubling generator vs enumeration filtered by congruence uniformity.
  std::set<CanonicalForm> generated, filtered;
  for (const Lattice& l : corpus) generated.insert(canonical_form(l.poset()));
  for (int n = 1; n <= 9; ++n)
    for (const Poset& p : enumerate_lattices(n))
      if (is_congruence_uniform(make_lattice(p))) filtered.insert(canonical_form(p));
  std::size_t only_generated = 0, only_filtered = 0;
  for (const auto& f : generated) only_generated += filtered.count(f) ? 0 : 1;
  for (const auto& f : filtered) only_filtered += generated.count(f) ? 0 : 1;
  out.require(generated.size() == corpus.size(), "generator produced duplicates");
  out.require(only_generated == 0 && only_filtered == 0, "generator and filtered enumeration differ");
  out.note(std::to_string(elements) + " elements, " + std::to_string(crosscuts) + " crosscuts, " +
           std::to_string(generated.size()) + " lattices agree");
  return out;
}

Outcome biclosed_search() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  std::uint64_t emitted = 0;
  SearchReport full = search_biclosed(4, SearchFilters{}, [&](const SearchCandidate&) { ++emitted; });
  double t = seconds_since(start);
  out.require(full.families == 2480, "2480 Moore families on four points");
  out.require(emitted == full.candidates, "candidate count matches the stream");
  out.require(t < 60, "runtime under 1 minute");
  out.note(full.candidates == 0 ? "m=4: verified empty (" + std::to_string(full.examined) + " operators up to relabeling)"
                                : "m=4: " + std::to_string(full.candidates) + " candidates");

  SearchFilters relaxed;
  relaxed.require_single_step = false;
  Lattice target = make_lattice(fixture_poset("fig10a").poset);
  std::uint64_t found = 0, relaxed_total = 0;
  search_biclosed(4, relaxed, [&](const SearchCandidate& c) {
    ++relaxed_total;
    if (c.biclosed && isomorphic(c.biclosed->poset(), target.poset())) ++found;
  });
  out.require(found > 0, "without the single-step filter the four-point example is rediscovered");
  out.note("without single-step: " + std::to_string(relaxed_total) + " candidate(s), " + std::to_string(found) +
           " isomorphic to the four-point example; " + fmt_seconds(t));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lattice and congruence-uniform counts up to 11 elements", lattice_counts},
      {"core label sets and order of the twelve-element lattice", twelve_element_core_labels},
      {"B(3) doubled by an atom and the smallest counterexample scan", doubled_boolean},
      {"biclosed sets of the four-point closure operator", four_point_closure},
      {"property suites over the congruence-uniform corpus", property_suites},
      {"independent oracle agreement", oracle_equivalence},
      {"closure-operator search on four points", biclosed_search},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failed;
    std::printf("criterion %zu: %s  %s [%s] (%s)\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), fmt_seconds(seconds_since(start)).c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
