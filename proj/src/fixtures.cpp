#include "culat/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"

namespace culat {

namespace {

constexpr std::string_view kFig1a = R"(# M3: a lattice that is not congruence-uniform
5
names bot a1 a2 a3 top
bot a1
bot a2
bot a3
a1 top
a2 top
a3 top
)";

constexpr std::string_view kFig2a = R"(# N5: a congruence-uniform lattice
5
names bot a1 a2 b1 top
bot a1
bot a2
a1 b1
a2 top
b1 top
)";

constexpr std::string_view kFig3Left = R"(# Doubling by the marked (non-convex) set a2,a3,a5,a6 gives a non-lattice
7
names a1 a2 a3 a4 a5 a6 a7
a1 a2
a1 a3
a2 a4
a3 a4
a4 a5
a4 a6
a5 a7
a6 a7
)";

constexpr std::string_view kFig3Right = R"(# The doubled poset: not a lattice
11
names b1 b2 b3 b4 b5 b6 b7 b8 b9 b10 b11
b1 b2
b1 b3
b2 b4
b2 b5
b3 b4
b3 b6
b4 b7
b4 b8
b5 b9
b5 b10
b6 b9
b6 b10
b7 b9
b8 b10
b9 b11
b10 b11
)";

constexpr std::string_view kFig4 = R"(# N5 from the singleton lattice by three interval doublings
0 0
0 1
1 1
)";

constexpr std::string_view kFig5 = R"(# Semidistributive, not congruence-uniform: n4 and n6 generate the same congruence
14
names n1 n2 n3 n4 n5 n6 n7 n8 n9 n10 n11 n12 n13 n14
n1 n2
n1 n3
n2 n4
n2 n5
n3 n5
n3 n7
n4 n6
n4 n8
n5 n9
n6 n9
n6 n10
n7 n11
n8 n12
n9 n11
n10 n12
n10 n13
n11 n13
n12 n14
n13 n14
)";

constexpr std::string_view kFig7a = R"(# Congruence-uniform, not spherical; its core label order is a meet-semilattice
12
names bot a1 a2 b1 b2 b3 c1 c2 c3 d1 d2 top
bot a1
bot a2
a1 b1
a1 b2
a2 b2
a2 b3
b1 c1
b2 c2
b3 c3
c1 d1
c2 d1
c2 d2
c3 d2
d1 top
d2 top
)";

constexpr std::string_view kFig7b = R"(# Core label order of fig7a
12
names bot a1 a2 c1 c2 c3 b1 b3 b2 d1 d2 top
bot a1
bot a2
bot c1
bot c2
bot c3
bot b1
bot b3
a1 b2
a1 d2
a2 b2
a2 d1
c1 d1
c2 d1
c2 d2
c3 d2
b1 d1
b1 top
b3 d2
b3 top
)";

constexpr std::string_view kFig8a = R"(# Spherical congruence-uniform lattice whose core label order is not a lattice
9
names bot a1 a2 a3 b1 c1 c2 c3 top
bot a1
bot a2
bot a3
a1 c1
a1 c2
a2 b1
a3 c2
a3 c3
b1 c1
b1 c3
c1 top
c2 top
c3 top
)";

constexpr std::string_view kFig8b = R"(# Core label order of fig8a
9
names bot a1 b1 a2 a3 c1 c2 c3 top
bot a1
bot b1
bot a2
bot a3
a1 c1
a1 c2
b1 c1
b1 c3
a2 c1
a2 c3
a3 c2
a3 c3
c1 top
c2 top
c3 top
)";

constexpr std::string_view kFig9 = R"(# Closed sets of the example closure operator
13
names {} {a} {b} {c} {d} {a,b} {b,c} {b,d} {c,d} {a,b,c} {a,b,d} {b,c,d} {a,b,c,d}
{} {a}
{} {b}
{} {c}
{} {d}
{a} {a,b}
{b} {a,b}
{b} {b,c}
{b} {b,d}
{c} {b,c}
{c} {c,d}
{d} {b,d}
{d} {c,d}
{a,b} {a,b,c}
{a,b} {a,b,d}
{b,c} {a,b,c}
{b,c} {b,c,d}
{b,d} {a,b,d}
{b,d} {b,c,d}
{c,d} {b,c,d}
{a,b,c} {a,b,c,d}
{a,b,d} {a,b,c,d}
{b,c,d} {a,b,c,d}
)";

constexpr std::string_view kFig10a = R"(# Biclosed sets of the example closure operator
10
names {} {c} {a} {d} {a,b} {c,d} {a,b,c} {b,c,d} {a,b,d} {a,b,c,d}
{} {c}
{} {a}
{} {d}
{c} {c,d}
{c} {a,b,c}
{a} {a,b}
{d} {c,d}
{d} {a,b,d}
{a,b} {a,b,c}
{a,b} {a,b,d}
{c,d} {b,c,d}
{a,b,c} {a,b,c,d}
{b,c,d} {a,b,c,d}
{a,b,d} {a,b,c,d}
)";

constexpr std::string_view kFig10b = R"(# Core label order of fig10a
10
names {} {c} {a} {a,b} {d} {b,c,d} {a,b,c} {c,d} {a,b,d} {a,b,c,d}
{} {c}
{} {a}
{} {a,b}
{} {d}
{} {b,c,d}
{c} {a,b,c}
{c} {c,d}
{a} {a,b,c}
{a} {a,b,d}
{a,b} {a,b,c}
{a,b} {a,b,d}
{d} {c,d}
{d} {a,b,d}
{b,c,d} {a,b,c,d}
{a,b,c} {a,b,c,d}
{c,d} {a,b,c,d}
{a,b,d} {a,b,c,d}
)";

constexpr std::string_view kExample61 = R"(# Closure operator on {a,b,c,d}; unlisted sets are closed
ground a,b,c,d
{a,c} -> {a,b,c}
{a,d} -> {a,b,d}
{a,c,d} -> {a,b,c,d}
)";

std::string psi_string(const CoverLabeling& cl, Element x) { return psi(cl, x).to_string(1); }

// Whether `order` on the elements named `names` is the order of `expected`,
// matching elements by name.
bool same_named_order(const Poset& order, const std::vector<std::string>& names, const NamedPoset& expected) {
  if (order.size() != expected.poset.size()) return false;
  std::vector<Element> to_expected(order.size());
  for (Element x = 0; x < order.size(); ++x) {
    const auto it = std::find(expected.names.begin(), expected.names.end(), names[x]);
    if (it == expected.names.end()) return false;
    to_expected[x] = static_cast<Element>(it - expected.names.begin());
  }
  for (Element x = 0; x < order.size(); ++x) {
    for (Element y = 0; y < order.size(); ++y) {
      if (order.leq(x, y) != expected.poset.leq(to_expected[x], to_expected[y])) return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = {
      {"fig1a", "fig1a.lat", FixtureKind::kPoset, kFig1a, {}},
      {"fig2a", "fig2a.lat", FixtureKind::kPoset, kFig2a, {}},
      {"fig3-left", "fig3-left.lat", FixtureKind::kPoset, kFig3Left, {"a2", "a3", "a5", "a6"}},
      {"fig3-right", "fig3-right.lat", FixtureKind::kPoset, kFig3Right, {}},
      {"fig4", "fig4.script", FixtureKind::kScript, kFig4, {}},
      {"fig5", "fig5.lat", FixtureKind::kPoset, kFig5, {"n4", "n6"}},
      {"fig7a", "fig7a.lat", FixtureKind::kPoset, kFig7a, {}},
      {"fig7b", "fig7b.lat", FixtureKind::kPoset, kFig7b, {}},
      {"fig8a", "fig8a.lat", FixtureKind::kPoset, kFig8a, {}},
      {"fig8b", "fig8b.lat", FixtureKind::kPoset, kFig8b, {}},
      {"fig9", "fig9.lat", FixtureKind::kPoset, kFig9, {}},
      {"fig10a", "fig10a.lat", FixtureKind::kPoset, kFig10a, {}},
      {"fig10b", "fig10b.lat", FixtureKind::kPoset, kFig10b, {}},
      {"example61", "example61.closure", FixtureKind::kClosure, kExample61, {}},
  };
  return catalog;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

NamedPoset fixture_poset(std::string_view name) { return parse_poset(fixture(name).text); }
Lattice fixture_lattice(std::string_view name) { return make_lattice(fixture_poset(name).poset); }
std::vector<Interval> fixture_script(std::string_view name) { return parse_script(fixture(name).text); }
ClosureOperator fixture_closure(std::string_view name) { return parse_closure(fixture(name).text); }

ElementSet fixture_highlighted(std::string_view name) {
  const NamedPoset np = fixture_poset(name);
  ElementSet out;
  for (const auto& h : fixture(name).highlighted) out.insert(np.resolve(h));
  return out;
}

std::vector<FixtureCheck> verify_fixtures() {
  std::vector<FixtureCheck> checks;
  auto check = [&](const std::string& fx, const std::string& property, bool ok, const std::string& detail = "") {
    checks.push_back({fx, property, ok, ok ? "" : detail});
  };

  {
    const Lattice l = fixture_lattice("fig1a");
    check("fig1a", "not semidistributive", !is_semidistributive(l));
    check("fig1a", "not congruence-uniform", !is_congruence_uniform(l));
    check("fig1a", "mu(0,1) = 2", mobius_bottom_top(l) == 2, std::to_string(mobius_bottom_top(l)));
    const auto con = congruence_lattice(l);
    check("fig1a", "2 congruences", con.congruences.size() == 2, std::to_string(con.congruences.size()));
  }
  {
    const Lattice l = fixture_lattice("fig2a");
    check("fig2a", "congruence-uniform", is_congruence_uniform(l));
    check("fig2a", "spherical", is_spherical(l));
    const auto con = congruence_lattice(l);
    check("fig2a", "5 congruences", con.congruences.size() == 5, std::to_string(con.congruences.size()));
    check("fig2a", "core label order is a lattice", is_clo_lattice(core_label_order(CoverLabeling(l))));
  }
  {
    const NamedPoset left = fixture_poset("fig3-left");
    const ElementSet marked = fixture_highlighted("fig3-left");
    check("fig3-left", "is a lattice", std::holds_alternative<Lattice>(as_lattice(left.poset)));
    check("fig3-left", "marked set is not order convex", !is_order_convex(left.poset, marked));
    const Doubled d = double_set(left.poset, marked);
    check("fig3-left", "doubling by the marked set is not a lattice",
          std::holds_alternative<NotALattice>(as_lattice(d.poset)));
    check("fig3-left", "doubling by the marked set matches fig3-right",
          isomorphic(d.poset, fixture_poset("fig3-right").poset));
  }
  check("fig3-right", "not a lattice",
        std::holds_alternative<NotALattice>(as_lattice(fixture_poset("fig3-right").poset)));
  {
    const auto script = fixture_script("fig4");
    const Lattice l = run_script(std::span<const Interval>(script));
    check("fig4", "script yields fig2a", isomorphic(l.poset(), fixture_lattice("fig2a").poset()));
  }
  {
    const NamedPoset np = fixture_poset("fig5");
    const Lattice l = make_lattice(np.poset);
    check("fig5", "semidistributive", is_semidistributive(l));
    check("fig5", "not congruence-uniform", !is_congruence_uniform(l));
    const Element n4 = np.resolve("n4"), n6 = np.resolve("n6");
    check("fig5", "n4 and n6 generate the same congruence", cg(l, n4) == cg(l, n6));
  }
  {
    const NamedPoset np = fixture_poset("fig7a");
    const Lattice l = make_lattice(np.poset);
    check("fig7a", "congruence-uniform", is_congruence_uniform(l));
    check("fig7a", "mu(0,1) = 0", mobius_bottom_top(l) == 0, std::to_string(mobius_bottom_top(l)));
    const CoverLabeling cl(l);
    const std::map<std::string, std::string> expected = {
        {"bot", "{}"},  {"a1", "{1}"},        {"a2", "{2}"},        {"b1", "{3}"},
        {"b2", "{1,2}"}, {"b3", "{4}"},       {"c1", "{5}"},        {"c2", "{6}"},
        {"c3", "{7}"},  {"d1", "{2,3,5,6}"}, {"d2", "{1,4,6,7}"}, {"top", "{3,4}"}};
    for (const auto& [name, want] : expected) {
      const std::string got = psi_string(cl, np.resolve(name));
      check("fig7a", "psi(" + name + ") = " + want, got == want, got);
    }
    const CoreLabelOrder clo = core_label_order(cl);
    check("fig7a", "core label order is a meet-semilattice", is_clo_meet_semilattice(clo));
    check("fig7a", "core label order is fig7b", same_named_order(clo.order, np.names, fixture_poset("fig7b")));
    std::string maximal;
    for (Element x : clo.order.maximal_elements()) maximal += (maximal.empty() ? "" : " ") + np.names[x];
    check("fig7a", "core label order has maximal elements b2 d1 d2 top", maximal == "b2 d1 d2 top", maximal);
    check("fig7a", "core label order is not a lattice", !is_clo_lattice(clo));
    check("fig7a", "Boolean defect 4", boolean_defect(cl) == 4, std::to_string(boolean_defect(cl)));
  }
  {
    const NamedPoset np = fixture_poset("fig8a");
    const Lattice l = make_lattice(np.poset);
    check("fig8a", "congruence-uniform", is_congruence_uniform(l));
    check("fig8a", "spherical", is_spherical(l));
    const CoverLabeling cl(l);
    check("fig8a", "Boolean defect 3", boolean_defect(cl) == 3, std::to_string(boolean_defect(cl)));
    const CoreLabelOrder clo = core_label_order(cl);
    check("fig8a", "core label order is not a lattice", !is_clo_lattice(clo));
    check("fig8a", "core label order is fig8b", same_named_order(clo.order, np.names, fixture_poset("fig8b")));
    const Lattice b3 = boolean_lattice(3);
    check("fig8a", "isomorphic to B(3) doubled by an atom",
          isomorphic(l.poset(), double_interval(b3, 1, 1).poset()));
  }
  const ClosureOperator op = fixture_closure("example61");
  {
    check("example61", "valid closure operator", !validate(op).has_value());
    const SetPoset closed = closed_sets(op);
    check("example61", "13 closed sets", closed.sets.size() == 13, std::to_string(closed.sets.size()));
    const SetPoset bic = biclosed_sets(op);
    check("example61", "10 biclosed sets", bic.sets.size() == 10, std::to_string(bic.sets.size()));
  }
  {
    const NamedPoset np = fixture_poset("fig9");
    const Lattice l = make_lattice(np.poset);
    const SetPoset closed = closed_sets(op);
    bool same = closed.sets.size() == np.names.size();
    for (std::size_t i = 0; same && i < closed.sets.size(); ++i) {
      const auto it = std::find(np.names.begin(), np.names.end(), op.format_set(closed.sets[i]));
      same = it != np.names.end();
    }
    check("fig9", "elements are the closed sets of example61", same);
    check("fig9", "isomorphic to the closed-set lattice", isomorphic(l.poset(), closed.poset));
    const Element a = np.resolve("{a}"), b = np.resolve("{b}"), c = np.resolve("{c}");
    const bool violated = l.meet(b, a) == l.bottom() && l.meet(b, c) == l.bottom() && l.meet(b, l.join(a, c)) == b;
    check("fig9", "meet-semidistributivity fails at ({b}; {a}, {c})", violated);
    check("fig9", "not congruence-uniform", !is_congruence_uniform(l));
  }
  {
    const NamedPoset np = fixture_poset("fig10a");
    const Lattice l = make_lattice(np.poset);
    check("fig10a", "isomorphic to the biclosed-set lattice", isomorphic(l.poset(), biclosed_sets(op).poset));
    check("fig10a", "congruence-uniform", is_congruence_uniform(l));
    check("fig10a", "spherical", is_spherical(l));
    const CoreLabelOrder clo = core_label_order(CoverLabeling(l));
    check("fig10a", "core label order is not a lattice", !is_clo_lattice(clo));
    check("fig10a", "core label order is fig10b", same_named_order(clo.order, np.names, fixture_poset("fig10b")));
    const NamedPoset fig8 = fixture_poset("fig8a");
    const Element c2 = fig8.resolve("c2");
    check("fig10a", "isomorphic to fig8a doubled by c2",
          isomorphic(l.poset(), double_interval(make_lattice(fig8.poset), c2, c2).poset()));
    const auto step = single_step_violation(op);
    const bool expected_cover = step && op.format_set(step->lower) == "{c}" && op.format_set(step->upper) == "{a,b,c}";
    check("fig10a", "single-step inclusion fails at {c} < {a,b,c}", expected_cover,
          step ? op.format_set(step->lower) + " < " + op.format_set(step->upper) : "no violation");
  }
  return checks;
}

std::vector<std::string> export_fixtures(const std::string& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::string> written;
  for (const Fixture& f : fixture_catalog()) {
    const std::string path = (std::filesystem::path(directory) / f.file_name).string();
    write_file(path, f.text);
    written.push_back(path);
  }
  return written;
}

}  // namespace culat
