#include "properties.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/doubling.hpp"
#include "culat/enumeration.hpp"
#include "culat/io.hpp"
#include "oracles.hpp"

namespace props {

using culat::Element;
using culat::ElementSet;
using culat::LabelSet;
using culat::Lattice;

void Report::check(std::string_view name, bool ok, const std::function<std::string()>& detail) {
  auto it = std::find_if(tallies_.begin(), tallies_.end(), [&](const Tally& t) { return t.name == name; });
  if (it == tallies_.end()) {
    tallies_.push_back(Tally{std::string(name), 0, 0, {}});
    it = tallies_.end() - 1;
  }
  ++it->checked;
  if (!ok) {
    if (it->violations == 0 && detail) it->first_failure = detail();
    ++it->violations;
  }
}

std::uint64_t Report::violations() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies_) total += t.violations;
  return total;
}

std::uint64_t Report::checks() const {
  std::uint64_t total = 0;
  for (const auto& t : tallies_) total += t.checked;
  return total;
}

std::string Report::failures() const {
  std::string out;
  for (const auto& t : tallies_) {
    if (t.violations == 0) continue;
    out += t.name + ": " + std::to_string(t.violations) + "/" + std::to_string(t.checked) + " violations\n";
    if (!t.first_failure.empty()) out += t.first_failure + "\n";
  }
  return out;
}

const Tally* Report::find(std::string_view name) const {
  for (const auto& t : tallies_)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

std::string show(const Lattice& l) { return culat::format_poset(l.poset()); }

std::string show(const Lattice& l, const std::string& what) { return what + " in\n" + show(l); }

// Label positions -> join-irreducible elements.
ElementSet label_elements(const Lattice& l, LabelSet labels) {
  ElementSet out;
  for (int i : labels) out.insert(l.join_irreducibles()[i].j);
  return out;
}

bool is_boolean(const Lattice& l) {
  int rank = l.atoms().size();
  if (l.size() != (1 << rank)) return false;
  return culat::isomorphic(l.poset(), culat::boolean_lattice(rank).poset());
}

std::vector<ElementSet> subsets_of(ElementSet s) {
  std::vector<int> items(s.begin(), s.end());
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1U << items.size()); ++mask) {
    ElementSet sub;
    for (std::size_t i = 0; i < items.size(); ++i)
      if ((mask >> i) & 1U) sub.insert(items[i]);
    out.push_back(sub);
  }
  return out;
}

int join_irreducible_count(const culat::Poset& p) {
  int count = 0;
  for (Element x = 0; x < p.size(); ++x)
    if (p.lower_covers(x).size() == 1) ++count;
  return count;
}

bool clo_is_lattice(const Lattice& l) {
  return culat::is_clo_lattice(culat::core_label_order(culat::label_covers(l)));
}

}  // namespace

void check_core_labels(const Lattice& l, Report& r) {
  const int n = l.size();
  culat::CoverLabeling cl(l);
  auto clo = culat::core_label_order(cl);
  const auto& js = l.join_irreducibles();
  const LabelSet all_labels = LabelSet::range(static_cast<int>(js.size()));
  const int mu = culat::mobius_bottom_top(l);
  const bool spherical = mu != 0;
  const bool boolean = is_boolean(l);

  for (Element u = 0; u < n; ++u)
    for (Element v : l.poset().upper_covers(u)) {
      Element j = cl.label_element(u, v);
      auto j_star = l.poset().lower_covers(j).front();
      r.check("cover label is perspective to its cover",
              l.join(j, u) == v && l.meet(j, u) == j_star && oracle::perspective_label(l, u, v) == j,
              [&] { return show(l, "cover " + std::to_string(u) + "<" + std::to_string(v)); });
    }

  int bdef = 0;
  bool all_cores_boolean = true;
  for (Element x = 0; x < n; ++x) {
    LabelSet psi = clo.psi[x];
    LabelSet gamma = culat::gamma(cl, x);
    ElementSet psi_el = label_elements(l, psi);
    ElementSet gamma_el = label_elements(l, gamma);
    auto where = [&] { return show(l, "element " + std::to_string(x)); };

    r.check("core labels match a brute-force perspectivity scan", psi_el == oracle::core_labels(l, x), where);
    bool below = true;
    for (Element j : psi_el) below = below && l.leq(j, x);
    r.check("core labels lie below their element", below, where);
    r.check("element is the join of its core labels", l.join_of(psi_el) == x, where);

    auto canonical = culat::canonical_join_representation(l, x);
    r.check("lower cover labels equal the canonical join representation", canonical && *canonical == gamma_el,
            where);
    r.check("canonical joinands are core labels", gamma.is_subset_of(psi), where);

    Element nuc = culat::nucleus(l, x);
    Lattice core = culat::interval_sublattice(l, nuc, x);
    bool core_boolean = core.size() == (1 << gamma.size()) &&
                        culat::isomorphic(core.poset(), culat::boolean_lattice(gamma.size()).poset());
    r.check("core labels equal canonical joinands iff the core is Boolean", (psi == gamma) == core_boolean, where);
    bdef += (psi - gamma).size();
    all_cores_boolean = all_cores_boolean && core_boolean;

    for (ElementSet sub : subsets_of(gamma_el)) {
      auto c = culat::canonical_join_representation(l, l.join_of(sub));
      r.check("subsets of canonical join representations are canonical", c && *c == sub, where);
    }

    for (ElementSet covers : subsets_of(l.poset().upper_covers(x))) {
      if (covers.empty()) continue;
      auto swap = culat::check_label_swap(cl, x, covers);
      bool ok = swap.has_value();
      if (ok) {
        Element top = l.join_of(covers);
        ElementSet cs;
        int i = 0;
        for (Element a : covers) {
          Element c = (*swap)[i++];
          cs.insert(c);
          ok = ok && l.poset().covers(c, top) && cl.label(x, a) == cl.label(c, top);
        }
        ok = ok && l.meet_of(cs) == x && cs.size() == covers.size();
      }
      r.check("upper covers swap to lower covers of their join", ok, where);
    }

    for (Element y = 0; y < n; ++y) {
      if (clo.psi[x].is_subset_of(clo.psi[y]))
        r.check("core label containment implies order", l.leq(x, y),
                [&] { return show(l, std::to_string(x) + " vs " + std::to_string(y)); });
    }
  }

  r.check("Boolean defect matches the per-element sum", culat::boolean_defect(cl) == bdef, [&] { return show(l); });
  r.check("zero Boolean defect iff every core is Boolean", (bdef == 0) == all_cores_boolean, [&] { return show(l); });
  r.check("spherical with zero Boolean defect iff Boolean", (spherical && bdef == 0) == boolean,
          [&] { return show(l); });

  r.check("congruence-uniform lattices are semidistributive", culat::is_semidistributive(l), [&] { return show(l); });
  r.check("mobius of a meet-semidistributive lattice is -1, 0 or 1", mu >= -1 && mu <= 1, [&] { return show(l); });
  r.check("full core label set at the top iff nonzero mobius", (clo.psi[l.top()] == all_labels) == spherical,
          [&] { return show(l); });

  ElementSet maximal = clo.order.maximal_elements();
  r.check("top is maximal in the core label order", maximal.contains(l.top()), [&] { return show(l); });
  r.check("core label order has a greatest element iff spherical", (maximal.size() == 1) == spherical,
          [&] { return show(l); });
  bool meet_semi = culat::is_clo_meet_semilattice(clo);
  bool lattice = culat::is_clo_lattice(clo);
  bool ip = culat::has_intersection_property(clo);
  r.check("lattice core label order implies spherical", !lattice || spherical, [&] { return show(l); });
  r.check("core label order is a meet-semilattice iff intersection property", meet_semi == ip,
          [&] { return show(l); });
  r.check("core label order is a lattice iff spherical with intersection property", lattice == (spherical && ip),
          [&] { return show(l); });
  r.check("isomorphic to its core label order iff Boolean", culat::isomorphic(l.poset(), clo.order) == boolean,
          [&] { return show(l); });
  r.check("atomic iff Boolean", culat::is_atomic(l) == boolean, [&] { return show(l); });

  ElementSet atoms = l.atoms();
  if (n > 1) {
    bool ok = true;
    for (ElementSet sub : subsets_of(atoms))
      if (l.join_of(sub) == l.top() && sub != atoms) ok = false;
    r.check("atoms joining to the top are all atoms", ok, [&] { return show(l); });
    r.check("join of the atoms is the top iff nonzero mobius", (l.join_of(atoms) == l.top()) == spherical,
            [&] { return show(l); });
  }

  auto nexus = culat::boolean_nexus(cl);
  r.check("Boolean nexus is a Boolean lattice on the atoms",
          nexus.elements.size() == (1 << atoms.size()) &&
              culat::isomorphic(nexus.order, culat::boolean_lattice(atoms.size()).poset()),
          [&] { return show(l); });
  bool induced = true;
  bool all_below = true;
  for (Element x : nexus.elements) {
    ElementSet below;
    for (const auto& ji : js)
      if (l.leq(ji.j, x)) below.insert(ji.j);
    all_below = all_below && label_elements(l, clo.psi[x]) == below;
    for (Element y : nexus.elements) induced = induced && (l.leq(x, y) == clo.psi[x].is_subset_of(clo.psi[y]));
  }
  r.check("Boolean nexus is an induced subposet of the core label order", induced, [&] { return show(l); });
  r.check("nexus elements have every join-irreducible below as core label", all_below, [&] { return show(l); });

  if (n > 2) {
    auto faces = culat::crosscut_complex(l, atoms);
    std::set<Element> joins;
    for (ElementSet f : faces) joins.insert(l.join_of(f));
    ElementSet expected = nexus.elements;
    if (spherical) expected.erase(l.top());
    ElementSet got;
    for (Element x : joins) got.insert(x);
    r.check("atom crosscut complex faces correspond to nexus elements",
            joins.size() == faces.size() && got == expected, [&] { return show(l); });
  }
}

void check_quotients(const Lattice& l, Report& r) {
  culat::CoverLabeling cl(l);
  auto clo = culat::core_label_order(cl);
  const bool spherical = culat::mobius_bottom_top(l) != 0;
  const bool ip = culat::has_intersection_property(clo);
  for (const auto& t : culat::all_congruences(l)) {
    auto where = [&] {
      std::ostringstream os;
      os << "congruence";
      for (auto c : t.classes()) os << ' ' << c.to_string();
      return show(l, os.str());
    };
    auto q = culat::quotient(l, t);
    bool cu = culat::is_congruence_uniform(q.lattice);
    r.check("quotients of congruence-uniform lattices are congruence-uniform", cu, where);
    if (!cu) continue;
    culat::CoverLabeling qcl(q.lattice);
    auto qclo = culat::core_label_order(qcl);

    ElementSet sigma = culat::kernel_irreducibles(l, t);
    ElementSet image;
    bool injective = true;
    for (const auto& ji : l.join_irreducibles()) {
      if (sigma.contains(ji.j)) continue;
      Element pj = q.projection[ji.j];
      injective = injective && !image.contains(pj);
      image.insert(pj);
    }
    r.check("surviving join-irreducibles biject onto the quotient's",
            injective && image == q.lattice.join_irreducible_set(), where);

    for (Element x = 0; x < l.size(); ++x) {
      // The correspondence is stated for the least element of each class.
      bool least = true;
      for (Element y = 0; y < l.size(); ++y)
        if (y != x && t.related(x, y) && l.leq(y, x)) least = false;
      if (!least) continue;
      ElementSet expected;
      for (Element j : label_elements(l, clo.psi[x]))
        if (!sigma.contains(j)) expected.insert(q.projection[j]);
      r.check("quotient core labels are the surviving core labels",
              label_elements(q.lattice, qclo.psi[q.projection[x]]) == expected, where);
    }

    bool qspherical = culat::mobius_bottom_top(q.lattice) != 0;
    bool qip = culat::has_intersection_property(qclo);
    if (spherical) r.check("quotients of spherical lattices are spherical", qspherical, where);
    if (ip) r.check("quotients keep the intersection property", qip, where);
    if (spherical && ip)
      r.check("spherical with intersection property: every quotient has a lattice core label order",
              culat::is_clo_lattice(qclo), where);
  }
}

void check_doublings(const Lattice& l, Report& r) {
  const int n = l.size();
  const int j_count = static_cast<int>(l.join_irreducibles().size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet set(mask);
    if (!culat::is_order_convex(l.poset(), set)) continue;
    auto doubled = culat::double_set(l.poset(), set);
    auto where = [&] { return show(l, "convex set " + set.to_string()); };
    int k = culat::induced_subposet(l.poset(), set).minimal_elements().size();
    r.check("doubling adds one join-irreducible per minimal element of the set",
            join_irreducible_count(doubled.poset) == j_count + k, where);
    auto as = culat::as_lattice(doubled.poset);
    r.check("doubling an order-convex set gives a lattice", std::holds_alternative<Lattice>(as), where);
    if (set.size() > 0 && l.leq(set.front(), set.back()) && set == l.poset().interval(set.front(), set.back()) &&
        std::holds_alternative<Lattice>(as))
      r.check("doubling by an interval keeps congruence uniformity",
              culat::is_congruence_uniform(std::get<Lattice>(as)), where);
  }

  culat::CoverLabeling cl(l);
  auto clo = culat::core_label_order(cl);
  std::vector<Element> nuc(n);
  for (Element x = 0; x < n; ++x) nuc[x] = culat::nucleus(l, x);
  std::map<Element, bool> doubled_clo_lattice;
  for (const auto& ji : l.join_irreducibles()) {
    Element j = ji.j;
    LabelSet pj = clo.psi[j];
    for (Element x = 0; x < n; ++x) {
      if (x == j || !l.leq(nuc[x], j) || !l.leq(j, x) || !pj.is_subset_of(clo.psi[x])) continue;
      for (Element y = x + 1; y < n; ++y) {
        if (y == j || !l.leq(nuc[y], j) || !l.leq(j, y) || !pj.is_subset_of(clo.psi[y])) continue;
        // x and y must be incomparable upper bounds of j and j' in the new order.
        if (clo.psi[x].is_subset_of(clo.psi[y]) || clo.psi[y].is_subset_of(clo.psi[x])) continue;
        auto it = doubled_clo_lattice.find(j);
        if (it == doubled_clo_lattice.end())
          it = doubled_clo_lattice.emplace(j, clo_is_lattice(culat::double_interval(l, j, j))).first;
        r.check("doubling a shared core join-irreducible breaks the core label order lattice", !it->second, [&] {
          return show(l, "x=" + std::to_string(x) + " y=" + std::to_string(y) + " j=" + std::to_string(j));
        });
      }
    }
  }

  if (l.atoms().size() >= 3) {
    int mu = culat::mobius_bottom_top(l);
    for (Element b : l.atoms()) {
      Lattice d = culat::double_interval(l, b, b);
      auto where = [&] { return show(l, "atom " + std::to_string(b)); };
      r.check("doubling an atom (three or more atoms) breaks the core label order lattice", !clo_is_lattice(d),
              where);
      r.check("doubling an atom keeps the mobius value", culat::mobius_bottom_top(d) == mu, where);
    }
  }
}

void check_lattice(const Lattice& l, Report& r) {
  const int n = l.size();
  auto leq = oracle::order_matrix(l.poset());
  auto where = [&] { return show(l); };

  bool mobius_ok = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) mobius_ok = mobius_ok && l.poset().mobius(x, y) == oracle::mobius(leq, x, y);
  r.check("mobius matches the defining recursion", mobius_ok, where);
  const int mu = oracle::mobius(leq, 0, n - 1);

  if (n > 2) {
    ElementSet middle = ElementSet::range(n) - ElementSet::singleton(0) - ElementSet::singleton(n - 1);
    auto chains = culat::maximal_chains(l.poset());
    for (ElementSet c : subsets_of(middle)) {
      bool crosscut = culat::is_antichain(l.poset(), c) && !c.empty();
      for (const auto& chain : chains) {
        int hits = 0;
        for (Element e : chain) hits += c.contains(e) ? 1 : 0;
        crosscut = crosscut && hits == 1;
      }
      r.check("crosscut test agrees with a maximal-chain scan", culat::is_crosscut(l, c) == crosscut, where);
      if (crosscut)
        r.check("crosscut sum equals the mobius value", culat::crosscut_mobius(l, c) == mu,
                [&] { return show(l, "crosscut " + c.to_string()); });
    }
  }

  bool jsd = culat::is_join_semidistributive(l);
  bool msd = culat::is_meet_semidistributive(l);
  bool every_canonical = true;
  for (Element x = 0; x < n; ++x) {
    auto c = culat::canonical_join_representation(l, x);
    if (!c) {
      every_canonical = false;
      continue;
    }
    for (ElementSet sub : subsets_of(*c)) {
      auto cs = culat::canonical_join_representation(l, l.join_of(sub));
      r.check("subsets of canonical join representations are canonical", cs && *cs == sub, where);
    }
  }
  r.check("join-semidistributive iff every element has a canonical join representation", jsd == every_canonical,
          where);

  if (msd) {
    r.check("mobius of a meet-semidistributive lattice is -1, 0 or 1", mu >= -1 && mu <= 1, where);
    if (n > 1)
      r.check("join of the atoms is the top iff nonzero mobius", (l.join_of(l.atoms()) == l.top()) == (mu != 0),
              where);
  }
  if (jsd && msd) r.check("semidistributive lattices are atomic iff Boolean", culat::is_atomic(l) == is_boolean(l), where);

  bool cu = culat::is_congruence_uniform(l);
  if (cu) r.check("congruence-uniform lattices are semidistributive", jsd && msd, where);

  if (n <= 7) {
    auto brute = oracle::all_congruences(l);
    auto fast = culat::all_congruences(l);
    std::sort(fast.begin(), fast.end());
    r.check("congruences match the partition oracle", fast == brute, where);
    r.check("congruence uniformity matches the partition oracle", cu == oracle::is_congruence_uniform(l), where);

    std::set<culat::Congruence> join_irreducible;
    for (const auto& a : brute) {
      int lower = 0;
      for (const auto& b : brute) {
        if (a == b || !b.refines(a)) continue;
        bool cover = true;
        for (const auto& c : brute)
          if (c != a && c != b && b.refines(c) && c.refines(a)) cover = false;
        if (cover) ++lower;
      }
      if (lower == 1) join_irreducible.insert(a);
    }
    std::set<culat::Congruence> from_covers, from_irreducibles;
    for (auto [u, v] : l.poset().cover_relations()) from_covers.insert(culat::cg(l, u, v));
    for (const auto& ji : l.join_irreducibles()) from_irreducibles.insert(culat::cg(l, ji.j));
    r.check("join-irreducible congruences are the cover congruences",
            join_irreducible == from_covers && from_covers == from_irreducibles, where);
  }
}

Report run_congruence_uniform_suite(int max_n) {
  Report r;
  culat::generate_cu(max_n, [&](const Lattice& l) {
    check_core_labels(l, r);
    check_quotients(l, r);
    check_doublings(l, r);
  });
  return r;
}

Report run_lattice_suite(int max_n) {
  Report r;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : culat::enumerate_lattices(n)) check_lattice(culat::make_lattice(p), r);
  return r;
}

}  // namespace props
