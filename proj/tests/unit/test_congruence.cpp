#include "doctest.h"

#include <algorithm>

#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/fixtures.hpp"
#include "oracles.hpp"

using namespace culat;

TEST_CASE("congruences of N5 and M3") {
  Lattice n5 = fixture_lattice("fig2a");
  auto cons = all_congruences(n5);
  CHECK(cons.size() == 5);
  CHECK(cons.front().is_identity());
  CHECK(cons.back().is_full());
  CHECK(is_congruence_uniform(n5));

  Lattice m3 = fixture_lattice("fig1a");
  CHECK(all_congruences(m3).size() == 2);
  auto v = congruence_uniformity_violation(m3);
  REQUIRE(v.has_value());
  CHECK(v->a != v->b);
}

TEST_CASE("cg only accepts covers") {
  Lattice b = boolean_lattice(2);
  CHECK_THROWS_AS(cg(b, 0, 3), std::invalid_argument);
  Congruence t = cg(b, 0, 1);
  CHECK(t.related(0, 1));
  CHECK(t.related(2, 3));
  CHECK_FALSE(t.related(0, 2));
  CHECK(t == cg(b, 1));
  CHECK(is_congruence(b, t));
}

TEST_CASE("closure is the finest congruence containing the relation") {
  for (int n = 2; n <= 6; ++n)
    for (const Poset& p : oracle::all_lattices(n)) {
      Lattice l = make_lattice(p);
      auto brute = oracle::all_congruences(l);
      for (auto [u, v] : p.cover_relations()) {
        Congruence t = cg(l, u, v);
        CHECK(is_congruence(l, t));
        // Finest: refines every congruence collapsing u and v.
        for (const auto& other : brute)
          if (other.related(u, v)) CHECK(t.refines(other));
      }
    }
}

TEST_CASE("join and meet of congruences") {
  Lattice l = fixture_lattice("fig2a");
  auto cons = all_congruences(l);
  for (const auto& a : cons)
    for (const auto& b : cons) {
      Congruence j = congruence_join(l, a, b);
      Congruence m = congruence_meet(a, b);
      CHECK(a.refines(j));
      CHECK(b.refines(j));
      CHECK(m.refines(a));
      CHECK(m.refines(b));
      CHECK(std::find(cons.begin(), cons.end(), j) != cons.end());
      CHECK(std::find(cons.begin(), cons.end(), m) != cons.end());
    }
}

TEST_CASE("congruence lattice of a Boolean lattice is Boolean") {
  auto con = congruence_lattice(boolean_lattice(3));
  CHECK(con.congruences.size() == 8);
  CHECK(isomorphic(con.order.poset(), boolean_lattice(3).poset()));
  CHECK_THROWS_AS(congruence_lattice(chain_lattice(8)), std::length_error);
  CHECK(all_congruences(chain_lattice(8)).size() == 128);
}

TEST_CASE("the semidistributive fixture is not congruence-uniform") {
  auto named = fixture_poset("fig5");
  Lattice l = make_lattice(named.poset);
  CHECK(is_semidistributive(l));
  CHECK_FALSE(is_congruence_uniform(l));
  Element n4 = named.resolve("n4"), n6 = named.resolve("n6");
  CHECK(cg(l, n4) == cg(l, n6));
  auto v = congruence_uniformity_violation(l);
  REQUIRE(v.has_value());
}

TEST_CASE("quotients") {
  auto named = fixture_poset("fig2a");
  Lattice l = make_lattice(named.poset);
  Element a1 = named.resolve("a1"), b1 = named.resolve("b1");
  Congruence t = cg(l, a1, b1);
  Quotient q = quotient(l, t);
  CHECK(q.lattice.size() == t.class_count());
  CHECK(q.projection[a1] == q.projection[b1]);
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y) {
      CHECK(q.projection[l.join(x, y)] == q.lattice.join(q.projection[x], q.projection[y]));
      CHECK(q.projection[l.meet(x, y)] == q.lattice.meet(q.projection[x], q.projection[y]));
    }
  CHECK(kernel_irreducibles(l, t) == ElementSet::singleton(b1));
  CHECK(kernel_irreducibles(l, identity_congruence(l)).empty());
  CHECK(kernel_irreducibles(l, full_congruence(l)) == l.join_irreducible_set());
}

TEST_CASE("congruence uniformity agrees with the partition oracle") {
  for (int n = 1; n <= 7; ++n)
    for (const Poset& p : oracle::all_lattices(n)) {
      Lattice l = make_lattice(p);
      CHECK(is_congruence_uniform(l) == oracle::is_congruence_uniform(l));
    }
}
