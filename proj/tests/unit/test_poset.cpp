#include "doctest.h"

#include <random>

#include "culat/fixtures.hpp"
#include "culat/poset.hpp"
#include "oracles.hpp"

using namespace culat;

namespace {

Poset random_poset(int n, std::mt19937& rng) {
  std::vector<Relation> rel;
  std::bernoulli_distribution edge(0.3);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (edge(rng)) rel.emplace_back(x, y);
  return Poset::from_covers(n, rel);
}

}  // namespace

TEST_CASE("from_covers closes transitively and reduces to covers") {
  std::vector<Relation> rel{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  Poset p = Poset::from_covers(4, rel);
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(3, 0));
  CHECK(p.covers(0, 1));
  CHECK_FALSE(p.covers(0, 2));
  CHECK(p.cover_relations() == std::vector<Relation>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p.cover_count() == 3);
}

TEST_CASE("from_covers relabels inputs that are not a linear extension") {
  std::vector<Relation> rel{{2, 0}, {0, 1}};
  std::vector<Element> relabel;
  Poset p = Poset::from_covers(3, rel, &relabel);
  REQUIRE(relabel.size() == 3);
  CHECK(p.less(relabel[2], relabel[0]));
  CHECK(p.less(relabel[0], relabel[1]));
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y)
      if (p.less(x, y)) CHECK(x < y);
}

TEST_CASE("cycles are rejected with the cycle") {
  std::vector<Relation> rel{{0, 1}, {1, 2}, {2, 0}};
  try {
    (void)Poset::from_covers(3, rel);
    FAIL("expected CycleError");
  } catch (const CycleError& e) {
    const auto& c = e.cycle();
    REQUIRE(c.size() == 4);
    CHECK(c.front() == c.back());
  }
}

TEST_CASE("from_down_sets validates its input") {
  CHECK_NOTHROW(Poset::from_down_sets({BitSet(0b01), BitSet(0b11)}));
  CHECK_THROWS(Poset::from_down_sets({BitSet(0b11), BitSet(0b10)}));
  CHECK_THROWS(Poset::from_down_sets({BitSet(0b01), BitSet(0b00)}));
}

TEST_CASE("covers round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = random_poset(1 + trial % 12, rng);
    auto covers = p.cover_relations();
    Poset q = Poset::from_covers(p.size(), covers);
    CHECK(q == p);
    CHECK(q.cover_relations() == covers);
  }
}

TEST_CASE("mobius satisfies the defining sum and dual involution") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Poset p = random_poset(1 + trial % 10, rng);
    Poset d = dual(p);
    auto leq = oracle::order_matrix(p);
    int n = p.size();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        CHECK(p.mobius(x, y) == oracle::mobius(leq, x, y));
        if (x < y && p.leq(x, y)) {
          int sum = 0;
          for (Element z : p.interval(x, y)) sum += p.mobius(x, z);
          CHECK(sum == 0);
        }
        if (p.leq(x, y)) CHECK(d.mobius(n - 1 - y, n - 1 - x) == p.mobius(x, y));
      }
  }
}

TEST_CASE("maximal chains run from minimal to maximal elements") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poset p = random_poset(1 + trial % 9, rng);
    auto chains = maximal_chains(p);
    CHECK_FALSE(chains.empty());
    for (const auto& c : chains) {
      CHECK(p.minimal_elements().contains(c.front()));
      CHECK(p.maximal_elements().contains(c.back()));
      for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(p.covers(c[i], c[i + 1]));
    }
  }
}

TEST_CASE("chains and the Boolean square") {
  std::vector<Relation> square{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  Poset p = Poset::from_covers(4, square);
  CHECK(maximal_chains(p).size() == 2);
  CHECK(p.mobius(0, 3) == 1);
  CHECK(is_antichain(p, BitSet(0b0110)));
  CHECK_FALSE(is_antichain(p, BitSet(0b0011)));
  CHECK(is_chain(p, BitSet(0b1011)));
  CHECK(poset_meet(p, 1, 2) == 0);
  CHECK(poset_join(p, 1, 2) == 3);
}

TEST_CASE("order convexity") {
  auto fig = fixture_poset("fig3-left");
  ElementSet marked = fixture_highlighted("fig3-left");
  CHECK(marked.size() == 4);
  CHECK_FALSE(is_order_convex(fig.poset, marked));
  CHECK(is_order_convex(fig.poset, fig.poset.interval(fig.resolve("a2"), fig.resolve("a5"))));
  CHECK(is_order_convex(fig.poset, ElementSet()));
}

TEST_CASE("induced subposets and missing bounds") {
  std::vector<Relation> bowtie{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  Poset p = Poset::from_covers(4, bowtie);
  CHECK_FALSE(poset_join(p, 0, 1).has_value());
  CHECK_FALSE(poset_meet(p, 2, 3).has_value());
  std::vector<Element> map;
  Poset q = induced_subposet(p, BitSet(0b0101), &map);
  CHECK(q.size() == 2);
  CHECK(map == std::vector<Element>{0, 2});
  CHECK(q.leq(0, 1));
}
