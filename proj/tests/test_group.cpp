#include <doctest.h>

#include <iostream>

#include "fixtures.hpp"
#include "pgdga/group.hpp"

using namespace pgdga;

TEST_CASE("free reduction") {
  Word w = {letter_of(0), letter_of(0, true)};
  CHECK(free_reduce(w).empty());
  Word w2 = {letter_of(0), letter_of(1), letter_of(1, true), letter_of(0)};
  CHECK(free_reduce(w2) == Word{letter_of(0), letter_of(0)});
  CHECK(free_reduce(free_reduce(w2)) == free_reduce(w2));
}

TEST_CASE("free group: no relators, reduction decides") {
  Presentation p(2, {}, {0, 1});
  CHECK(p.complete());
  CHECK(p.is_equal({letter_of(0), letter_of(1), letter_of(1, true)}, {letter_of(0)}));
  CHECK(!p.is_equal({letter_of(0)}, {letter_of(1)}));
}

TEST_CASE("vertex relators die in the full group") {
  for (const std::string& s : {fixtures::theta, fixtures::k4}) {
    auto g = PlaneGraph::parse(s);
    auto eg = EdgeGroup::build(g);
    REQUIRE(eg.full->completed());
    for (int v = 0; v < g.V(); ++v) {
      Word r = EdgeGroup::vertex_relator(g, v);
      CHECK(r.size() == 6);
      CHECK(eg.full->is_trivial(r));
      auto ab = eg.abelianize_edges(r);
      for (long long x : ab) CHECK(x == 0);
    }
    std::cout << "full group rules (" << g.V() << " vertices): "
              << eg.full->rewrite_system().active_rule_count() << "\n";
  }
}

TEST_CASE("prism full group completes") {
  auto g = PlaneGraph::parse(fixtures::prism);
  auto eg = EdgeGroup::build(g, 60000, 200'000'000);
  std::cout << "prism completed=" << eg.full->completed()
            << " rules=" << eg.full->rewrite_system().active_rule_count() << "\n";
  CHECK(eg.full->completed());
  for (int v = 0; v < g.V(); ++v) CHECK(eg.full->is_trivial(EdgeGroup::vertex_relator(g, v)));
}

TEST_CASE("tree group for theta is trivial") {
  auto g = PlaneGraph::parse(fixtures::theta);
  auto tg = TreeGroup::build(g, {}, 0);
  CHECK(tg.pres->num_gens() == 0);
  CHECK(tg.pres->completed());
  Word any = {letter_of(0), letter_of(2, true)};  // letters of the full group
  CHECK(tg.project(any).empty());
}

TEST_CASE("tree group for k4 completes and kills projected relators") {
  auto g = PlaneGraph::parse(fixtures::k4);
  auto trees = g.trees_missing(0);
  REQUIRE(trees.size() == 3);
  for (const auto& t : trees) {
    auto tg = TreeGroup::build(g, t, 0);
    REQUIRE(tg.pres->completed());
    CHECK(tg.pres->num_gens() == 4);
    for (int v = 0; v < g.V(); ++v) {
      Word r = tg.project(EdgeGroup::vertex_relator(g, v));
      CHECK(tg.pres->is_trivial(r));
      if (v == 0) CHECK(r.empty());  // relator at the missed vertex projects away
    }
  }
}

TEST_CASE("tree group for prism completes") {
  auto g = PlaneGraph::parse(fixtures::prism);
  auto trees = g.trees_missing(0);
  REQUIRE(!trees.empty());
  auto tg = TreeGroup::build(g, trees[0], 0, 60000, 200'000'000);
  std::cout << "prism tree group completed=" << tg.pres->completed()
            << " rules=" << tg.pres->rewrite_system().active_rule_count() << "\n";
  CHECK(tg.pres->completed());
  for (int v = 0; v < g.V(); ++v)
    CHECK(tg.pres->is_trivial(tg.project(EdgeGroup::vertex_relator(g, v))));
}
