#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pgdga/plane_graph.hpp"

using namespace pgdga;

TEST_CASE("theta counts") {
  auto g = PlaneGraph::parse(fixtures::theta);
  CHECK(g.V() == 2);
  CHECK(g.E() == 3);
  CHECK(g.F() == 3);
  CHECK(g.genus() == 0);
}

TEST_CASE("k4 counts") {
  auto g = PlaneGraph::parse(fixtures::k4);
  CHECK(g.V() == 4);
  CHECK(g.E() == 6);
  CHECK(g.F() == 4);
  CHECK(g.genus() == 1);
}

TEST_CASE("prism counts") {
  auto g = PlaneGraph::parse(fixtures::prism);
  CHECK(g.V() == 6);
  CHECK(g.E() == 9);
  CHECK(g.F() == 5);
  CHECK(g.genus() == 2);
}

TEST_CASE("cube counts") {
  auto g = PlaneGraph::parse(fixtures::cube);
  CHECK(g.V() == 8);
  CHECK(g.E() == 12);
  CHECK(g.F() == 6);
  CHECK(g.genus() == 3);
}

TEST_CASE("structural identities hold for all fixtures") {
  for (const std::string& s : {fixtures::theta, fixtures::k4, fixtures::prism, fixtures::cube}) {
    auto g = PlaneGraph::parse(s);
    int gen = g.genus();
    CHECK(g.V() == 2 * gen + 2);
    CHECK(g.E() == 3 * gen + 3);
    CHECK(g.F() == gen + 3);
    // face walk sanity: next/prev are inverse, faces partition darts
    int total = 0;
    for (int f = 0; f < g.F(); ++f) total += static_cast<int>(g.face_darts(f).size());
    CHECK(total == g.num_darts());
    for (int d = 0; d < g.num_darts(); ++d) {
      CHECK(g.next_in_face(g.prev_in_face(d)) == d);
      CHECK(g.dart_face(g.next_in_face(d)) == g.dart_face(d));
    }
  }
}

TEST_CASE("non-trivalent input rejected") {
  CHECK_THROWS_WITH_AS(PlaneGraph::parse("vertex a: e1+ e1-\n"), doctest::Contains("NotTrivalent"),
                       GraphError);
}

TEST_CASE("trees missing one vertex") {
  auto theta = PlaneGraph::parse(fixtures::theta);
  CHECK(theta.trees_missing(0).size() == 1);  // the empty tree
  CHECK(theta.trees_missing(0)[0].empty());

  auto k4 = PlaneGraph::parse(fixtures::k4);
  size_t total = 0;
  for (int v = 0; v < 4; ++v) {
    auto trees = k4.trees_missing(v);
    CHECK(trees.size() == 3);
    for (const auto& t : trees) {
      CHECK(t.size() == 2);
      for (int e : t) {
        CHECK(k4.dart_vertex(2 * e) != v);
        CHECK(k4.dart_vertex(2 * e + 1) != v);
      }
    }
    total += trees.size();
  }
  CHECK(total == 12);
}

TEST_CASE("dual graphs and chromatic counts") {
  auto theta = PlaneGraph::parse(fixtures::theta);
  auto dual = theta.dual();  // K3
  CHECK(dual.n == 3);
  CHECK(chromatic_count(dual, 3) == 6);
  CHECK(chromatic_count(dual, 0) == 0);

  auto k4 = PlaneGraph::parse(fixtures::k4);
  auto dual4 = k4.dual();  // K4 again
  CHECK(dual4.n == 4);
  CHECK(chromatic_count(dual4, 4) == 24);
  CHECK(chromatic_count(dual4, 3) == 0);

  // brute-force oracle on <= 6 faces
  for (const std::string& s : {fixtures::theta, fixtures::k4, fixtures::prism, fixtures::cube}) {
    auto g = PlaneGraph::parse(s);
    auto d = g.dual();
    for (int k = 0; k <= 4; ++k) {
      long long brute = 0;
      std::vector<int> color(d.n, 0);
      long long limit = 1;
      for (int i = 0; i < d.n; ++i) limit *= k;
      for (long long code = 0; code < limit; ++code) {
        long long c = code;
        for (int i = 0; i < d.n; ++i) {
          color[i] = static_cast<int>(c % k);
          c /= k;
        }
        bool ok = true;
        for (auto [a, b] : d.edges)
          if (color[a] == color[b]) ok = false;
        if (ok) ++brute;
      }
      CHECK(chromatic_count(d, k) == brute);
    }
  }
}

TEST_CASE("bridge gives dual loop") {
  // two theta blobs joined by a bridge is not trivalent-compatible at desk
  // scale without more vertices; instead check the definition directly on a
  // hand-made multigraph
  PlaneGraph::Multigraph m;
  m.n = 1;
  m.edges = {{0, 0}};
  CHECK(chromatic_count(m, 5) == 0);
}
