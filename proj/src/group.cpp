#include "pgdga/group.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace pgdga {

Presentation::Presentation(int num_gens, std::vector<Word> relators, std::vector<int> gen_rank)
    : num_gens_(num_gens), relators_(std::move(relators)) {
  Shortlex order;
  order.letter_rank.assign(2 * num_gens, 0);
  // generator g contributes letters 2g, 2g+1; rank generators first by the
  // supplied rank, inverse letter just after the plain letter
  for (int g = 0; g < num_gens; ++g) {
    order.letter_rank[2 * g] = 2 * gen_rank[g];
    order.letter_rank[2 * g + 1] = 2 * gen_rank[g] + 1;
  }
  rs_ = RewriteSystem(order);
  for (int g = 0; g < num_gens; ++g) {
    rs_.add_rule({letter_of(g, false), letter_of(g, true)}, {});
    rs_.add_rule({letter_of(g, true), letter_of(g, false)}, {});
  }
  for (const Word& r : relators_) {
    Word w = free_reduce(r);
    if (!w.empty()) rs_.add_rule(w, {});
  }
}

bool Presentation::complete(long long max_rules, long long max_steps) {
  completed_ = rs_.complete(max_rules, max_steps);
  return completed_;
}

Word Presentation::normal_form(const Word& w) const {
  if (!completed_)
    throw GroupError("NoDecisionProcedure", "rewriting system is not confluent");
  return rs_.reduce(free_reduce(w));
}

bool Presentation::is_equal(const Word& u, const Word& v) const {
  // sound fast rejection before normal forms
  if (exponent_vector(free_reduce(u), num_gens_) != exponent_vector(free_reduce(v), num_gens_)) {
    // abelianized images of relators need not vanish for arbitrary
    // presentations, so this shortcut is only safe when they do
    bool relators_abelian_trivial = true;
    for (const Word& r : relators_) {
      auto ev = exponent_vector(r, num_gens_);
      if (std::any_of(ev.begin(), ev.end(), [](long long x) { return x != 0; }))
        relators_abelian_trivial = false;
    }
    if (relators_abelian_trivial) return false;
  }
  return normal_form(u) == normal_form(v);
}

Word EdgeGroup::vertex_relator(const PlaneGraph& g, int v) {
  // Counterclockwise double loop around v. The crossing rays are the darts at
  // v in rotation order; a crossing with the + -> - transition reads the
  // toward-v generator, the - -> + transition reads the inverse of the
  // away-from-v generator.
  const auto& darts = g.vertex_darts(v);
  int d0 = *std::min_element(darts.begin(), darts.end());
  int rays[3] = {d0, g.sigma(d0), g.sigma(g.sigma(d0))};
  Word w;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 3; ++i) {
      int ray = rays[i];
      bool plus_to_minus = ((pass * 3 + i) % 2) == 0;  // positions 1,3,5 of six
      if (plus_to_minus)
        w.push_back(letter_of(PlaneGraph::alpha(ray), false));  // toward-v generator
      else
        w.push_back(letter_of(ray, true));  // inverse of away-from-v generator
    }
  return free_reduce(w);
}

EdgeGroup EdgeGroup::build(const PlaneGraph& g, long long max_rules, long long max_steps) {
  EdgeGroup eg;
  eg.graph = &g;
  std::vector<Word> relators;
  for (int v = 0; v < g.V(); ++v) relators.push_back(vertex_relator(g, v));
  std::vector<int> rank(2 * g.E());
  for (int i = 0; i < 2 * g.E(); ++i) rank[i] = i;
  eg.full = std::make_shared<Presentation>(2 * g.E(), std::move(relators), std::move(rank));
  eg.full->complete(max_rules, max_steps);
  return eg;
}

std::vector<long long> EdgeGroup::abelianize_edges(const Word& w) const {
  std::vector<long long> v(graph->E(), 0);
  for (Letter l : w) v[PlaneGraph::edge_of(gen_of(l))] += is_inverse(l) ? -1 : 1;
  return v;
}

TreeGroup TreeGroup::build(const PlaneGraph& g, const std::vector<int>& tree, int missed,
                           long long max_rules, long long max_steps) {
  TreeGroup tg;
  tg.graph = &g;
  tg.missed = missed;
  tg.tree_edges = tree;
  std::sort(tg.tree_edges.begin(), tg.tree_edges.end());
  tg.gen_of_dart.assign(2 * g.E(), -1);
  for (size_t i = 0; i < tg.tree_edges.size(); ++i) {
    int e = tg.tree_edges[i];
    tg.gen_of_dart[2 * e] = static_cast<int>(2 * i);
    tg.gen_of_dart[2 * e + 1] = static_cast<int>(2 * i + 1);
    tg.dart_of_gen.push_back(2 * e);
    tg.dart_of_gen.push_back(2 * e + 1);
  }
  std::vector<Word> relators;
  for (int v = 0; v < g.V(); ++v) {
    Word r = tg.project(EdgeGroup::vertex_relator(g, v));
    if (!r.empty()) relators.push_back(r);
  }
  int n = static_cast<int>(tg.dart_of_gen.size());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[i] = i;
  tg.pres = std::make_shared<Presentation>(n, std::move(relators), std::move(rank));
  tg.pres->complete(max_rules, max_steps);
  return tg;
}

Word TreeGroup::project(const Word& w) const {
  Word out;
  for (Letter l : w) {
    int gen = gen_of_dart[gen_of(l)];
    if (gen < 0) continue;
    Letter nl = letter_of(gen, is_inverse(l));
    if (!out.empty() && out.back() == letter_inv(nl))
      out.pop_back();
    else
      out.push_back(nl);
  }
  return out;
}

std::vector<long long> TreeGroup::abelianize_tree(const Word& w) const {
  std::vector<long long> v(tree_edges.size(), 0);
  for (Letter l : w) v[gen_of(l) / 2] += is_inverse(l) ? -1 : 1;
  return v;
}

FaceSign letter_start(const PlaneGraph& g, Letter l) {
  int d = gen_of(l);
  if (!is_inverse(l)) return {g.dart_face(d), 1};
  return {g.dart_face(PlaneGraph::alpha(d)), 0};
}

FaceSign letter_end(const PlaneGraph& g, Letter l) {
  int d = gen_of(l);
  if (!is_inverse(l)) return {g.dart_face(PlaneGraph::alpha(d)), 0};
  return {g.dart_face(d), 1};
}

Word half_vertex_loop(const PlaneGraph& g, int corner, int start_sign) {
  // counterclockwise from inside the corner wedge across the three rays
  int r1 = PlaneGraph::alpha(corner);
  int r2 = g.sigma(r1);
  int r3 = g.sigma(r2);
  Word w;
  int sign = start_sign;
  for (int ray : {r1, r2, r3}) {
    if (sign == 1)
      w.push_back(letter_of(PlaneGraph::alpha(ray), false));  // + -> - reads toward dart
    else
      w.push_back(letter_of(ray, true));  // - -> + reads inverse of away dart
    sign ^= 1;
  }
  return w;
}

std::optional<WordClassifier> WordClassifier::try_build(const PlaneGraph& g, long long max_rules,
                                                        long long max_steps) {
  for (int missed = 0; missed < g.V(); ++missed) {
    for (const auto& edges : g.trees_missing(missed)) {
      TreeGroup tg = TreeGroup::build(g, edges, missed, max_rules, max_steps);
      if (!tg.pres->completed()) continue;
      WordClassifier wc;
      wc.graph_ = &g;
      wc.tree_ = std::move(tg);
      // base point: the face left of the first dart at the missed vertex,
      // entered with sign +
      int base_dart = g.vertex_darts(missed)[0];
      int base_face = g.dart_face(base_dart);
      // connectors by BFS over faces across edges, tracking the sign
      wc.connector_.assign(g.F(), {});
      std::vector<int> seen(g.F(), 0);
      std::vector<std::pair<Word, int>> state(g.F());  // word, arriving sign
      std::deque<int> q{base_face};
      seen[base_face] = 1;
      state[base_face] = {Word{}, 1};
      while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int d : g.face_darts(f)) {
          int nf = g.dart_face(PlaneGraph::alpha(d));
          if (seen[nf]) continue;
          seen[nf] = 1;
          auto [w, s] = state[f];
          // crossing out of face(d) across d: with sign + this reads gen(d),
          // with sign - it reads gen(alpha d) inverse
          Word nw = w;
          if (s == 1)
            nw.push_back(letter_of(d, false));
          else
            nw.push_back(letter_of(PlaneGraph::alpha(d), true));
          state[nf] = {std::move(nw), s ^ 1};
          q.push_back(nf);
        }
      }
      for (int f = 0; f < g.F(); ++f) {
        auto [w, s] = state[f];
        wc.connector_[f][s] = w;
        // flip the arrival sign with a half loop around a corner of f
        int corner = g.face_darts(f)[0];
        wc.connector_[f][s ^ 1] = word_concat(w, half_vertex_loop(g, corner, s));
      }
      return wc;
    }
  }
  return std::nullopt;
}

bool WordClassifier::chained(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!(letter_end(*graph_, w[i]) == letter_start(*graph_, w[i + 1]))) return false;
  return true;
}

Word WordClassifier::key(const Word& w) const {
  if (w.empty()) return {};
  if (!chained(*&w))
    throw GroupError("NoDecisionProcedure",
                     "word is not a path reading and the full group has no confluent system");
  FaceSign a = letter_start(*graph_, w.front());
  FaceSign b = letter_end(*graph_, w.back());
  Word loop = connector_[a.face][a.sign];
  loop = word_concat(loop, w);
  loop = word_concat(loop, word_inverse(connector_[b.face][b.sign]));
  Word nf = tree_.pres->normal_form(tree_.project(loop));
  if (a == b && nf.empty()) return {};  // the identity loop
  Word key;
  key.push_back(1'000'000 + 2 * a.face + a.sign);
  key.push_back(1'000'000 + 2 * b.face + b.sign);
  for (Letter l : nf) key.push_back(l);
  return key;
}

}  // namespace pgdga
