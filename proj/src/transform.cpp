#include "pgdga/transform.hpp"

#include <algorithm>
#include <deque>

namespace pgdga {

std::vector<GenSym> dga_generators(const PlaneGraph& g) {
  std::vector<GenSym> out;
  for (int f = 0; f < g.F(); ++f) out.push_back(face_gen(f));
  for (GenKind k : {GenKind::X, GenKind::Y, GenKind::Z, GenKind::W}) out.push_back({k, 0});
  return out;
}

ElemMat generator_matrix() {
  ElemMat x;
  x.m[0][0] = Element::gen({GenKind::Z, 0});
  x.m[0][1] = Element::gen({GenKind::W, 0});
  x.m[1][0] = Element::gen({GenKind::Y, 0});
  x.m[1][1] = Element::gen({GenKind::X, 0});
  return x;
}

namespace {

void set_matrix_images(DgMap& map, const ElemMat& img) {
  map.images[{GenKind::Z, 0}] = img.m[0][0];
  map.images[{GenKind::W, 0}] = img.m[0][1];
  map.images[{GenKind::Y, 0}] = img.m[1][0];
  map.images[{GenKind::X, 0}] = img.m[1][1];
}

}  // namespace

DgMap orientation_map(const Algebra& ctx, const PlaneGraph& g, const std::vector<int>& edges) {
  DgMap m = DgMap::identity(ctx, dga_generators(g));
  m.ring = RingMap::negate_edges(g, edges);
  return m;
}

MoveVMap move_V_map(const Algebra& ctx, const Garden& garden, int index) {
  if (index < 0 || index + 1 >= garden.num_tines())
    throw GardenError("InvalidIndex", "move V index out of range");
  const auto& a = garden.tines[index];
  const auto& b = garden.tines[index + 1];
  // double-dip path: around the first index+1 lassos, into the center of the
  // right tine, back, then into the center of the left tine and back
  Path prim = garden.eta(index + 1);
  Path leg = reverse_path(b.tail);
  prim.insert(prim.end(), leg.begin(), leg.end());
  prim.push_back(center_pass(*garden.tc, b.cp_sector, b.cp_sector));
  prim.insert(prim.end(), b.tail.begin(), b.tail.end());
  leg = reverse_path(a.tail);
  prim.insert(prim.end(), leg.begin(), leg.end());
  prim.push_back(center_pass(*garden.tc, a.cp_sector, a.cp_sector));
  prim.insert(prim.end(), a.tail.begin(), a.tail.end());

  MoveVMap out;
  out.shift = matrix_of_words(ctx, garden, prim);
  const PlaneGraph& g = *garden.tc->g;
  out.from_new_to_old = DgMap::identity(ctx, dga_generators(g));
  out.from_old_to_new = DgMap::identity(ctx, dga_generators(g));
  set_matrix_images(out.from_new_to_old, add(generator_matrix(), out.shift));
  set_matrix_images(out.from_old_to_new, sub(generator_matrix(), out.shift));
  return out;
}

DgMap push_seed_map(const Algebra& ctx, const Garden& garden, char side) {
  const TriangleComplex& tc = *garden.tc;
  Event fwd;  // old base -> new base
  switch (side) {
    case 'L': fwd = thread_cross_ccw(tc, garden.base_tri); break;
    case 'R': fwd = thread_cross_cw(tc, garden.base_tri); break;
    case 'S': fwd = edge_cross(tc, garden.base_tri); break;
    default: throw GardenError("NotIncident", std::string("unknown side ") + side);
  }
  ElemMat M = event_matrix(ctx, tc, garden.or_dart, reverse_event(fwd));  // new -> old
  ElemMat Minv = event_matrix(ctx, tc, garden.or_dart, fwd);
  DgMap map = DgMap::identity(ctx, dga_generators(*tc.g));
  set_matrix_images(map, mul(ctx, Minv, mul(ctx, generator_matrix(), M)));
  return map;
}

FullTwistReport full_twist_check(const Algebra& ctx, const Garden& garden) {
  FullTwistReport rep;
  const int n = garden.num_tines();
  Garden cur = garden;
  ElemMat shift = ElemMat::zero();
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < n - 1; ++i) {
      MoveVMap mv = move_V_map(ctx, cur, i);
      shift = add(shift, mv.shift);
      cur = cur.apply_move_V(i);
    }
  }
  DifferentialSpec d0 = differential(ctx, garden);
  DifferentialSpec d1 = differential(ctx, cur);
  rep.differential_restored = true;
  for (const auto& [s, img] : d0.images)
    if (!(d1.of(s) == img)) rep.differential_restored = false;

  ElemMat wbar = ElemMat::zero();
  ElemMat dx = ElemMat::zero();
  for (int k = 0; k < n; ++k) {
    wbar = add(wbar, matrix_of_words(ctx, garden, reverse_path(garden.tine_path(k))));
    dx = add(dx, matrix_of_words(ctx, garden, garden.tine_path(k)));
  }
  rep.shift_matches_reversed_tines = is_zero(sub(shift, mul(ctx, wbar, dx)));
  ElemMat prim = mul(ctx, wbar, generator_matrix());
  rep.primitive_exact = is_zero(sub(shift, d0.apply(prim)));
  return rep;
}

int base_triangle_at_missed_vertex(const TriangleComplex& tc, const TreeGroup& tree) {
  const PlaneGraph& g = *tc.g;
  for (int t = 0; t < tc.count(); ++t)
    if (g.dart_vertex(t) == tree.missed || g.head(t) == tree.missed) return t;
  throw TransformError("Unroutable", "no triangle at the missed vertex");
}

namespace {

// the corner of triangle t at vertex v (thread id bounding t at v)
int corner_at(const TriangleComplex& tc, int t, int v) {
  if (tc.g->head(t) == v) return tc.corner_L(t);
  if (tc.g->dart_vertex(t) == v) return tc.corner_R(t);
  throw TransformError("Unroutable", "triangle not incident to vertex");
}

Word word_along(const PlaneGraph& g, const Path& events, int start_sign) {
  Word w;
  int s = start_sign;
  for (const Event& e : events) {
    if (e.type != Event::EdgeCross) continue;
    if (s == 1)
      w.push_back(letter_of(e.from, false));
    else
      w.push_back(letter_of(PlaneGraph::alpha(e.from), true));
    s ^= 1;
  }
  return free_reduce(w);
}

int edge_crossings(const Path& p) {
  int n = 0;
  for (const Event& e : p)
    if (e.type == Event::EdgeCross) ++n;
  return n;
}

}  // namespace

SignedPathWord canonical_path(const TriangleComplex& tc, const TreeGroup& tree, int target_tri,
                              int end_sign) {
  const PlaneGraph& g = *tc.g;
  int base = base_triangle_at_missed_vertex(tc, tree);
  std::vector<char> in_tree(g.E(), 0);
  for (int e : tree.tree_edges) in_tree[e] = 1;
  std::vector<int> parent(tc.count(), -2);
  std::vector<Event> via(tc.count());
  std::deque<int> q{base};
  parent[base] = -1;
  while (!q.empty()) {
    int t = q.front();
    q.pop_front();
    for (const Event& ev : {thread_cross_ccw(tc, t), thread_cross_cw(tc, t), edge_cross(tc, t)}) {
      if (ev.type == Event::EdgeCross && in_tree[ev.index]) continue;
      if (parent[ev.to] != -2) continue;
      parent[ev.to] = t;
      via[ev.to] = ev;
      q.push_back(ev.to);
    }
  }
  if (parent[target_tri] == -2) throw TransformError("Unroutable", "target unreachable");
  Path p;
  for (int t = target_tri; t != base; t = parent[t]) p.push_back(via[t]);
  std::reverse(p.begin(), p.end());
  SignedPathWord out;
  out.start_tri = base;
  out.events = std::move(p);
  int parity = edge_crossings(out.events) % 2;
  out.start_sign = (parity == 0) ? end_sign : 1 - end_sign;
  out.word = word_along(g, out.events, out.start_sign);
  return out;
}

Word beta_element(const TriangleComplex& tc, const TreeGroup& t_from, const TreeGroup& t_to,
                  const SignedPathWord& gamma, int face, int sign) {
  const PlaneGraph& g = *tc.g;
  int target = g.face_darts(face)[0];
  SignedPathWord pf = canonical_path(tc, t_from, target, sign);
  SignedPathWord pt = canonical_path(tc, t_to, target, sign);
  int base_from = base_triangle_at_missed_vertex(tc, t_from);
  int base_to = base_triangle_at_missed_vertex(tc, t_to);
  int v_from = t_from.missed, v_to = t_to.missed;
  int gamma_end_sign = (edge_crossings(gamma.events) % 2 == 0) ? gamma.start_sign
                                                               : 1 - gamma.start_sign;
  // loop based at (face, sign):  pt^{-1} * gamma^{-1} * pf
  Word w = word_inverse(pt.word);
  if (pt.start_sign != gamma_end_sign)
    w = word_concat(w, half_vertex_loop(g, corner_at(tc, base_to, v_to), pt.start_sign));
  w = word_concat(w, word_inverse(gamma.word));
  if (gamma.start_sign != pf.start_sign)
    w = word_concat(w, half_vertex_loop(g, corner_at(tc, base_from, v_from), gamma.start_sign));
  w = word_concat(w, pf.word);
  return w;
}

DgMap tree_transition(const Algebra& ctx, const Garden& garden, const TriangleComplex& tc,
                      const TreeGroup& t_from, const TreeGroup& t_to,
                      const SignedPathWord& gamma) {
  const PlaneGraph& g = *tc.g;
  // beta elements for every (face, sign)
  std::vector<std::array<Word, 2>> beta(g.F());
  for (int f = 0; f < g.F(); ++f)
    for (int s = 0; s < 2; ++s) beta[f][s] = beta_element(tc, t_from, t_to, gamma, f, s);

  // ring conjugation: the generator of dart d runs from (face(d), +) to
  // (face(alpha d), -)
  std::vector<Word> left(2 * g.E()), right(2 * g.E());
  for (int d = 0; d < 2 * g.E(); ++d) {
    left[d] = beta[g.dart_face(d)][1];
    right[d] = word_inverse(beta[g.dart_face(PlaneGraph::alpha(d))][0]);
  }
  DgMap map = DgMap::identity(ctx, dga_generators(g));
  map.ring = RingMap::conjugation(2 * g.E(), std::move(left), std::move(right));

  int fs = garden.seed_face();
  auto conj = [&](const GenSym& s, const Word& u, const Word& v) {
    map.images[s] = mul(ctx, mul(ctx, Element::ring(ctx, u), Element::gen(s)),
                        Element::ring(ctx, word_inverse(v)));
  };
  for (int f = 0; f < g.F(); ++f) conj(face_gen(f), beta[f][0], beta[f][1]);
  conj({GenKind::X, 0}, beta[fs][1], beta[fs][1]);
  conj({GenKind::Y, 0}, beta[fs][1], beta[fs][0]);
  conj({GenKind::Z, 0}, beta[fs][0], beta[fs][0]);
  conj({GenKind::W, 0}, beta[fs][0], beta[fs][1]);
  return map;
}

DifferentialSpec project_to_tree_dga(const Algebra& tree_ctx, const TreeGroup& tree,
                                     const DifferentialSpec& d) {
  DifferentialSpec out;
  out.ctx = &tree_ctx;
  for (const auto& [s, img] : d.images) {
    Element e;
    for (const auto& [m, c] : img.terms()) {
      Monomial nm;
      nm.gens = m.gens;
      for (const auto& rf : m.rings) nm.rings.push_back(tree_ctx.make_ring(tree.project(rf.rep)));
      e.add_term(std::move(nm), c);
    }
    out.images[s] = e;
  }
  return out;
}

FiniteTypeModel finite_type_destabilize(const Algebra& ctx, const Garden& garden,
                                        const DifferentialSpec& d) {
  if (!garden.finite_type())
    throw TransformError("NotFiniteType", "seed-face tine is neither first nor last");
  GenSym fg = face_gen(garden.seed_face());
  GenSym w = {GenKind::W, 0};
  Element rest = d.of(w) - Element::gen(fg);
  for (const auto& [m, c] : rest.terms())
    for (const auto& s : m.gens)
      if (s == fg || s == w)
        throw TransformError("NotFiniteType", "dw is not f + terms free of f and w");
  FiniteTypeModel out;
  std::vector<GenSym> gens;
  for (const auto& [s, img] : d.images) gens.push_back(s);
  auto [mu, mu_inv] = elementary_automorphism(ctx, gens, fg, -rest);
  out.mu = mu;
  out.mu_inverse = mu_inv;
  out.killed_face = fg;
  // conjugated differential mu . d . mu^{-1}
  DifferentialSpec conj;
  conj.ctx = d.ctx;
  for (const auto& [s, img] : d.images) conj.images[s] = mu.apply(d.apply(mu_inv.of_gen(s)));
  out.reduced = destabilize(conj, fg, w);
  return out;
}

bool abelianization_square_commutes(const Algebra& ctx, const Garden& garden) {
  DifferentialSpec d = differential(ctx, garden);
  CDifferential cd = commutative_differential(garden);
  int E = garden.tc->g->E();
  for (const auto& [s, img] : d.images)
    if (!(abelianize_element(img, E) == cd.of(s))) return false;
  return true;
}

}  // namespace pgdga
