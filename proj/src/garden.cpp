#include "pgdga/garden.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace pgdga {

Event edge_cross(const TriangleComplex& tc, int from_tri) {
  return {Event::EdgeCross, from_tri, tc.S(from_tri), PlaneGraph::edge_of(from_tri)};
}

Event thread_cross_ccw(const TriangleComplex& tc, int from_tri) {
  return {Event::ThreadCross, from_tri, tc.L(from_tri), tc.corner_L(from_tri)};
}

Event thread_cross_cw(const TriangleComplex& tc, int from_tri) {
  return {Event::ThreadCross, from_tri, tc.R(from_tri), tc.corner_R(from_tri)};
}

Event center_pass(const TriangleComplex& tc, int tri_in, int tri_out) {
  return {Event::CenterPass, tri_in, tri_out, tc.face(tri_in)};
}

Event reverse_event(const Event& e) { return {e.type, e.to, e.from, e.index}; }

Path reverse_path(const Path& p) {
  Path out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reverse_event(*it));
  return out;
}

bool events_inverse(const Event& a, const Event& b) {
  return a.type != Event::CenterPass && b.type == a.type && a.index == b.index &&
         a.from == b.to && a.to == b.from;
}

bool validate_path(const TriangleComplex& tc, const Path& p, std::optional<int> start_tri) {
  int cur = -1;
  if (start_tri) cur = *start_tri;
  for (const Event& e : p) {
    if (cur != -1 && e.from != cur) return false;
    switch (e.type) {
      case Event::EdgeCross:
        if (e.to != tc.S(e.from) || e.index != PlaneGraph::edge_of(e.from)) return false;
        break;
      case Event::ThreadCross: {
        bool ccw = e.to == tc.L(e.from) && e.index == tc.corner_L(e.from);
        bool cw = e.to == tc.R(e.from) && e.index == tc.corner_R(e.from);
        if (!ccw && !cw) return false;
        break;
      }
      case Event::CenterPass:
        if (tc.face(e.from) != tc.face(e.to) || e.index != tc.face(e.from)) return false;
        break;
    }
    cur = e.to;
  }
  return true;
}

namespace {

void cancel_push(Path& out, const Event& e) {
  if (!out.empty() && events_inverse(out.back(), e))
    out.pop_back();
  else
    out.push_back(e);
}

Path cancel_all(const Path& p) {
  Path out;
  out.reserve(p.size());
  for (const Event& e : p) cancel_push(out, e);
  return out;
}

}  // namespace

Path homotopy_reduce(const TriangleComplex& tc, Path p) {
  p = cancel_all(p);
  bool changed = true;
  while (changed) {
    changed = false;
    // vertex slide: Edge,Thread,Edge pivoting around the thread's vertex
    // becomes Thread,Edge,Thread around the same vertex (one fewer edge
    // crossing is not guaranteed, so slide only the corner-cutting pattern
    // whose replacement cancels further; here we keep the involutive local
    // rewrite and rely on cancellation to shrink)
    for (size_t i = 0; i + 2 < p.size(); ++i) {
      if (p[i].type != Event::EdgeCross || p[i + 1].type != Event::ThreadCross ||
          p[i + 2].type != Event::EdgeCross)
        continue;
      int v = tc.g->corner_vertex(p[i + 1].index);
      // both crossed edges must be incident to v from the triangles adjacent
      // to the thread
      int a = p[i].from, d = p[i + 2].to;
      // complementary route around v: a and d are joined by thread, edge,
      // thread on the other side
      int t1 = -1, t2 = -1;
      // the thread at a incident to v
      for (int cand : {tc.corner_L(a), tc.corner_R(a)}) {
        if (tc.g->corner_vertex(cand) == v) t1 = cand;
      }
      for (int cand : {tc.corner_L(d), tc.corner_R(d)}) {
        if (tc.g->corner_vertex(cand) == v) t2 = cand;
      }
      if (t1 < 0 || t2 < 0) continue;
      int a2 = (tc.corner_L(a) == t1) ? tc.L(a) : tc.R(a);
      int d2 = (tc.corner_L(d) == t2) ? tc.L(d) : tc.R(d);
      if (tc.S(a2) != d2) continue;  // complementary edge must join them
      // only rewrite when it enables a cancellation next door (keeps the
      // reduction terminating and locally minimal)
      Event n1 = {Event::ThreadCross, a, a2, t1};
      Event n2 = {Event::EdgeCross, a2, d2, PlaneGraph::edge_of(a2)};
      Event n3 = {Event::ThreadCross, d2, d, t2};
      bool helps = false;
      if (i > 0 && events_inverse(p[i - 1], n1)) helps = true;
      if (i + 3 < p.size() && events_inverse(n3, p[i + 3])) helps = true;
      if (!helps) continue;
      p[i] = n1;
      p[i + 1] = n2;
      p[i + 2] = n3;
      p = cancel_all(p);
      changed = true;
      break;
    }
  }
  return p;
}

Path fan_loop_ccw(const TriangleComplex& tc, int sector) {
  Path out;
  int cur = sector;
  do {
    out.push_back(thread_cross_ccw(tc, cur));
    cur = tc.L(cur);
  } while (cur != sector);
  return out;
}

bool Garden::finite_type() const {
  if (tines.empty()) return false;
  return tines.front().face == seed_face() || tines.back().face == seed_face();
}

Path Garden::eta(int k) const {
  Path out;
  for (int j = 0; j < k; ++j) {
    Path leg = reverse_path(tines[j].tail);
    Path fan = fan_loop_ccw(*tc, tines[j].cp_sector);
    leg.insert(leg.end(), fan.begin(), fan.end());
    leg.insert(leg.end(), tines[j].tail.begin(), tines[j].tail.end());
    out.insert(out.end(), leg.begin(), leg.end());
  }
  return cancel_all(out);
}

Path Garden::tine_path(int k) const {
  Path out = eta(k);
  Path leg = reverse_path(tines[k].tail);
  out.insert(out.end(), leg.begin(), leg.end());
  out.push_back(center_pass(*tc, tines[k].cp_sector, tines[k].cp_sector));
  out.insert(out.end(), tines[k].tail.begin(), tines[k].tail.end());
  return cancel_all(out);
}

Path Garden::connector(int k) const {
  // center-to-center path between consecutive tines: the tail difference
  Path out = tines[k].tail;
  Path leg = reverse_path(tines[k + 1].tail);
  out.insert(out.end(), leg.begin(), leg.end());
  return cancel_all(out);
}

Garden Garden::flip_orientation(int edge) const {
  Garden g = *this;
  g.or_dart[edge] ^= 1;
  return g;
}

Garden Garden::apply_move_V(int index) const {
  if (index < 0 || index + 1 >= num_tines())
    throw GardenError("InvalidIndex", "move V index out of range");
  Garden g = *this;
  const Tine& a = tines[index];      // face f, leaves position index
  const Tine& b = tines[index + 1];  // face g, moves to position index
  // position index: face of b, tail_b * delta_a^{-1}
  Tine nb;
  nb.face = b.face;
  nb.cp_sector = b.cp_sector;
  nb.tail = b.tail;
  {
    Path rev = reverse_path(a.tail);
    Path fan = reverse_path(fan_loop_ccw(*tc, a.cp_sector));
    nb.tail.insert(nb.tail.end(), rev.begin(), rev.end());
    nb.tail.insert(nb.tail.end(), fan.begin(), fan.end());
    nb.tail.insert(nb.tail.end(), a.tail.begin(), a.tail.end());
    nb.tail = cancel_all(nb.tail);
  }
  g.tines[index] = nb;
  g.tines[index + 1] = a;
  return g;
}

Garden Garden::apply_move_V_inverse(int index) const {
  if (index < 0 || index + 1 >= num_tines())
    throw GardenError("InvalidIndex", "move V index out of range");
  Garden g = *this;
  const Tine& a = tines[index];
  const Tine& b = tines[index + 1];
  Tine na;  // face of a moves to position index+1 with tail_a * delta_b
  na.face = a.face;
  na.cp_sector = a.cp_sector;
  na.tail = a.tail;
  {
    Path rev = reverse_path(b.tail);
    Path fan = fan_loop_ccw(*tc, b.cp_sector);
    na.tail.insert(na.tail.end(), rev.begin(), rev.end());
    na.tail.insert(na.tail.end(), fan.begin(), fan.end());
    na.tail.insert(na.tail.end(), b.tail.begin(), b.tail.end());
    na.tail = cancel_all(na.tail);
  }
  g.tines[index] = b;
  g.tines[index + 1] = na;
  return g;
}

Garden Garden::push_seed(char side) const {
  int nb;
  switch (side) {
    case 'L': nb = tc->L(base_tri); break;
    case 'R': nb = tc->R(base_tri); break;
    case 'S': nb = tc->S(base_tri); break;
    default: throw GardenError("NotIncident", std::string("unknown side ") + side);
  }
  Event x;  // crossing from the old base into the new one
  if (side == 'L')
    x = thread_cross_ccw(*tc, base_tri);
  else if (side == 'R')
    x = thread_cross_cw(*tc, base_tri);
  else
    x = edge_cross(*tc, base_tri);
  Garden g = *this;
  g.base_tri = nb;
  for (auto& t : g.tines) {
    t.tail.push_back(x);
    t.tail = cancel_all(t.tail);
  }
  return g;
}

std::string Garden::serialize() const {
  std::ostringstream out;
  out << "base " << base_tri << "\norient";
  for (int o : or_dart) out << " " << o;
  out << "\n";
  for (const auto& t : tines) {
    out << "tine " << t.face << " " << t.cp_sector << " :";
    for (const Event& e : t.tail)
      out << " " << (e.type == Event::EdgeCross ? "E" : e.type == Event::ThreadCross ? "T" : "C")
          << e.from << "," << e.to << "," << e.index;
    out << "\n";
  }
  return out.str();
}

Garden Garden::deserialize(const TriangleComplex& tc, const std::string& text) {
  Garden g;
  g.tc = &tc;
  g.unchecked_geometry = true;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "base") {
      ls >> g.base_tri;
    } else if (kw == "orient") {
      int o;
      while (ls >> o) g.or_dart.push_back(o);
    } else if (kw == "tine") {
      Tine t;
      std::string colon, tok;
      ls >> t.face >> t.cp_sector >> colon;
      while (ls >> tok) {
        Event e;
        e.type = tok[0] == 'E' ? Event::EdgeCross : tok[0] == 'T' ? Event::ThreadCross : Event::CenterPass;
        if (sscanf(tok.c_str() + 1, "%d,%d,%d", &e.from, &e.to, &e.index) != 3)
          throw GardenError("InvalidPath", "bad event token " + tok);
        t.tail.push_back(e);
      }
      g.tines.push_back(std::move(t));
    }
  }
  return g;
}

Garden canonical_garden(const TriangleComplex& tc, int base_tri,
                        const std::vector<int>& or_dart) {
  const PlaneGraph& g = *tc.g;
  const int n = tc.count();
  // BFS tree over triangle adjacency, neighbor order S, L, R
  std::vector<int> parent(n, -2);
  std::vector<Event> parent_ev(n);
  std::vector<int> entry_of_face(g.F(), -1);
  std::deque<int> bfs{base_tri};
  parent[base_tri] = -1;
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop_front();
    if (entry_of_face[tc.face(t)] == -1) entry_of_face[tc.face(t)] = t;
    for (const Event& ev : {edge_cross(tc, t), thread_cross_ccw(tc, t), thread_cross_cw(tc, t)}) {
      if (parent[ev.to] == -2) {
        parent[ev.to] = t;
        parent_ev[ev.to] = ev;
        bfs.push_back(ev.to);
      }
    }
  }

  // Boundary walk of the thickened tree with ports swept in the cyclic order
  // (center, R, S, L) at every node; this is the rotation for which the
  // counterclockwise fan lassos, taken in walk order, compose to a loop that
  // bounds the empty far disk. The seed cut sits just before the center port
  // of the base triangle, so the base face is reported first and the garden
  // is finite-type.
  std::vector<int> face_order;
  static const char cyc[4] = {'c', 'R', 'S', 'L'};
  std::function<void(int, char)> walk = [&](int t, char entered_via) {
    int start = 0;
    for (int i = 0; i < 4; ++i)
      if (cyc[i] == entered_via) start = i;
    int first = (entered_via == '#') ? 0 : 1;
    int count = (entered_via == '#') ? 4 : 3;
    for (int k = first; k < first + count; ++k) {
      char port = cyc[(start + k) % 4];
      if (port == 'c') {
        if (entry_of_face[tc.face(t)] == t) face_order.push_back(tc.face(t));
        continue;
      }
      Event ev = port == 'S' ? edge_cross(tc, t)
                 : port == 'L' ? thread_cross_ccw(tc, t)
                               : thread_cross_cw(tc, t);
      int nb = ev.to;
      if (parent[nb] != t || !(parent_ev[nb] == ev)) continue;
      // crossing my L-side enters the neighbor through its R-side and
      // conversely; S is an involution
      char child_port = port == 'S' ? 'S' : port == 'L' ? 'R' : 'L';
      walk(nb, child_port);
    }
  };
  walk(base_tri, '#');  // root: all four ports starting at the center

  Garden garden;
  garden.tc = &tc;
  garden.or_dart = or_dart;
  garden.base_tri = base_tri;
  for (int f : face_order) {
    Garden::Tine t;
    t.face = f;
    t.cp_sector = entry_of_face[f];
    // tail: tree path from the entry triangle back to the base
    Path tail;
    int cur = t.cp_sector;
    while (cur != base_tri) {
      tail.push_back(reverse_event(parent_ev[cur]));
      cur = parent[cur];
    }
    t.tail = std::move(tail);
    garden.tines.push_back(std::move(t));
  }
  if (static_cast<int>(garden.tines.size()) != g.F())
    throw GardenError("ConstructionFailed", "walk missed a face");
  return garden;
}

}  // namespace pgdga
