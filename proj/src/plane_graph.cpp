#include "pgdga/plane_graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pgdga {

PlaneGraph PlaneGraph::from_rotations(int num_edges,
                                      const std::vector<std::vector<int>>& vertex_cycles,
                                      std::vector<std::string> vertex_names) {
  PlaneGraph g;
  g.num_edges_ = num_edges;
  const int nd = 2 * num_edges;
  g.sigma_.assign(nd, -1);
  g.sigma_inv_.assign(nd, -1);
  g.dart_vertex_.assign(nd, -1);
  g.vertex_cycle_ = vertex_cycles;

  for (int v = 0; v < static_cast<int>(vertex_cycles.size()); ++v) {
    const auto& cyc = vertex_cycles[v];
    if (cyc.size() != 3)
      throw GraphError("NotTrivalent", "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(cyc.size()));
    for (size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      if (d < 0 || d >= nd) throw GraphError("MalformedPairing", "dart id out of range");
      if (g.dart_vertex_[d] != -1)
        throw GraphError("MalformedPairing", "dart " + std::to_string(d) + " used twice");
      g.dart_vertex_[d] = v;
      g.sigma_[d] = cyc[(i + 1) % cyc.size()];
    }
  }
  for (int d = 0; d < nd; ++d) {
    if (g.dart_vertex_[d] == -1)
      throw GraphError("MalformedPairing", "dart " + std::to_string(d) + " unused");
    g.sigma_inv_[g.sigma_[d]] = d;
  }

  // connectivity over darts via sigma and alpha
  {
    std::vector<char> seen(nd, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int e : {g.sigma_[d], d ^ 1})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != nd)
      throw GraphError("NotConnected", "rotation system is not connected");
  }

  // faces: orbits of next_in_face
  g.dart_face_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (g.dart_face_[d] != -1) continue;
    int f = static_cast<int>(g.face_cycle_.size());
    g.face_cycle_.emplace_back();
    int cur = d;
    do {
      g.dart_face_[cur] = f;
      g.face_cycle_[f].push_back(cur);
      cur = g.sigma_inv_[cur ^ 1];
    } while (cur != d);
  }

  int euler = g.V() - g.E() + g.F();
  if (euler != 2)
    throw GraphError("NotSpherical", "Euler characteristic is " + std::to_string(euler));

  if (vertex_names.empty()) {
    for (int v = 0; v < g.V(); ++v) vertex_names.push_back("v" + std::to_string(v + 1));
  }
  g.vertex_names_ = std::move(vertex_names);
  return g;
}

PlaneGraph PlaneGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> cycles;
  std::vector<std::string> names;
  int max_edge = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "vertex") throw GraphError("ParseError", where + ": expected 'vertex'");
    std::string name;
    if (!(ls >> name)) throw GraphError("ParseError", where + ": missing vertex name");
    if (!name.empty() && name.back() == ':')
      name.pop_back();
    else {
      std::string colon;
      if (!(ls >> colon) || colon != ":")
        throw GraphError("ParseError", where + ": missing ':'");
    }
    std::vector<int> cyc;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() < 3 || tok[0] != 'e' || (tok.back() != '+' && tok.back() != '-'))
        throw GraphError("ParseError", where + ": bad dart token '" + tok + "'");
      int k = 0;
      try {
        k = std::stoi(tok.substr(1, tok.size() - 2));
      } catch (...) {
        throw GraphError("ParseError", where + ": bad edge number in '" + tok + "'");
      }
      if (k <= 0) throw GraphError("ParseError", where + ": edge numbers start at 1");
      max_edge = std::max(max_edge, k);
      cyc.push_back(2 * (k - 1) + (tok.back() == '-' ? 1 : 0));
    }
    cycles.push_back(std::move(cyc));
    names.push_back(name);
  }
  if (cycles.empty()) throw GraphError("ParseError", "no vertex lines found");
  return from_rotations(max_edge, cycles, names);
}

PlaneGraph PlaneGraph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("ParseError", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<std::vector<int>> PlaneGraph::trees_missing(int missed) const {
  std::vector<int> usable;
  for (int e = 0; e < E(); ++e) {
    int u = dart_vertex(2 * e), w = dart_vertex(2 * e + 1);
    if (u != missed && w != missed) usable.push_back(e);
  }
  const int need = 2 * genus();
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  // union-find over the 2g+1 spanned vertices
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(pick.size()) == need) {
      std::vector<int> parent(V());
      for (int v = 0; v < V(); ++v) parent[v] = v;
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int e : pick) {
        int a = find(dart_vertex(2 * e)), b = find(dart_vertex(2 * e + 1));
        if (a == b) return;  // cycle
        parent[a] = b;
      }
      int root = -1, covered = 0;
      for (int v = 0; v < V(); ++v) {
        if (v == missed) continue;
        ++covered;
        int r = find(v);
        if (root == -1) root = r;
        if (r != root) return;  // disconnected
      }
      if (covered == V() - 1) out.push_back(pick);
      return;
    }
    for (size_t i = from; i < usable.size(); ++i) {
      pick.push_back(usable[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  if (need == 0) {
    out.push_back({});
    return out;
  }
  rec(0);
  return out;
}

PlaneGraph::Multigraph PlaneGraph::dual() const {
  Multigraph mg;
  mg.n = F();
  for (int e = 0; e < E(); ++e) mg.edges.emplace_back(dart_face(2 * e), dart_face(2 * e + 1));
  return mg;
}

namespace {

// canonical key for memoization: n plus sorted normalized simple edge list
std::string canon_key(int n, std::vector<std::pair<int, int>> edges, int k) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::string s = std::to_string(n) + "|" + std::to_string(k) + "|";
  for (auto& e : edges) s += std::to_string(e.first) + "," + std::to_string(e.second) + ";";
  return s;
}

long long chromatic_rec(int n, std::vector<std::pair<int, int>> edges, int k,
                        std::map<std::string, long long>& memo) {
  for (auto& e : edges) {
    if (e.first == e.second) return 0;  // loop
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= k;
    return r;
  }
  std::string key = canon_key(n, edges, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  auto [a, b] = edges.back();
  std::vector<std::pair<int, int>> del(edges.begin(), edges.end() - 1);
  // contract b into a, relabel n-1 down
  std::vector<std::pair<int, int>> con;
  for (auto [x, y] : del) {
    if (x == b) x = a;
    if (y == b) y = a;
    if (x > b) --x;
    if (y > b) --y;
    con.emplace_back(x, y);
  }
  long long r = chromatic_rec(n, del, k, memo) - chromatic_rec(n - 1, con, k, memo);
  memo[key] = r;
  return r;
}

}  // namespace

long long chromatic_count(const PlaneGraph::Multigraph& g, int k) {
  if (k <= 0) return 0;
  std::map<std::string, long long> memo;
  return chromatic_rec(g.n, g.edges, k, memo);
}

}  // namespace pgdga
