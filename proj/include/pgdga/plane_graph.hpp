#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgdga {

struct GraphError : std::runtime_error {
  std::string kind;  // NotTrivalent, NotConnected, NotSpherical, MalformedPairing, ParseError
  GraphError(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

// Trivalent plane graph encoded as a rotation system.
//
// Darts are 0..2E-1; edge k owns darts 2k and 2k+1, and alpha(d) = d^1 is the
// edge involution. sigma is the counterclockwise dart order at each vertex.
// Faces are the orbits of d -> sigma^{-1}(alpha(d)), which walks every face
// boundary counterclockwise (face interior on the left of each dart).
//
// Corners are indexed by darts: corner(d) is the face-vertex incidence of
// face_of(d) at head(d), wedged between d and next_in_face(d). Indexing by
// dart disambiguates faces that meet a vertex more than once.
class PlaneGraph {
 public:
  static PlaneGraph from_rotations(int num_edges,
                                   const std::vector<std::vector<int>>& vertex_cycles,
                                   std::vector<std::string> vertex_names = {});
  // Text format, one vertex per line:  "vertex NAME: e3+ e1- e2+"
  // Dart eK+ is dart 2(K-1), eK- is dart 2(K-1)+1; lists are counterclockwise.
  static PlaneGraph parse(const std::string& text);
  static PlaneGraph parse_file(const std::string& path);

  int V() const { return static_cast<int>(vertex_cycle_.size()); }
  int E() const { return num_edges_; }
  int F() const { return static_cast<int>(face_cycle_.size()); }
  int num_darts() const { return 2 * num_edges_; }
  int genus() const { return (V() - 2) / 2; }

  static int alpha(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int next_in_face(int d) const { return sigma_inv_[d ^ 1]; }
  int prev_in_face(int d) const { return (sigma_[d]) ^ 1; }

  int dart_vertex(int d) const { return dart_vertex_[d]; }  // tail: dart points away
  int head(int d) const { return dart_vertex_[d ^ 1]; }
  int dart_face(int d) const { return dart_face_[d]; }

  const std::vector<int>& vertex_darts(int v) const { return vertex_cycle_[v]; }
  const std::vector<int>& face_darts(int f) const { return face_cycle_[f]; }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }

  // corner c (== dart id): at vertex head(c) in face dart_face(c)
  int corner_vertex(int c) const { return head(c); }
  int corner_face(int c) const { return dart_face(c); }
  // corners of face f in boundary order = face_darts(f)

  // All trees on exactly the vertex set V \ {missed}; each is a sorted edge
  // list of size 2g. Edges incident to the missed vertex cannot occur: a
  // 2g-edge acyclic subgraph covering the other 2g+1 vertices is connected
  // and cannot reach the missed vertex.
  std::vector<std::vector<int>> trees_missing(int missed) const;

  struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // loops allowed
  };
  Multigraph dual() const;

 private:
  int num_edges_ = 0;
  std::vector<int> sigma_, sigma_inv_, dart_vertex_, dart_face_;
  std::vector<std::vector<int>> vertex_cycle_, face_cycle_;
  std::vector<std::string> vertex_names_;
};

// Number of proper vertex k-colorings by deletion-contraction (0 if a loop
// is present). Exact for desk-scale graphs; memoized on canonical edge lists.
long long chromatic_count(const PlaneGraph::Multigraph& g, int k);

}  // namespace pgdga
