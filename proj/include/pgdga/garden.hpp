#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgdga/plane_graph.hpp"

namespace pgdga {

struct GardenError : std::runtime_error {
  std::string kind;  // InvalidIndex, NotIncident, ConstructionFailed, InvalidPath
  GardenError(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

// Triangle complex: cutting the sphere along the graph and the web leaves one
// triangle per dart. Triangle t sits in face dart_face(t); its S side is the
// edge of t, its L side the thread at head(t) (corner id t), its R side the
// thread at tail(t) (corner id prev_in_face(t)). Crossing L sides walks
// counterclockwise around the face center.
struct TriangleComplex {
  const PlaneGraph* g = nullptr;

  explicit TriangleComplex(const PlaneGraph& graph) : g(&graph) {}
  int count() const { return g->num_darts(); }
  int face(int t) const { return g->dart_face(t); }
  int S(int t) const { return PlaneGraph::alpha(t); }
  int L(int t) const { return g->next_in_face(t); }
  int R(int t) const { return g->prev_in_face(t); }
  int corner_L(int t) const { return t; }
  int corner_R(int t) const { return g->prev_in_face(t); }
};

struct Event {
  enum Type : uint8_t { EdgeCross, ThreadCross, CenterPass } type;
  int from = 0, to = 0;  // triangle ids
  int index = 0;         // edge id | corner id (dart) | face id

  friend bool operator==(const Event& a, const Event& b) {
    return a.type == b.type && a.from == b.from && a.to == b.to && a.index == b.index;
  }
};

using Path = std::vector<Event>;

Event edge_cross(const TriangleComplex& tc, int from_tri);          // across S
Event thread_cross_ccw(const TriangleComplex& tc, int from_tri);    // across L
Event thread_cross_cw(const TriangleComplex& tc, int from_tri);     // across R
Event center_pass(const TriangleComplex& tc, int tri_in, int tri_out);
Event reverse_event(const Event& e);
Path reverse_path(const Path& p);
bool events_inverse(const Event& a, const Event& b);

bool validate_path(const TriangleComplex& tc, const Path& p,
                   std::optional<int> start_tri = std::nullopt);

// cancels adjacent inverse crossings (the bigon moves) and slides
// edge-thread-edge corners of a vertex to the complementary thread-edge-thread
// form, which strictly lowers the number of edge crossings; idempotent
Path homotopy_reduce(const TriangleComplex& tc, Path p);

// full counterclockwise fan around the center of the face of `sector`,
// starting and ending in that sector
Path fan_loop_ccw(const TriangleComplex& tc, int sector);

// A garden in telescope normal form. Tine k for face f_k is
//   eta_{k-1} * reverse(tail_k) * CenterPass(f_k) * tail_k
// where eta_0 is empty and
//   eta_k = eta_{k-1} * reverse(tail_k) * fan_loop_ccw * tail_k.
// tail_k runs from the center-pass sector back to the base triangle. The
// seed is the pair (base triangle, cut before the first tine).
class Garden {
 public:
  struct Tine {
    int face = 0;
    int cp_sector = 0;  // triangle where the tine dives through the center
    Path tail;          // events from cp_sector back to the base triangle
  };

  const TriangleComplex* tc = nullptr;
  std::vector<int> or_dart;  // per edge, 0 or 1: which dart direction is positive
  int base_tri = 0;
  std::vector<Tine> tines;  // seed order
  bool unchecked_geometry = false;  // user-supplied gardens

  int num_tines() const { return static_cast<int>(tines.size()); }
  int seed_face() const { return tc->face(base_tri); }
  bool finite_type() const;  // seed-face tine first or last

  Path eta(int k) const;           // loop between tines k and k+1 (0..n)
  Path tine_path(int k) const;     // full crossing sequence of tine k
  Path connector(int k) const;     // center-to-center path between tines k, k+1

  Garden flip_orientation(int edge) const;
  Garden apply_move_V(int index) const;          // swap tines index, index+1
  Garden apply_move_V_inverse(int index) const;
  // push the seed across a side of the base triangle: 'L', 'R' (threads,
  // Move VI) or 'S' (edge, Move VII)
  Garden push_seed(char side) const;

  // serialization for reproducibility
  std::string serialize() const;
  static Garden deserialize(const TriangleComplex& tc, const std::string& text);
};

Garden canonical_garden(const TriangleComplex& tc, int base_tri,
                        const std::vector<int>& or_dart);

}  // namespace pgdga
