#pragma once

#include <optional>
#include <vector>

#include "pgdga/algebra.hpp"
#include "pgdga/garden.hpp"
#include "pgdga/group.hpp"

namespace pgdga {

// Signed group-ring monomial: sign * word.
struct SignedWord {
  int sign = 1;
  Word word;
};

// Letter aliases induced by the garden orientation: the generator of dart d
// is A_e when d is the positive dart of e and B_e otherwise.
inline bool is_A_dart(const std::vector<int>& or_dart, int d) {
  return (d & 1) == or_dart[PlaneGraph::edge_of(d)];
}
inline int A_dart(const std::vector<int>& or_dart, int e) { return 2 * e + or_dart[e]; }
inline int B_dart(const std::vector<int>& or_dart, int e) { return 2 * e + 1 - or_dart[e]; }

// H_f(v) for a corner: the counterclockwise three-letter loop at the corner's
// vertex read from - to +, with a minus sign per B letter. The intrinsic sign
// works out to (-1)^{#edges pointing away from the vertex}.
SignedWord thread_monomial(const PlaneGraph& g, const std::vector<int>& or_dart, int corner);

// All sign conventions live here: the per-event 2x2 matrices of words.
//   EdgeCross, crossing left-to-right of the oriented edge:
//       (0 , -B^{-1} ; A , 0)         and right-to-left: (0 , A^{-1} ; -B , 0)
//   ThreadCross counterclockwise around the center: (1 , +H ; 0 , 1),
//       clockwise: (1 , -H ; 0 , 1)
//   CenterPass: (0 , f ; 0 , 0)
ElemMat event_matrix(const Algebra& ctx, const TriangleComplex& tc,
                     const std::vector<int>& or_dart, const Event& ev);

ElemMat matrix_of_words(const Algebra& ctx, const Garden& garden, const Path& path);

// Independent oracle: enumerate binary sequences along the path (state
// switches at every edge, 0->1 at centers, optionally 0->1 at threads) and
// sum their words directly.
Element direct_word_sum(const Algebra& ctx, const Garden& garden, const Path& path, int i, int j);
long long count_binary_sequences(const Garden& garden, const Path& path, int i, int j);

// Differential of the enlarged dg-algebra on generators:
//   d f = sum of H_f(v) over the corners of f
//   d (z w ; y x) = sum over tines of the matrix of words
DifferentialSpec differential(const Algebra& ctx, const Garden& garden);

// d^2 == 0 on every generator; returns the offending generator on failure.
std::optional<GenSym> d_squared_witness(const Algebra& ctx, const Garden& garden);
bool verify_d_squared(const Algebra& ctx, const Garden& garden);

// Letter namer for reports: A1, B1-, ...
std::function<std::string(Letter)> letter_namer(const std::vector<int>& or_dart);

}  // namespace pgdga
