#pragma once

#include <optional>

#include "pgdga/commutative.hpp"
#include "pgdga/garden.hpp"
#include "pgdga/words.hpp"

namespace pgdga {

struct TransformError : std::runtime_error {
  std::string kind;  // NotFiniteType, Unroutable, NotIncident
  TransformError(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

std::vector<GenSym> dga_generators(const PlaneGraph& g);
ElemMat generator_matrix();  // (z w ; y x)

// ring automorphism negating the generators of the flipped edges; a
// dg-isomorphism from the garden's differential to the flipped garden's
DgMap orientation_map(const Algebra& ctx, const PlaneGraph& g, const std::vector<int>& edges);

// Move V at index i swaps tines i, i+1. The returned map shifts the matrix of
// generators by the matrix of words of the connecting double-dip path and
// intertwines from the surgered garden's dg-algebra to the original's.
struct MoveVMap {
  DgMap from_new_to_old;
  DgMap from_old_to_new;
  ElemMat shift;
};
MoveVMap move_V_map(const Algebra& ctx, const Garden& garden, int index);

// Moves VI/VII across a side of the base triangle: conjugation of the
// generator matrix by the crossing's event matrix, from the original garden's
// dg-algebra to the pushed garden's.
DgMap push_seed_map(const Algebra& ctx, const Garden& garden, char side);

// Full twist (sigma_{g+2} ... sigma_1)^{g+3}: verifies that the twisted
// garden has the same differential and that the accumulated shift of X is
// exactly d of the stated primitive built from reversed tines.
struct FullTwistReport {
  bool differential_restored = false;
  bool shift_matches_reversed_tines = false;
  bool primitive_exact = false;
  bool ok() const {
    return differential_restored && shift_matches_reversed_tines && primitive_exact;
  }
};
FullTwistReport full_twist_check(const Algebra& ctx, const Garden& garden);

// ---- coefficient-ring machinery over a tree ----

// transverse signed path: crossing sequence plus the induced group word
struct SignedPathWord {
  int start_tri = 0;
  int start_sign = 1;
  Path events;
  Word word;  // edge letters only
};

// route through the triangle complex from the base triangle at the missed
// vertex of T to a triangle of the target face, never crossing tree edges
SignedPathWord canonical_path(const TriangleComplex& tc, const TreeGroup& tree, int target_tri,
                              int end_sign);
int base_triangle_at_missed_vertex(const TriangleComplex& tc, const TreeGroup& tree);

// beta element for (face, sign): word of connector_{T'}^{-1} * gamma^{-1} * connector_T
Word beta_element(const TriangleComplex& tc, const TreeGroup& t_from, const TreeGroup& t_to,
                  const SignedPathWord& gamma, int face, int sign);

// the dg-automorphism of the enlarged algebra for a tree change along gamma:
// conjugation of the coefficient ring by beta elements followed by the
// generator regeneration
DgMap tree_transition(const Algebra& ctx, const Garden& garden, const TriangleComplex& tc,
                      const TreeGroup& t_from, const TreeGroup& t_to,
                      const SignedPathWord& gamma);

// project a differential over the full group to one over the tree quotient
DifferentialSpec project_to_tree_dga(const Algebra& tree_ctx, const TreeGroup& tree,
                                     const DifferentialSpec& d);

// Destabilization of a finite-type garden's projected dg-algebra at (w, f_seed)
// after the elementary automorphism absorbing the rest of dw.
struct FiniteTypeModel {
  DifferentialSpec reduced;  // generators: finite faces plus x, y, z
  DgMap mu, mu_inverse;
  GenSym killed_face;
};
FiniteTypeModel finite_type_destabilize(const Algebra& ctx, const Garden& garden,
                                        const DifferentialSpec& d);

// abelianization comparison: Ab(d(s)) == d_comm(Ab(s)) for all generators
bool abelianization_square_commutes(const Algebra& ctx, const Garden& garden);

}  // namespace pgdga
