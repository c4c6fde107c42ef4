#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgdga/plane_graph.hpp"
#include "pgdga/rewrite.hpp"
#include "pgdga/word.hpp"

namespace pgdga {

struct GroupError : std::runtime_error {
  std::string kind;  // CompletionBudgetExceeded, NoDecisionProcedure
  GroupError(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

// Finitely presented group with a shortlex rewriting system. Generators are
// abstract indices; callers fix their meaning.
class Presentation {
 public:
  Presentation(int num_gens, std::vector<Word> relators, std::vector<int> gen_rank);

  int num_gens() const { return num_gens_; }
  const std::vector<Word>& relators() const { return relators_; }

  // Knuth-Bendix completion. Returns false (and records the failure) if the
  // budget runs out; equality queries then throw NoDecisionProcedure.
  bool complete(long long max_rules = 20000, long long max_steps = 40'000'000);
  bool completed() const { return completed_; }

  Word normal_form(const Word& w) const;
  bool is_equal(const Word& u, const Word& v) const;
  bool is_trivial(const Word& w) const { return is_equal(w, {}); }

  std::vector<long long> abelianize(const Word& w) const {
    return exponent_vector(w, num_gens_);
  }

  const RewriteSystem& rewrite_system() const { return rs_; }

 private:
  int num_gens_;
  std::vector<Word> relators_;
  RewriteSystem rs_;
  bool completed_ = false;
};

// Coefficient-group machinery for a trivalent plane graph.
//
// Generators of the full group are oriented edges, one per dart: the
// generator of dart d is the crossing that traverses edge(d) left-to-right
// when the edge is directed along d. Its index is simply d. A garden
// orientation or_dart[e] in {0,1} fixes aliases A_e = gen(2e + or_dart[e])
// and B_e = gen(2e + 1 - or_dart[e]).
struct EdgeGroup {
  const PlaneGraph* graph = nullptr;
  std::shared_ptr<Presentation> full;  // all 2E generators, one relator per vertex

  static Word vertex_relator(const PlaneGraph& g, int v);
  static EdgeGroup build(const PlaneGraph& g, long long max_rules = 20000,
                         long long max_steps = 40'000'000);

  // abelianization to Z^E (forgets orientation)
  std::vector<long long> abelianize_edges(const Word& w) const;
};

// Quotient killing all generators of edges outside the tree. Generators are
// re-indexed: tree edge t (position i in tree list) gives generators 2i and
// 2i+1 with the same dart-direction convention.
struct TreeGroup {
  const PlaneGraph* graph = nullptr;
  int missed = 0;                       // the vertex the tree does not span
  std::vector<int> tree_edges;          // sorted edge ids, size 2g
  std::vector<int> gen_of_dart;         // dart -> tree generator index or -1
  std::vector<int> dart_of_gen;         // tree generator -> dart
  std::shared_ptr<Presentation> pres;   // 4g generators

  static TreeGroup build(const PlaneGraph& g, const std::vector<int>& tree, int missed,
                         long long max_rules = 20000, long long max_steps = 40'000'000);

  Word project(const Word& w) const;  // pi_T: kills non-tree letters, reindexes
  std::vector<long long> abelianize_tree(const Word& w_in_tree_gens) const;
};

// Signed-path endpoint of a letter: (face, sign). The generator of dart d
// crosses from (face(d), +) to (face(alpha d), -).
struct FaceSign {
  int face = -1;
  int sign = 1;  // 1 is +, 0 is -
  friend bool operator==(const FaceSign& a, const FaceSign& b) {
    return a.face == b.face && a.sign == b.sign;
  }
};
FaceSign letter_start(const PlaneGraph& g, Letter l);
FaceSign letter_end(const PlaneGraph& g, Letter l);

// Reads the group word of a signed loop around a vertex: the three-crossing
// half loop from (face, s) to (face, 1-s) counterclockwise around the chosen
// corner's vertex.
Word half_vertex_loop(const PlaneGraph& g, int corner, int start_sign);

// Decides equality of geometric words (readings of transverse signed paths)
// without a confluent system for the full group: conjugate by fixed
// connectors to a base point next to the vertex missed by a tree whose
// quotient did complete, then compare normal forms there. Sound and complete
// on chained words; rejects words that are not path readings.
class WordClassifier {
 public:
  static std::optional<WordClassifier> try_build(const PlaneGraph& g,
                                                 long long max_rules = 20000,
                                                 long long max_steps = 20'000'000);

  // canonical key of the class of w; empty word key for the identity loop
  Word key(const Word& w) const;
  bool chained(const Word& w) const;

  const TreeGroup& tree() const { return tree_; }

 private:
  const PlaneGraph* graph_ = nullptr;
  TreeGroup tree_;
  std::vector<std::array<Word, 2>> connector_;  // [face][sign]
};

}  // namespace pgdga
