#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgdga/group.hpp"
#include "pgdga/word.hpp"

namespace pgdga {

using Coeff = boost::multiprecision::cpp_int;

struct AlgebraError : std::runtime_error {
  std::string kind;  // DestabilizationObstructed, SelfReference, InexactDivision
  AlgebraError(std::string k, const std::string& what)
      : std::runtime_error(k + ": " + what), kind(std::move(k)) {}
};

// Generators of the free part of the algebra. Faces sit in degree 1, the four
// matrix generators in degree 2. Aux generators exist for stabilization
// tests and carry their own ids.
enum class GenKind : uint8_t { Face, X, Y, Z, W, Aux1, Aux2 };

struct GenSym {
  GenKind kind = GenKind::X;
  int id = 0;  // face id for Face, arbitrary for Aux*
  friend bool operator==(const GenSym& a, const GenSym& b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend bool operator<(const GenSym& a, const GenSym& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.id < b.id;
  }
};

inline GenSym face_gen(int f) { return {GenKind::Face, f}; }
inline int degree(const GenSym& s) {
  return (s.kind == GenKind::Face || s.kind == GenKind::Aux1) ? 1 : 2;
}
std::string gen_name(const GenSym& s);

// Ring factor: a representative word plus the canonical comparison key the
// context assigned to its class.
struct RingFactor {
  Word rep;
  Word key;
  friend bool operator<(const RingFactor& a, const RingFactor& b) { return a.key < b.key; }
  friend bool operator==(const RingFactor& a, const RingFactor& b) { return a.key == b.key; }
};

// Alternating word r0 s1 r1 ... s_k r_k; ring factors compare by canonical
// keys so that equal monomials collide as map keys.
struct Monomial {
  std::vector<RingFactor> rings;  // size gens.size() + 1
  std::vector<GenSym> gens;

  static Monomial one() { return {{RingFactor{}}, {}}; }
  int total_degree() const {
    int d = 0;
    for (const auto& s : gens) d += degree(s);
    return d;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.gens != b.gens) return a.gens < b.gens;
    return a.rings < b.rings;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.gens == b.gens && a.rings == b.rings;
  }
};

// Shared context: ring factors are canonicalized through the confluent
// system of the full group when one exists, and through the geometric
// classifier otherwise.
struct Algebra {
  std::shared_ptr<Presentation> group;
  std::shared_ptr<WordClassifier> classifier;

  RingFactor make_ring(const Word& w) const {
    Word red = free_reduce(w);
    if (group && group->completed()) {
      Word nf = group->normal_form(red);
      return {nf, nf};
    }
    if (classifier) return {red, classifier->key(red)};
    throw GroupError("NoDecisionProcedure", "no confluent system and no classifier");
  }
};

class Element {
 public:
  Element() = default;

  static Element zero() { return {}; }
  static Element unit(Coeff c = 1);
  static Element ring(const Algebra& ctx, const Word& w, Coeff c = 1);
  static Element gen(const GenSym& s, Coeff c = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }

  void add_term(Monomial m, Coeff c);

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  Element scaled(const Coeff& c) const;

  // degree of a homogeneous element; nullopt for 0 or mixed
  std::optional<int> homogeneous_degree() const;

  std::string to_string(const std::function<std::string(Letter)>& letter_name) const;

 private:
  std::map<Monomial, Coeff> terms_;
};

Element mul(const Algebra& ctx, const Element& a, const Element& b);

// 2x2 matrices over the algebra, used for matrices of words.
struct ElemMat {
  Element m[2][2];
  static ElemMat identity();
  static ElemMat zero();
};
ElemMat mul(const Algebra& ctx, const ElemMat& a, const ElemMat& b);
ElemMat add(const ElemMat& a, const ElemMat& b);
ElemMat sub(const ElemMat& a, const ElemMat& b);
bool is_zero(const ElemMat& m);

// Degree -1 differential given on generators; ring elements die.
struct DifferentialSpec {
  const Algebra* ctx = nullptr;
  std::map<GenSym, Element> images;

  const Element& of(const GenSym& s) const;
  Element apply(const Element& e) const;      // Leibniz with Koszul signs
  ElemMat apply(const ElemMat& m) const;      // entrywise
  // d^2 on every generator; returns offending generator on failure
  std::optional<GenSym> square_nonzero_witness() const;
};

// Ring maps are composites of edge negations and per-generator conjugations.
struct RingMap {
  struct Step {
    enum Kind { Negate, Conjugate } kind = Negate;
    std::vector<char> negate_gen;          // per group generator
    std::vector<Word> left, right;         // per group generator, Conjugate only
  };
  std::vector<Step> steps;

  static RingMap identity() { return {}; }
  static RingMap negate_edges(const PlaneGraph& g, const std::vector<int>& edges);
  static RingMap conjugation(int num_gens, std::vector<Word> left, std::vector<Word> right);

  std::pair<Coeff, Word> apply(const Word& w) const;  // sign and image word
  bool is_identity() const { return steps.empty(); }
};

// Graded algebra map: ring map plus generator images; degree 0.
struct DgMap {
  const Algebra* ctx = nullptr;
  RingMap ring;
  std::map<GenSym, Element> images;

  Element apply(const Element& e) const;
  ElemMat apply(const ElemMat& m) const;
  Element of_gen(const GenSym& s) const;  // image of a generator
  static DgMap identity(const Algebra& ctx, const std::vector<GenSym>& gens);
};

DgMap compose(const DgMap& outer, const DgMap& inner);  // outer(inner(.))

// elementary automorphism s -> s + shift (shift free of s); returns map and inverse
std::pair<DgMap, DgMap> elementary_automorphism(const Algebra& ctx,
                                                const std::vector<GenSym>& gens, const GenSym& s,
                                                const Element& shift);
// regeneration s -> u_s s v_s with group-word units (up to sign)
struct RegenUnit {
  Coeff sign_u = 1, sign_v = 1;
  Word u, v;
};
std::pair<DgMap, DgMap> regeneration(const Algebra& ctx,
                                     const std::map<GenSym, RegenUnit>& units,
                                     const std::vector<GenSym>& all_gens);
bool regeneration_is_simple(const EdgeGroup& eg, const std::map<GenSym, RegenUnit>& units);

// counterexample generator if the map fails to intertwine
std::optional<GenSym> dg_homomorphism_witness(const DgMap& map, const DifferentialSpec& d_src,
                                              const DifferentialSpec& d_dst);
inline bool check_dg_homomorphism(const DgMap& map, const DifferentialSpec& d_src,
                                  const DifferentialSpec& d_dst) {
  return !dg_homomorphism_witness(map, d_src, d_dst).has_value();
}

// stabilization: add degree-1 generator xp and degree-2 generator yp with
// d(yp) = xp, d(xp) = 0; returns new spec plus inclusion and projection maps
struct Stabilization {
  DifferentialSpec stabilized;
  DgMap inclusion;   // old -> new
  DgMap projection;  // new -> old (kills xp, yp)
  GenSym xp, yp;
};
Stabilization stabilize(const DifferentialSpec& d, int aux_id);

// removes the pair (x1 of degree 1, y2 of degree 2) with d(y2) = x1,
// d(x1) = 0, no other image mentioning either; throws DestabilizationObstructed
DifferentialSpec destabilize(const DifferentialSpec& d, const GenSym& x1, const GenSym& y2);

// chain homotopy checker: verifies lhs(a) == (Psi d + d Psi)(a) for each a,
// where lhs is (id - Phi) or (Phi - id) depending on `phi_minus_one`
using LinearRule = std::function<Element(const Monomial&, const Coeff&)>;
Element apply_linear(const Element& e, const LinearRule& rule);
bool check_chain_homotopy(const DgMap& phi, const DifferentialSpec& d, const LinearRule& psi,
                          const std::vector<Element>& samples, bool phi_minus_one);

// the canonical homotopy contracting a stabilization round trip; divides by
// the number of stabilized letters per monomial and insists on exactness
LinearRule stabilization_homotopy(const Algebra& ctx, const GenSym& xp, const GenSym& yp);

}  // namespace pgdga
