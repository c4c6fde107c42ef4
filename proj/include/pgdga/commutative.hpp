#pragma once

#include <map>
#include <vector>

#include "pgdga/algebra.hpp"
#include "pgdga/garden.hpp"

namespace pgdga {

// Independent commutative model: coefficients are Laurent monomials in one
// variable per edge, pulled in front of the generator word. Deliberately
// shares no code with the noncommutative engine beyond the garden data.
struct CMonomial {
  std::vector<int> exps;  // per edge
  std::vector<GenSym> gens;
  friend bool operator<(const CMonomial& a, const CMonomial& b) {
    if (a.gens != b.gens) return a.gens < b.gens;
    return a.exps < b.exps;
  }
  friend bool operator==(const CMonomial& a, const CMonomial& b) {
    return a.gens == b.gens && a.exps == b.exps;
  }
};

class CElement {
 public:
  static CElement zero() { return {}; }
  static CElement unit(int num_edges, Coeff c = 1);
  static CElement gen(int num_edges, const GenSym& s);

  void add_term(CMonomial m, Coeff c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<CMonomial, Coeff>& terms() const { return terms_; }

  friend CElement operator+(const CElement& a, const CElement& b);
  friend bool operator==(const CElement& a, const CElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<CMonomial, Coeff> terms_;
};

CElement cmul(const CElement& a, const CElement& b);

struct CDifferential {
  std::map<GenSym, CElement> images;
  int num_edges = 0;
  const CElement& of(const GenSym& s) const;
  CElement apply(const CElement& e) const;
};

struct CMatrix {
  CElement m[2][2];
};
CMatrix commutative_matrix_of_words(const Garden& garden, const Path& path);

// The commutative differential computed directly from the garden.
CDifferential commutative_differential(const Garden& garden);

// Abelianization of a noncommutative element (coefficients through the
// forgetful map, then moved to the front).
CElement abelianize_element(const Element& e, int num_edges);

}  // namespace pgdga
