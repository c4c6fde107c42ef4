#include "pgdga/commutative.hpp"

namespace pgdga {

CElement CElement::unit(int num_edges, Coeff c) {
  CElement e;
  e.add_term({std::vector<int>(num_edges, 0), {}}, std::move(c));
  return e;
}

CElement CElement::gen(int num_edges, const GenSym& s) {
  CElement e;
  e.add_term({std::vector<int>(num_edges, 0), {s}}, 1);
  return e;
}

void CElement::add_term(CMonomial m, Coeff c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.emplace(std::move(m), std::move(c));
  else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CElement operator+(const CElement& a, const CElement& b) {
  CElement e = a;
  for (const auto& [m, c] : b.terms_) e.add_term(m, c);
  return e;
}

CElement cmul(const CElement& a, const CElement& b) {
  CElement e;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      CMonomial m = ma;
      for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
      m.gens.insert(m.gens.end(), mb.gens.begin(), mb.gens.end());
      e.add_term(std::move(m), ca * cb);
    }
  return e;
}

const CElement& CDifferential::of(const GenSym& s) const {
  static const CElement zero;
  auto it = images.find(s);
  return it == images.end() ? zero : it->second;
}

CElement CDifferential::apply(const CElement& e) const {
  CElement out;
  for (const auto& [m, c] : e.terms()) {
    int sign = 1;
    for (size_t l = 0; l < m.gens.size(); ++l) {
      const CElement& ds = of(m.gens[l]);
      if (!ds.is_zero()) {
        CMonomial left{m.exps, {m.gens.begin(), m.gens.begin() + l}};
        CMonomial right{std::vector<int>(m.exps.size(), 0), {m.gens.begin() + l + 1, m.gens.end()}};
        CElement lhs;
        lhs.add_term(std::move(left), c * sign);
        CElement rhs;
        rhs.add_term(std::move(right), 1);
        out = out + cmul(cmul(lhs, ds), rhs);
      }
      sign *= (degree(m.gens[l]) % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

namespace {

// commutative reading of one thread monomial: sign and exponent vector
std::pair<int, std::vector<int>> c_thread(const PlaneGraph& g, const std::vector<int>& or_dart,
                                          int corner) {
  std::vector<int> exps(g.E(), 0);
  int r1 = PlaneGraph::alpha(corner);
  int r2 = g.sigma(r1);
  int r3 = g.sigma(r2);
  int sign = 1;
  int i = 0;
  for (int ray : {r1, r2, r3}) {
    int e = PlaneGraph::edge_of(ray);
    bool tw = ((PlaneGraph::alpha(ray)) & 1) == or_dart[e];
    bool middle = (i == 1);
    if (middle) {
      exps[e] += 1;
      if (!tw) sign = -sign;
    } else {
      exps[e] -= 1;
      if (tw) sign = -sign;
    }
    ++i;
  }
  return {sign, exps};
}

struct CMat {
  CElement m[2][2];
};

CMat cmat_mul(const CMat& a, const CMat& b) {
  CMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = cmul(a.m[i][0], b.m[0][j]) + cmul(a.m[i][1], b.m[1][j]);
  return r;
}

CMat c_event(const Garden& garden, const Event& ev) {
  const TriangleComplex& tc = *garden.tc;
  const PlaneGraph& g = *tc.g;
  const int E = g.E();
  CMat m;
  switch (ev.type) {
    case Event::EdgeCross: {
      int e = ev.index;
      bool positive = ((ev.from & 1) == garden.or_dart[e]);
      std::vector<int> plus(E, 0), minus(E, 0);
      plus[e] = 1;
      minus[e] = -1;
      if (positive) {
        m.m[0][1].add_term({minus, {}}, -1);  // -B^{-1}
        m.m[1][0].add_term({plus, {}}, 1);    // A
      } else {
        m.m[0][1].add_term({minus, {}}, 1);   // A^{-1}
        m.m[1][0].add_term({plus, {}}, -1);   // -B
      }
      break;
    }
    case Event::ThreadCross: {
      auto [sign, exps] = c_thread(g, garden.or_dart, ev.index);
      bool ccw = (ev.to == tc.L(ev.from));
      m.m[0][0] = CElement::unit(E);
      m.m[1][1] = CElement::unit(E);
      m.m[0][1].add_term({exps, {}}, (ccw ? 1 : -1) * sign);
      break;
    }
    case Event::CenterPass:
      m.m[0][1] = CElement::gen(E, face_gen(ev.index));
      break;
  }
  return m;
}

}  // namespace

CMatrix commutative_matrix_of_words(const Garden& garden, const Path& path) {
  const int E = garden.tc->g->E();
  CMat acc;
  acc.m[0][0] = CElement::unit(E);
  acc.m[1][1] = CElement::unit(E);
  for (const Event& ev : path) acc = cmat_mul(acc, c_event(garden, ev));
  CMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = acc.m[i][j];
  return out;
}

CDifferential commutative_differential(const Garden& garden) {
  const PlaneGraph& g = *garden.tc->g;
  CDifferential d;
  d.num_edges = g.E();
  for (int f = 0; f < g.F(); ++f) {
    CElement df;
    for (int corner : g.face_darts(f)) {
      auto [sign, exps] = c_thread(g, garden.or_dart, corner);
      df.add_term({exps, {}}, sign);
    }
    d.images[face_gen(f)] = df;
  }
  CMat dx;
  dx.m[0][0] = CElement::zero();
  for (int k = 0; k < garden.num_tines(); ++k) {
    CMat acc;
    acc.m[0][0] = CElement::unit(g.E());
    acc.m[1][1] = CElement::unit(g.E());
    for (const Event& ev : garden.tine_path(k)) acc = cmat_mul(acc, c_event(garden, ev));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) dx.m[i][j] = dx.m[i][j] + acc.m[i][j];
  }
  d.images[{GenKind::Z, 0}] = dx.m[0][0];
  d.images[{GenKind::W, 0}] = dx.m[0][1];
  d.images[{GenKind::Y, 0}] = dx.m[1][0];
  d.images[{GenKind::X, 0}] = dx.m[1][1];
  return d;
}

CElement abelianize_element(const Element& e, int num_edges) {
  CElement out;
  for (const auto& [m, c] : e.terms()) {
    CMonomial cm;
    cm.exps.assign(num_edges, 0);
    cm.gens = m.gens;
    for (const RingFactor& rf : m.rings)
      for (Letter l : rf.rep)
        cm.exps[PlaneGraph::edge_of(gen_of(l))] += is_inverse(l) ? -1 : 1;
    out.add_term(std::move(cm), c);
  }
  return out;
}

}  // namespace pgdga
