#include "pgdga/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace pgdga {

std::string gen_name(const GenSym& s) {
  switch (s.kind) {
    case GenKind::Face: return "f" + std::to_string(s.id + 1);
    case GenKind::X: return "x";
    case GenKind::Y: return "y";
    case GenKind::Z: return "z";
    case GenKind::W: return "w";
    case GenKind::Aux1: return "p" + std::to_string(s.id);
    case GenKind::Aux2: return "q" + std::to_string(s.id);
  }
  return "?";
}

Element Element::unit(Coeff c) {
  Element e;
  e.add_term(Monomial::one(), std::move(c));
  return e;
}

Element Element::ring(const Algebra& ctx, const Word& w, Coeff c) {
  Element e;
  e.add_term({{ctx.make_ring(w)}, {}}, std::move(c));
  return e;
}

Element Element::gen(const GenSym& s, Coeff c) {
  Element e;
  e.add_term({{RingFactor{}, RingFactor{}}, {s}}, std::move(c));
  return e;
}

void Element::add_term(Monomial m, Coeff c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element e;
  for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
  return e;
}

Element operator+(const Element& a, const Element& b) {
  Element e = a;
  for (const auto& [m, c] : b.terms_) e.add_term(m, c);
  return e;
}

Element operator-(const Element& a, const Element& b) {
  Element e = a;
  for (const auto& [m, c] : b.terms_) e.add_term(m, -c);
  return e;
}

Element Element::scaled(const Coeff& c) const {
  Element e;
  if (c == 0) return e;
  for (const auto& [m, k] : terms_) e.terms_.emplace(m, k * c);
  return e;
}

std::optional<int> Element::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = m.total_degree();
    if (!d)
      d = md;
    else if (*d != md)
      return std::nullopt;
  }
  return d;
}

std::string Element::to_string(const std::function<std::string(Letter)>& letter_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "[" << c.str() << "]";
    auto emit_ring = [&](const RingFactor& rf) {
      const Word& w = rf.rep;
      out << " ";
      if (w.empty()) {
        out << "1";
        return;
      }
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ".";
        out << letter_name(w[i]);
      }
    };
    emit_ring(m.rings[0]);
    for (size_t i = 0; i < m.gens.size(); ++i) {
      out << " * " << gen_name(m.gens[i]) << " *";
      emit_ring(m.rings[i + 1]);
    }
  }
  return out.str();
}

namespace {

Monomial mul_monomials(const Algebra& ctx, const Monomial& a, const Monomial& b) {
  Monomial m;
  m.gens = a.gens;
  m.gens.insert(m.gens.end(), b.gens.begin(), b.gens.end());
  m.rings.assign(a.rings.begin(), a.rings.end() - 1);
  m.rings.push_back(ctx.make_ring(word_concat(a.rings.back().rep, b.rings.front().rep)));
  m.rings.insert(m.rings.end(), b.rings.begin() + 1, b.rings.end());
  return m;
}

}  // namespace

Element mul(const Algebra& ctx, const Element& a, const Element& b) {
  Element e;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) e.add_term(mul_monomials(ctx, ma, mb), ca * cb);
  return e;
}

ElemMat ElemMat::identity() {
  ElemMat m;
  m.m[0][0] = Element::unit();
  m.m[1][1] = Element::unit();
  return m;
}

ElemMat ElemMat::zero() { return {}; }

ElemMat mul(const Algebra& ctx, const ElemMat& a, const ElemMat& b) {
  ElemMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = mul(ctx, a.m[i][0], b.m[0][j]) + mul(ctx, a.m[i][1], b.m[1][j]);
  return r;
}

ElemMat add(const ElemMat& a, const ElemMat& b) {
  ElemMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

ElemMat sub(const ElemMat& a, const ElemMat& b) {
  ElemMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

bool is_zero(const ElemMat& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!m.m[i][j].is_zero()) return false;
  return true;
}

const Element& DifferentialSpec::of(const GenSym& s) const {
  static const Element zero;
  auto it = images.find(s);
  return it == images.end() ? zero : it->second;
}

Element DifferentialSpec::apply(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    int sign = 1;  // (-1)^{deg of the prefix before the hit generator}
    for (size_t l = 0; l < m.gens.size(); ++l) {
      const Element& ds = of(m.gens[l]);
      if (!ds.is_zero()) {
        Monomial left{{m.rings.begin(), m.rings.begin() + l + 1},
                      {m.gens.begin(), m.gens.begin() + l}};
        Monomial right{{m.rings.begin() + l + 1, m.rings.end()},
                       {m.gens.begin() + l + 1, m.gens.end()}};
        Element lhs;
        lhs.add_term(std::move(left), c * sign);
        Element rhs;
        rhs.add_term(std::move(right), 1);
        out = out + mul(*ctx, mul(*ctx, lhs, ds), rhs);
      }
      sign *= (degree(m.gens[l]) % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

ElemMat DifferentialSpec::apply(const ElemMat& m) const {
  ElemMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = apply(m.m[i][j]);
  return r;
}

std::optional<GenSym> DifferentialSpec::square_nonzero_witness() const {
  for (const auto& [s, img] : images)
    if (!apply(img).is_zero()) return s;
  return std::nullopt;
}

RingMap RingMap::negate_edges(const PlaneGraph& g, const std::vector<int>& edges) {
  RingMap r;
  Step st;
  st.kind = Step::Negate;
  st.negate_gen.assign(2 * g.E(), 0);
  for (int e : edges) {
    st.negate_gen[2 * e] = 1;
    st.negate_gen[2 * e + 1] = 1;
  }
  r.steps.push_back(std::move(st));
  return r;
}

RingMap RingMap::conjugation(int num_gens, std::vector<Word> left, std::vector<Word> right) {
  RingMap r;
  Step st;
  st.kind = Step::Conjugate;
  st.negate_gen.assign(num_gens, 0);
  st.left = std::move(left);
  st.right = std::move(right);
  r.steps.push_back(std::move(st));
  return r;
}

std::pair<Coeff, Word> RingMap::apply(const Word& w) const {
  Coeff sign = 1;
  Word cur = w;
  for (const auto& st : steps) {
    if (st.kind == Step::Negate) {
      for (Letter l : cur)
        if (st.negate_gen[gen_of(l)]) sign = -sign;
    } else {
      Word next;
      for (Letter l : cur) {
        int g = gen_of(l);
        const Word& L = st.left[g];
        const Word& R = st.right[g];
        if (!is_inverse(l)) {
          next = word_concat(next, L);
          next.push_back(l);
          next = word_concat(next, R);
        } else {
          next = word_concat(next, word_inverse(R));
          next.push_back(l);
          next = word_concat(next, word_inverse(L));
        }
      }
      cur = std::move(next);
    }
  }
  return {sign, cur};
}

Element DgMap::apply(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element acc;
    auto [s0, w0] = ring.apply(m.rings[0].rep);
    acc = Element::ring(*ctx, w0, c * s0);
    for (size_t i = 0; i < m.gens.size(); ++i) {
      auto it = images.find(m.gens[i]);
      const Element img = it != images.end() ? it->second : Element::gen(m.gens[i]);
      acc = mul(*ctx, acc, img);
      auto [si, wi] = ring.apply(m.rings[i + 1].rep);
      acc = mul(*ctx, acc, Element::ring(*ctx, wi, si));
    }
    out = out + acc;
  }
  return out;
}

ElemMat DgMap::apply(const ElemMat& m) const {
  ElemMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = apply(m.m[i][j]);
  return r;
}

Element DgMap::of_gen(const GenSym& s) const {
  auto it = images.find(s);
  return it != images.end() ? it->second : Element::gen(s);
}

DgMap DgMap::identity(const Algebra& ctx, const std::vector<GenSym>& gens) {
  DgMap m;
  m.ctx = &ctx;
  for (const auto& s : gens) m.images[s] = Element::gen(s);
  return m;
}

DgMap compose(const DgMap& outer, const DgMap& inner) {
  DgMap r;
  r.ctx = outer.ctx;
  r.ring.steps = inner.ring.steps;
  r.ring.steps.insert(r.ring.steps.end(), outer.ring.steps.begin(), outer.ring.steps.end());
  for (const auto& [s, img] : inner.images) r.images[s] = outer.apply(img);
  // generators only the outer map moves
  for (const auto& [s, img] : outer.images)
    if (!r.images.count(s)) r.images[s] = img;
  return r;
}

std::pair<DgMap, DgMap> elementary_automorphism(const Algebra& ctx,
                                                const std::vector<GenSym>& gens, const GenSym& s,
                                                const Element& shift) {
  for (const auto& [m, c] : shift.terms())
    for (const auto& g : m.gens)
      if (g == s) throw AlgebraError("SelfReference", "shift mentions the shifted generator");
  DgMap fwd = DgMap::identity(ctx, gens);
  DgMap bwd = DgMap::identity(ctx, gens);
  fwd.images[s] = Element::gen(s) + shift;
  bwd.images[s] = Element::gen(s) - shift;
  return {fwd, bwd};
}

std::pair<DgMap, DgMap> regeneration(const Algebra& ctx, const std::map<GenSym, RegenUnit>& units,
                                     const std::vector<GenSym>& all_gens) {
  DgMap fwd = DgMap::identity(ctx, all_gens);
  DgMap bwd = DgMap::identity(ctx, all_gens);
  for (const auto& [s, u] : units) {
    Element us = Element::ring(ctx, u.u, u.sign_u);
    Element vs = Element::ring(ctx, u.v, u.sign_v);
    fwd.images[s] = mul(ctx, mul(ctx, us, Element::gen(s)), vs);
    Element usi = Element::ring(ctx, word_inverse(u.u), u.sign_u);  // signs are +-1
    Element vsi = Element::ring(ctx, word_inverse(u.v), u.sign_v);
    bwd.images[s] = mul(ctx, mul(ctx, usi, Element::gen(s)), vsi);
  }
  return {fwd, bwd};
}

bool regeneration_is_simple(const EdgeGroup& eg, const std::map<GenSym, RegenUnit>& units) {
  for (const auto& [s, u] : units) {
    auto uv = eg.abelianize_edges(word_concat(u.u, u.v));
    if (std::any_of(uv.begin(), uv.end(), [](long long x) { return x != 0; })) return false;
    if (u.sign_u * u.sign_v != 1 && u.sign_u * u.sign_v != -1) return false;
  }
  return true;
}

std::optional<GenSym> dg_homomorphism_witness(const DgMap& map, const DifferentialSpec& d_src,
                                              const DifferentialSpec& d_dst) {
  for (const auto& [s, img] : d_src.images) {
    Element lhs = map.apply(d_src.of(s));
    auto it = map.images.find(s);
    Element phi_s = it != map.images.end() ? it->second : Element::gen(s);
    Element rhs = d_dst.apply(phi_s);
    if (!(lhs == rhs)) return s;
  }
  return std::nullopt;
}

Stabilization stabilize(const DifferentialSpec& d, int aux_id) {
  Stabilization st;
  st.xp = {GenKind::Aux1, aux_id};
  st.yp = {GenKind::Aux2, aux_id};
  st.stabilized = d;
  st.stabilized.images[st.xp] = Element::zero();
  st.stabilized.images[st.yp] = Element::gen(st.xp);
  std::vector<GenSym> old_gens, new_gens;
  for (const auto& [s, img] : d.images) old_gens.push_back(s);
  new_gens = old_gens;
  new_gens.push_back(st.xp);
  new_gens.push_back(st.yp);
  st.inclusion = DgMap::identity(*d.ctx, old_gens);
  st.projection = DgMap::identity(*d.ctx, new_gens);
  st.projection.images[st.xp] = Element::zero();
  st.projection.images[st.yp] = Element::zero();
  return st;
}

DifferentialSpec destabilize(const DifferentialSpec& d, const GenSym& x1, const GenSym& y2) {
  if (!(d.of(y2) == Element::gen(x1)))
    throw AlgebraError("DestabilizationObstructed", "d(" + gen_name(y2) + ") != " + gen_name(x1));
  if (!d.of(x1).is_zero())
    throw AlgebraError("DestabilizationObstructed", "d(" + gen_name(x1) + ") != 0");
  for (const auto& [s, img] : d.images) {
    if (s == x1 || s == y2) continue;
    for (const auto& [m, c] : img.terms())
      for (const auto& g : m.gens)
        if (g == x1 || g == y2)
          throw AlgebraError("DestabilizationObstructed",
                             "d(" + gen_name(s) + ") mentions " + gen_name(g));
  }
  DifferentialSpec out;
  out.ctx = d.ctx;
  for (const auto& [s, img] : d.images)
    if (!(s == x1) && !(s == y2)) out.images[s] = img;
  return out;
}

Element apply_linear(const Element& e, const LinearRule& rule) {
  Element out;
  for (const auto& [m, c] : e.terms()) out = out + rule(m, c);
  return out;
}

bool check_chain_homotopy(const DgMap& phi, const DifferentialSpec& d, const LinearRule& psi,
                          const std::vector<Element>& samples, bool phi_minus_one) {
  for (const Element& a : samples) {
    Element lhs = phi_minus_one ? (phi.apply(a) - a) : (a - phi.apply(a));
    Element rhs = apply_linear(d.apply(a), psi) + d.apply(apply_linear(a, psi));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

LinearRule stabilization_homotopy(const Algebra& ctx, const GenSym& xp, const GenSym& yp) {
  const Algebra* ctxp = &ctx;
  return [ctxp, xp, yp](const Monomial& m, const Coeff& c) -> Element {
    long long count = 0;
    for (const auto& g : m.gens)
      if (g == xp || g == yp) ++count;
    if (count == 0) return Element::zero();
    Element sum;
    int sign = 1;
    for (size_t l = 0; l < m.gens.size(); ++l) {
      if (m.gens[l] == xp) {
        Monomial repl = m;
        repl.gens[l] = yp;
        Element t;
        t.add_term(repl, c * sign);
        sum = sum + t;
      }
      sign *= (degree(m.gens[l]) % 2 == 0) ? 1 : -1;
    }
    // divide exactly by the number of stabilized letters
    Element out;
    for (const auto& [mm, cc] : sum.terms()) {
      if (cc % count != 0)
        throw AlgebraError("InexactDivision", "homotopy division is not integral");
      out.add_term(mm, cc / count);
    }
    (void)ctxp;
    return out;
  };
}

}  // namespace pgdga
