#include "pgdga/words.hpp"

namespace pgdga {

SignedWord thread_monomial(const PlaneGraph& g, const std::vector<int>& or_dart, int corner) {
  // The corner of face(corner) at v = head(corner) sits between the rays
  // corner+next and alpha(corner); the counterclockwise loop from inside the
  // corner crosses the rays alpha(corner), sigma(alpha(corner)),
  // sigma^2(alpha(corner)) in that order, switching - + - +.
  int v = g.corner_vertex(corner);
  int r1 = PlaneGraph::alpha(corner);
  int r2 = g.sigma(r1);
  int r3 = g.sigma(r2);
  (void)v;
  SignedWord out;
  int i = 0;
  for (int ray : {r1, r2, r3}) {
    int toward = PlaneGraph::alpha(ray);  // dart pointing into the vertex
    bool tw = is_A_dart(or_dart, toward);  // edge oriented toward the vertex?
    int e = PlaneGraph::edge_of(ray);
    bool middle = (i == 1);  // transition 1 -> 0 on the middle crossing
    if (middle) {
      // + -> - : positive frame reads A, negative frame reads -B
      if (tw)
        out.word.push_back(letter_of(A_dart(or_dart, e), false));
      else {
        out.word.push_back(letter_of(B_dart(or_dart, e), false));
        out.sign = -out.sign;
      }
    } else {
      // - -> + : positive frame reads -B^{-1}, negative frame reads A^{-1}
      if (tw) {
        out.word.push_back(letter_of(B_dart(or_dart, e), true));
        out.sign = -out.sign;
      } else {
        out.word.push_back(letter_of(A_dart(or_dart, e), true));
      }
    }
    ++i;
  }
  out.word = free_reduce(out.word);
  return out;
}

ElemMat event_matrix(const Algebra& ctx, const TriangleComplex& tc,
                     const std::vector<int>& or_dart, const Event& ev) {
  ElemMat m;
  switch (ev.type) {
    case Event::EdgeCross: {
      int e = ev.index;
      // crossing out of triangle ev.from leaves the face on the left of the
      // dart ev.from; the frame against the edge orientation is positive
      // exactly when ev.from is the A dart
      bool positive = is_A_dart(or_dart, ev.from);
      Word A = {letter_of(A_dart(or_dart, e), false)};
      Word Ai = {letter_of(A_dart(or_dart, e), true)};
      Word B = {letter_of(B_dart(or_dart, e), false)};
      Word Bi = {letter_of(B_dart(or_dart, e), true)};
      if (positive) {
        m.m[0][1] = Element::ring(ctx, Bi, -1);
        m.m[1][0] = Element::ring(ctx, A, 1);
      } else {
        m.m[0][1] = Element::ring(ctx, Ai, 1);
        m.m[1][0] = Element::ring(ctx, B, -1);
      }
      break;
    }
    case Event::ThreadCross: {
      SignedWord h = thread_monomial(*tc.g, or_dart, ev.index);
      bool ccw = (ev.to == tc.L(ev.from));
      int sign = (ccw ? 1 : -1) * h.sign;
      m.m[0][0] = Element::unit();
      m.m[1][1] = Element::unit();
      m.m[0][1] = Element::ring(ctx, h.word, sign);
      break;
    }
    case Event::CenterPass: {
      m.m[0][1] = Element::gen(face_gen(ev.index));
      break;
    }
  }
  return m;
}

ElemMat matrix_of_words(const Algebra& ctx, const Garden& garden, const Path& path) {
  ElemMat acc = ElemMat::identity();
  for (const Event& ev : path)
    acc = mul(ctx, acc, event_matrix(ctx, *garden.tc, garden.or_dart, ev));
  return acc;
}

namespace {

void enumerate_rec(const Algebra& ctx, const Garden& garden, const Path& path, size_t pos,
                   int state, int target, Element word, Element* sum, long long* count) {
  if (pos == path.size()) {
    if (state == target) {
      if (sum) *sum = *sum + word;
      if (count) ++*count;
    }
    return;
  }
  const Event& ev = path[pos];
  const TriangleComplex& tc = *garden.tc;
  switch (ev.type) {
    case Event::EdgeCross: {
      ElemMat m = event_matrix(ctx, tc, garden.or_dart, ev);
      int next = 1 - state;
      enumerate_rec(ctx, garden, path, pos + 1, next, target,
                    mul(ctx, word, m.m[state][next]), sum, count);
      break;
    }
    case Event::ThreadCross: {
      // constant branch
      enumerate_rec(ctx, garden, path, pos + 1, state, target, word, sum, count);
      if (state == 0) {  // switching branch, 0 -> 1 only
        ElemMat m = event_matrix(ctx, tc, garden.or_dart, ev);
        enumerate_rec(ctx, garden, path, pos + 1, 1, target, mul(ctx, word, m.m[0][1]), sum,
                      count);
      }
      break;
    }
    case Event::CenterPass: {
      if (state != 0) return;  // must switch 0 -> 1
      Element f = Element::gen(face_gen(ev.index));
      enumerate_rec(ctx, garden, path, pos + 1, 1, target, mul(ctx, word, f), sum, count);
      break;
    }
  }
}

}  // namespace

Element direct_word_sum(const Algebra& ctx, const Garden& garden, const Path& path, int i,
                        int j) {
  Element sum;
  enumerate_rec(ctx, garden, path, 0, i, j, Element::unit(), &sum, nullptr);
  return sum;
}

long long count_binary_sequences(const Garden& garden, const Path& path, int i, int j) {
  // counting needs no algebra context; reuse the walker with a null sum
  long long count = 0;
  std::function<void(size_t, int)> rec = [&](size_t pos, int state) {
    if (pos == path.size()) {
      if (state == j) ++count;
      return;
    }
    const Event& ev = path[pos];
    switch (ev.type) {
      case Event::EdgeCross: rec(pos + 1, 1 - state); break;
      case Event::ThreadCross:
        rec(pos + 1, state);
        if (state == 0) rec(pos + 1, 1);
        break;
      case Event::CenterPass:
        if (state == 0) rec(pos + 1, 1);
        break;
    }
  };
  rec(0, i);
  return count;
}

DifferentialSpec differential(const Algebra& ctx, const Garden& garden) {
  const PlaneGraph& g = *garden.tc->g;
  DifferentialSpec d;
  d.ctx = &ctx;
  for (int f = 0; f < g.F(); ++f) {
    Element df;
    for (int corner : g.face_darts(f)) {
      SignedWord h = thread_monomial(g, garden.or_dart, corner);
      df = df + Element::ring(ctx, h.word, h.sign);
    }
    d.images[face_gen(f)] = df;
  }
  ElemMat dx;
  for (int k = 0; k < garden.num_tines(); ++k)
    dx = add(dx, matrix_of_words(ctx, garden, garden.tine_path(k)));
  d.images[{GenKind::Z, 0}] = dx.m[0][0];
  d.images[{GenKind::W, 0}] = dx.m[0][1];
  d.images[{GenKind::Y, 0}] = dx.m[1][0];
  d.images[{GenKind::X, 0}] = dx.m[1][1];
  return d;
}

std::optional<GenSym> d_squared_witness(const Algebra& ctx, const Garden& garden) {
  DifferentialSpec d = differential(ctx, garden);
  return d.square_nonzero_witness();
}

bool verify_d_squared(const Algebra& ctx, const Garden& garden) {
  return !d_squared_witness(ctx, garden).has_value();
}

std::function<std::string(Letter)> letter_namer(const std::vector<int>& or_dart) {
  return [or_dart](Letter l) {
    int d = gen_of(l);
    int e = PlaneGraph::edge_of(d);
    std::string s = (is_A_dart(or_dart, d) ? "A" : "B") + std::to_string(e + 1);
    if (is_inverse(l)) s += "'";
    return s;
  };
}

}  // namespace pgdga
