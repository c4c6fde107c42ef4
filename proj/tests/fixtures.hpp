#pragma once

#include <string>

// Shared rotation-system fixtures. Dart eK+ is dart 2(K-1), eK- is 2(K-1)+1;
// per-vertex lists are counterclockwise.
namespace fixtures {

// two vertices joined by three parallel edges
inline const std::string theta =
    "vertex u: e1+ e3+ e2+\n"
    "vertex v: e1- e2- e3-\n";

// K4 drawn with vertex 1 in the middle of triangle 2,3,4
inline const std::string k4 =
    "vertex p1: e1+ e2+ e3+\n"
    "vertex p2: e4+ e1- e5+\n"
    "vertex p3: e6+ e2- e4-\n"
    "vertex p4: e5- e3- e6-\n";

// triangular prism: inner triangle 1,2,3; outer triangle 4,5,6
// edges: e1=12 e2=23 e3=31 e4=45 e5=56 e6=64 e7=14 e8=25 e9=36
inline const std::string prism =
    "vertex q1: e7+ e1+ e3-\n"
    "vertex q2: e2+ e1- e8+\n"
    "vertex q3: e3+ e2- e9+\n"
    "vertex q4: e4+ e7- e6-\n"
    "vertex q5: e5+ e8- e4-\n"
    "vertex q6: e6+ e9- e5-\n";

// cube graph (genus 3): outer square 1..4, inner square 5..8, rungs
// e1=12 e2=23 e3=34 e4=41 e5=56 e6=67 e7=78 e8=85 r: e9=15 e10=26 e11=37 e12=48
inline const std::string cube =
    "vertex c1: e1+ e9+ e4-\n"
    "vertex c2: e2+ e10+ e1-\n"
    "vertex c3: e3+ e11+ e2-\n"
    "vertex c4: e4+ e12+ e3-\n"
    "vertex c5: e5+ e8- e9-\n"
    "vertex c6: e6+ e5- e10-\n"
    "vertex c7: e7+ e6- e11-\n"
    "vertex c8: e8+ e7- e12-\n";

}  // namespace fixtures
