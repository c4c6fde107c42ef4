#pragma once

#include <memory>

#include "pgdga/garden.hpp"
#include "pgdga/group.hpp"
#include "pgdga/words.hpp"

namespace pgdga {

// One-stop setup: graph, triangle complex, coefficient-group machinery and
// the algebra context. The full group's rewriting system is attempted first;
// when it does not complete within budget the geometric classifier takes
// over ring canonicalization.
struct Engine {
  std::shared_ptr<PlaneGraph> graph;
  std::shared_ptr<TriangleComplex> tc;
  EdgeGroup eg;
  std::shared_ptr<WordClassifier> classifier;
  Algebra ctx;

  static Engine build(PlaneGraph g, long long kb_rules = 20000, long long kb_steps = 10'000'000) {
    Engine e;
    e.graph = std::make_shared<PlaneGraph>(std::move(g));
    e.tc = std::make_shared<TriangleComplex>(*e.graph);
    e.eg = EdgeGroup::build(*e.graph, kb_rules, kb_steps);
    if (!e.eg.full->completed()) {
      auto wc = WordClassifier::try_build(*e.graph, kb_rules, kb_steps);
      if (wc) e.classifier = std::make_shared<WordClassifier>(std::move(*wc));
    }
    e.ctx = Algebra{e.eg.full, e.classifier};
    return e;
  }

  Garden canonical(int base_tri = 0) const {
    return canonical_garden(*tc, base_tri, std::vector<int>(graph->E(), 0));
  }
};

}  // namespace pgdga
