#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgdga/word.hpp"

namespace pgdga {

// Shortlex order on words over the letter alphabet; letter_rank maps a letter
// to its position in the chosen alphabet order.
struct Shortlex {
  std::vector<int> letter_rank;
  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return letter_rank[a[i]] < letter_rank[b[i]];
    return false;
  }
};

// String rewriting system over group letters. The free-reduction rules
// x x^{-1} -> empty are always present implicitly via reduce().
class RewriteSystem {
 public:
  struct Rule {
    Word lhs, rhs;
    bool active = true;
  };

  explicit RewriteSystem(Shortlex order = {}) : order_(std::move(order)) {}

  const Shortlex& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  size_t active_rule_count() const;

  void add_rule(Word lhs, Word rhs);
  Word reduce(Word w) const;

  // Knuth-Bendix completion; returns true when a confluent system was
  // reached within the budgets.
  bool complete(long long max_rules, long long max_steps);
  bool confluent() const { return confluent_; }

 private:
  bool orient_and_add(Word a, Word b, std::vector<std::pair<Word, Word>>& pending);

  Shortlex order_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_last_;  // active rule indices by last lhs letter
  bool confluent_ = false;
};

}  // namespace pgdga
