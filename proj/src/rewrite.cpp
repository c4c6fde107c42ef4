#include "pgdga/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace pgdga {

namespace {

std::optional<size_t> find_subword(const Word& needle, const Word& hay) {
  if (needle.empty() || needle.size() > hay.size()) return std::nullopt;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return i;
  return std::nullopt;
}

}  // namespace

size_t RewriteSystem::active_rule_count() const {
  size_t n = 0;
  for (const auto& r : rules_)
    if (r.active) ++n;
  return n;
}

void RewriteSystem::add_rule(Word lhs, Word rhs) {
  Letter last = lhs.empty() ? 0 : lhs.back();
  rules_.push_back({std::move(lhs), std::move(rhs), true});
  if (static_cast<size_t>(last) >= by_last_.size()) by_last_.resize(last + 1);
  by_last_[last].push_back(static_cast<int>(rules_.size()) - 1);
}

Word RewriteSystem::reduce(Word w) const {
  // Stack-based rewriting. out is irreducible at all times: rule matches can
  // only end at the most recently pushed letter, and prefixes of irreducible
  // words are irreducible, so one suffix check per pushed letter suffices.
  Word out;
  out.reserve(w.size());
  std::vector<Letter> input(w.rbegin(), w.rend());
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    if (static_cast<size_t>(out.back()) >= by_last_.size()) continue;
    for (int ri : by_last_[out.back()]) {
      const auto& r = rules_[ri];
      if (!r.active || r.lhs.size() > out.size()) continue;
      if (!std::equal(r.lhs.begin(), r.lhs.end(), out.end() - r.lhs.size())) continue;
      out.resize(out.size() - r.lhs.size());
      for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) input.push_back(*it);
      break;
    }
  }
  return out;
}

bool RewriteSystem::orient_and_add(Word a, Word b, std::vector<std::pair<Word, Word>>& pending) {
  a = reduce(std::move(a));
  b = reduce(std::move(b));
  if (a == b) return false;
  if (order_.less(a, b)) std::swap(a, b);
  // a is irreducible, so no active lhs occurs inside it; interreduction only
  // goes the other way: older rules that the new rule touches get requeued.
  for (auto& r : rules_) {
    if (!r.active) continue;
    if (find_subword(a, r.lhs) || find_subword(a, r.rhs)) {
      r.active = false;
      pending.emplace_back(r.lhs, r.rhs);
    }
  }
  add_rule(std::move(a), std::move(b));
  return true;
}

bool RewriteSystem::complete(long long max_rules, long long max_steps) {
  std::vector<std::pair<Word, Word>> pending;
  std::deque<size_t> fresh;  // rules whose critical pairs are not yet expanded
  for (size_t i = 0; i < rules_.size(); ++i) fresh.push_back(i);

  long long steps = 0;
  auto budget_ok = [&]() {
    return steps <= max_steps && static_cast<long long>(rules_.size()) <= max_rules;
  };

  while ((!pending.empty() || !fresh.empty()) && budget_ok()) {
    while (!pending.empty() && budget_ok()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      ++steps;
      if (orient_and_add(std::move(a), std::move(b), pending)) fresh.push_back(rules_.size() - 1);
    }
    if (!budget_ok() || fresh.empty()) break;
    size_t i = fresh.front();
    fresh.pop_front();
    if (!rules_[i].active) continue;
    // expand pairs against the rule set as of now; newly created rules get
    // their own turn when they pop from the queue
    const size_t snapshot = rules_.size();
    for (size_t j = 0; j < snapshot && budget_ok(); ++j) {
      if (!rules_[j].active || !rules_[i].active) continue;
      for (auto [p, q] : {std::make_pair(i, j), std::make_pair(j, i)}) {
        const Word l1 = rules_[p].lhs;
        const Word r1 = rules_[p].rhs;
        const Word l2 = rules_[q].lhs;
        const Word r2 = rules_[q].rhs;
        // containment of l2 strictly inside l1
        if (p != q && l2.size() < l1.size()) {
          if (auto pos = find_subword(l2, l1)) {
            ++steps;
            Word repl(l1.begin(), l1.begin() + *pos);
            repl.insert(repl.end(), r2.begin(), r2.end());
            repl.insert(repl.end(), l1.begin() + *pos + l2.size(), l1.end());
            pending.emplace_back(r1, repl);
          }
        }
        // proper overlaps: suffix of l1 meets prefix of l2
        size_t kmax = std::min(l1.size(), l2.size());
        for (size_t k = 1; k < kmax; ++k) {
          ++steps;
          if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
          Word x = r1;
          x.insert(x.end(), l2.begin() + k, l2.end());
          Word y(l1.begin(), l1.end() - k);
          y.insert(y.end(), r2.begin(), r2.end());
          pending.emplace_back(std::move(x), std::move(y));
        }
        if (p == q) break;
      }
    }
  }
  confluent_ = pending.empty() && fresh.empty() && budget_ok();
  return confluent_;
}

}  // namespace pgdga
