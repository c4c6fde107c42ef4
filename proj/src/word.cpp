#include "pgdga/word.hpp"

namespace pgdga {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == letter_inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inv(*it));
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  for (Letter l : b) {
    if (!out.empty() && out.back() == letter_inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<long long> exponent_vector(const Word& w, int num_gens) {
  std::vector<long long> v(num_gens, 0);
  for (Letter l : w) v[gen_of(l)] += is_inverse(l) ? -1 : 1;
  return v;
}

}  // namespace pgdga
