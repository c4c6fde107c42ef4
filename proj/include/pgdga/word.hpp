#pragma once

#include <cstdint>
#include <vector>

namespace pgdga {

// Letters encode group generators and their inverses: generator g contributes
// letters 2g (g itself) and 2g+1 (its inverse).
using Letter = int32_t;
using Word = std::vector<Letter>;

inline Letter letter_of(int gen, bool inverse = false) { return 2 * gen + (inverse ? 1 : 0); }
inline int gen_of(Letter l) { return l >> 1; }
inline bool is_inverse(Letter l) { return l & 1; }
inline Letter letter_inv(Letter l) { return l ^ 1; }

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // freely reduced concatenation
std::vector<long long> exponent_vector(const Word& w, int num_gens);

}  // namespace pgdga
