#pragma once

#include <string>
#include <vector>

namespace curveplex {

/// A letter is a nonzero integer: +k is the k-th generator, -k its inverse.
/// Generators are numbered 1..2g with a_i = 2i-1 and b_i = 2i.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter inv(Letter x) { return -x; }

inline Letter gen_a(int i) { return 2 * i - 1; }
inline Letter gen_b(int i) { return 2 * i; }

/// "a1" -> 1, "B2" -> -4. Throws BadInput on malformed tokens or out-of-range index.
Letter parse_letter(const std::string& token, int genus);

/// Whitespace-separated letter tokens. Empty string gives the empty word.
Word parse_word(const std::string& text, int genus);

std::string letter_name(Letter x);
std::string word_name(const Word& w);

Word inverse(const Word& w);
Word rotated(const Word& w, int start);

/// Removes adjacent x x^-1 pairs until none remain.
Word free_reduce(Word w);

/// Free reduction plus cancellation across the seam of the cyclic word.
Word cyclic_free_reduce(Word w);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word concat(const Word& u, const Word& v);
Word power(const Word& w, int n);

/// Compact stable serialization usable as a hash key.
std::string word_key(const Word& w);

}  // namespace curveplex
