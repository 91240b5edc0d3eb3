#pragma once

#include <string>
#include <vector>

namespace stt {

using Letter = int;
using Word = std::vector<Letter>;

// Digits when every letter is a single digit, comma-separated otherwise.
// Empty word prints as "e".
std::string show_word(const Word& w);

// Accepts "0110" (digit form) or "0,1,1,0"; letters must be < n.
Word parse_word(const std::string& s, int n);

Word lcp(const Word& a, const Word& b);
bool is_prefix(const Word& p, const Word& w);

// Position of a fixed-width block in the radix-n enumeration, and back.
long long block_index(const Word& block, int n);
Word block_at(long long index, int n, int width);

Word rotate_left(const Word& w, std::size_t r);
Word least_rotation(const Word& w);

// Shortest u with w = u^m; a word is prime when it equals its root.
Word primitive_root(const Word& w);
bool is_prime_word(const Word& w);

// Canonical representative of the cyclic word w generates: least rotation of
// the primitive root. necklace_of("0101") == "01".
Word necklace_of(const Word& w);

std::vector<Word> all_words(int n, int len);

// All prime necklaces of exactly the given length, sorted.
std::vector<Word> prime_necklaces(int n, int len);

// True modulus, non-negative for negative a.
long long mod_floor(long long a, long long m);

}  // namespace stt
