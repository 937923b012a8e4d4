#pragma once

#include "palin/budget.hpp"
#include "palin/word.hpp"

#include <cstdint>
#include <vector>

namespace palin {

// All palindromes of one length over one alphabet, ascending by integer
// encoding. Complete lists have exactly q^ceil(n/2) entries.
using PalindromeList = std::vector<Word>;

// Gap sequence between consecutive palindromes of length `length` listed in
// ascending numeric order. Always symmetric; prefix sums starting from 0
// decode to the full palindrome list.
struct DiffRepresentation {
    std::size_t length;
    Alphabet alphabet;
    std::vector<Value> diffs; // q^ceil(n/2) - 1 entries
};

// Mirror-extend a half word of length ceil(k/2) to the palindrome of length k
// it determines: u.reverse(u) for even k, the center symbol shared for odd k.
Word extend_to_palindrome(const Word& half, std::size_t target_length);

// Slide a ceil(k/2)-window over the De Bruijn word of that order and extend
// each window; yields every palindrome of length k exactly once.
PalindromeList palindromes_from_de_bruijn(std::size_t length, Alphabet a,
                                          const Budget& budget = {});

// {x.w.x : w in complete, x in A}, the complete list two longer. The input
// must be a complete list (silently wrong output would otherwise be possible,
// so incompleteness is rejected).
PalindromeList lift_palindromes(const PalindromeList& complete);

// The gap sequence for length n, built by the doubling recursion: interleave
// q-1 copies of q^k (n = 2k -> 2k+1) or of (q+1)q^k (n = 2k+1 -> 2k+2) around
// the previous row; bases n=1 -> q-1 copies of 1, n=2 -> q-1 copies of q+1.
DiffRepresentation diff_representation(std::size_t length, Alphabet a,
                                       const Budget& budget = {});

// Decode a gap sequence by successive addition beginning with 0. A running
// sum reaching q^n means the representation is malformed and is rejected.
PalindromeList palindromes_from_diffs(const DiffRepresentation& d);

// Independent oracle: extend every half word in ascending order.
PalindromeList enumerate_palindromes(std::size_t length, Alphabet a,
                                     const Budget& budget = {});

} // namespace palin
