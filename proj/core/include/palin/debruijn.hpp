#pragma once

#include "palin/budget.hpp"
#include "palin/word.hpp"

namespace palin {

// A linearized De Bruijn word: the cyclic sequence followed by a copy of its
// first k-1 symbols, so a width-k window sliding over `word` sees every
// length-k word over the alphabet exactly once. |word| = q^k + k - 1.
struct DeBruijnWord {
    Word word;
    int order;
};

// Greedy prefer-smallest-symbol construction (equivalently, concatenation of
// the Lyndon words of length dividing k in lexicographic order). Deterministic:
// the same (q, k) always yields the same word, the lexicographically least
// cyclic De Bruijn sequence.
DeBruijnWord generate_de_bruijn(Alphabet a, int order, const Budget& budget = {});

// True iff |w| = q^k + k - 1 and the k-windows of w enumerate all q^k words
// without repetition.
bool verify_de_bruijn(const Word& w, int order);

} // namespace palin
