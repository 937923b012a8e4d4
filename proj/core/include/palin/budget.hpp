#pragma once

#include <cstdint>

namespace palin {

// Resource caps for the exhaustive paths. `word_space` bounds any enumerated
// space of words or palindromes (q^n words, q^ceil(n/2) palindromes, q^k De
// Bruijn windows). `dp_cells` bounds the total number of dynamic-programming
// cell updates the avoidance-automaton method may perform.
struct Budget {
    std::uint64_t word_space = std::uint64_t{1} << 26;
    std::uint64_t dp_cells = std::uint64_t{1} << 32;
};

} // namespace palin
