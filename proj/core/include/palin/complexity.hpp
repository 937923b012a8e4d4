#pragma once

#include "palin/word.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace palin {

enum class ProfileKind { subword, palindrome };

// Per-length counts c(1..n) of distinct factors (subword kind) or distinct
// palindromic factors (palindrome kind) of one word.
struct ComplexityProfile {
    ProfileKind kind = ProfileKind::subword;
    int q = 0;
    std::size_t word_length = 0;
    std::vector<long long> counts; // counts[k-1] = c(k)

    // c(k); 1 for k = 0 on the subword kind (the empty factor), 0 past n.
    long long at(std::size_t k) const;
};

// rows[k-1][j] = s(j,k): number of length-k factors with right valence j
// (subword kind), or s_p(j,k): number of length-k palindromic factors with
// palindrome valence j (palindrome kind). j ranges over 0..q.
struct ValenceTable {
    ProfileKind kind = ProfileKind::subword;
    int q = 0;
    std::vector<std::vector<long long>> rows;
};

// Segmentation of a subword profile: strictly increasing on [0, J], constant
// on [J, M], decreasing with slope exactly -1 on [M, n].
struct TrapezoidShape {
    std::size_t increase_end = 0; // J
    std::size_t plateau_end = 0;  // M
};

// Restriction of a palindrome profile to odd or even lengths.
struct ParityProjection {
    std::vector<std::size_t> lengths;
    std::vector<long long> counts;

    bool is_nondecreasing() const;
};

ComplexityProfile subword_complexity_profile(const Word& w);
ValenceTable right_valence_table(const Word& w);

// p(k+1) = p(k) + sum_j (j-1) s(j,k) at every k = 1..n-1. A false return is a
// library defect.
bool check_subword_iteration(const Word& w);

// Throws invariant_error when no increase/plateau/slope(-1) segmentation
// exists (that would falsify the trapezoid theorem for finite words).
TrapezoidShape trapezoid_shape(const ComplexityProfile& profile);

// Distinct palindromic factor counts per length via the palindromic tree;
// must equal the histogram of palindromic_factors(w).
ComplexityProfile palindrome_profile(const Word& w);
ValenceTable palindrome_valence_table(const Word& w);

// pal(k+2) = pal(k) + sum_j (j-1) s_p(j,k) at every k = 1..n-2.
bool check_palindrome_iteration(const Word& w);

std::pair<ParityProjection, ParityProjection>
odd_even_projection(const ComplexityProfile& profile);

// pal(k) <= p(k) and pal(k) <= min(q^ceil(k/2), n-k+1) for all k = 1..n.
bool check_complexity_bounds(const Word& w);

} // namespace palin
