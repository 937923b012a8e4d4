#pragma once

#include "palin/budget.hpp"
#include "palin/rational.hpp"
#include "palin/word.hpp"

#include <cstdint>
#include <vector>

namespace palin {

// card(PAL(w)): total number of distinct nonempty palindromic factors.
long long total_palindrome_complexity(const Word& w);

// M_q(n) = sum over all q^n words of total_palindrome_complexity, over q^n.
// Iterates the entire word space (depth-first with shared prefixes); the
// reference method, capped by budget.word_space.
Rational average_exact_enumeration(int q, int n, const Budget& budget = {},
                                   int threads = 1);

// S_{n,p}: over all length-n words, the number of distinct length-p
// palindromic factors, each counted once per word containing it. Evaluated as
// sum over palindromes pi of (q^n - avoid(pi, n)) with avoid computed by DP
// over the pattern automaton.
BigInt snp_automaton(int q, int n, int p, const Budget& budget = {},
                     int threads = 1);

// S_{n,1} = q^(n+1) - q(q-1)^n.
BigInt sn1_closed(int q, int n);

// Number of length-n words avoiding a fixed doubled letter:
// psi(n) = (q-1)(psi(n-1) + psi(n-2)), psi(2) = q^2-1, psi(3) = q^3-2q+1.
BigInt psi_recurrence(int q, int n);

struct Sn2 {
    BigInt exact;       // q (q^n - psi(n))
    double closed_form; // root-power closed form of the same quantity
};
Sn2 sn2_closed(int q, int n);

// Upper bound on M_q(n) (parity-dependent closed form), as an exact rational.
Rational theorem_bound(int q, int n);

// limsup M_q(n)/n bounds: the coarse one and the S_{n,2}-improved one.
struct AsymptoticLimits {
    Rational c1; // 2/(q-1)
    Rational c3; // (q+1)/(q(q-1)), always <= c1, < 1 iff q >= 3
};
AsymptoticLimits asymptotic_limits(int q);

struct PerP {
    int p;
    BigInt s_np;
};

struct AutomatonAverage {
    Rational average; // M_q(n) = (sum_p S_{n,p}) / q^n
    std::vector<PerP> per_p;
};
AutomatonAverage average_exact_automaton(int q, int n, const Budget& budget = {},
                                         int threads = 1);

// S_{n,p} for all 1 <= p <= n <= n_max from one sweep (each pattern's DP run
// serves every n at once). table[n][p-1] = S_{n,p} for n = 1..n_max.
std::vector<std::vector<BigInt>> snp_table(int q, int n_max,
                                           const Budget& budget = {},
                                           int threads = 1);

struct MonteCarloResult {
    BigInt total_p;    // sum of P(w_i)
    int samples;       // l
    std::uint64_t seed;
    Rational estimate; // total_p / (l * n), the M_q(n)/n estimate
};

// Draws `samples` words uniformly from A^n using per-sample SplitMix64
// substreams; bit-reproducible for a fixed seed at any thread count.
MonteCarloResult monte_carlo_average(int q, int n, int samples,
                                     std::uint64_t seed, int threads = 1);

struct ConjectureRow {
    int n;
    Rational m;              // M_q(n), exact
    bool violates_decrease;  // true when M(n)/n >= M(n-1)/(n-1), exact compare
};

struct ConjectureScan {
    std::vector<ConjectureRow> rows;
    std::vector<int> violations; // n values whose row violates strict decrease
};

// Exact M_q(n)/n over [n_lo, n_hi]; adjacent pairs compared as rationals.
ConjectureScan conjecture_scan(int q, int n_lo, int n_hi,
                               const Budget& budget = {}, int threads = 1);

} // namespace palin
