#pragma once

// Shared naive oracles for cross-checking the library's fast paths. Everything
// here recomputes from first principles (substring sets), independent of the
// suffix-automaton / palindromic-tree / avoidance-DP implementations.

#include "palin/word.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using palin::Alphabet;
using palin::Symbol;
using palin::Word;

inline Word word_of(const std::string& text, int q) {
    return Word::parse(text, Alphabet(q));
}

inline Word random_word(std::mt19937& rng, int q, std::size_t len) {
    std::uniform_int_distribution<int> pick(0, q - 1);
    std::vector<Symbol> syms(len);
    for (auto& s : syms) s = static_cast<Symbol>(pick(rng));
    return Word(Alphabet(q), std::move(syms));
}

inline bool naive_is_pal(const std::vector<Symbol>& s) {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

inline std::set<std::vector<Symbol>> naive_factors(const Word& w, std::size_t k) {
    std::set<std::vector<Symbol>> out;
    auto sp = w.symbols();
    for (std::size_t pos = 0; pos + k <= w.size(); ++pos)
        out.insert(std::vector<Symbol>(sp.begin() + pos, sp.begin() + pos + k));
    return out;
}

inline std::set<std::vector<Symbol>> naive_pal_factors(const Word& w, std::size_t k) {
    std::set<std::vector<Symbol>> out;
    for (auto& f : naive_factors(w, k))
        if (naive_is_pal(f)) out.insert(f);
    return out;
}

// Distinct nonempty palindromic factors, any length.
inline long long naive_total_pal(const Word& w) {
    long long total = 0;
    for (std::size_t k = 1; k <= w.size(); ++k)
        total += static_cast<long long>(naive_pal_factors(w, k).size());
    return total;
}

inline std::vector<long long> naive_pal_histogram(const Word& w) {
    std::vector<long long> hist(w.size(), 0);
    for (std::size_t k = 1; k <= w.size(); ++k)
        hist[k - 1] = static_cast<long long>(naive_pal_factors(w, k).size());
    return hist;
}

inline std::vector<long long> naive_subword_profile(const Word& w) {
    std::vector<long long> counts(w.size(), 0);
    for (std::size_t k = 1; k <= w.size(); ++k)
        counts[k - 1] = static_cast<long long>(naive_factors(w, k).size());
    return counts;
}

// rows[k-1][j] = number of length-k factors u with exactly j letters x such
// that ux is a factor.
inline std::vector<std::vector<long long>> naive_right_valences(const Word& w) {
    const int q = w.q();
    std::vector<std::vector<long long>> rows(
        w.size(), std::vector<long long>(static_cast<std::size_t>(q) + 1, 0));
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const auto next = naive_factors(w, k + 1);
        for (auto u : naive_factors(w, k)) {
            int valence = 0;
            u.push_back(0);
            for (int x = 0; x < q; ++x) {
                u.back() = static_cast<Symbol>(x);
                if (next.count(u)) ++valence;
            }
            ++rows[k - 1][static_cast<std::size_t>(valence)];
        }
    }
    return rows;
}

// rows[k-1][j] = number of length-k palindromic factors u with exactly j
// letters x such that xux is a palindromic factor.
inline std::vector<std::vector<long long>> naive_pal_valences(const Word& w) {
    const int q = w.q();
    std::vector<std::vector<long long>> rows(
        w.size(), std::vector<long long>(static_cast<std::size_t>(q) + 1, 0));
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const auto wrapped = naive_pal_factors(w, k + 2);
        for (const auto& u : naive_pal_factors(w, k)) {
            int valence = 0;
            std::vector<Symbol> xux;
            xux.reserve(k + 2);
            for (int x = 0; x < q; ++x) {
                xux.assign(1, static_cast<Symbol>(x));
                xux.insert(xux.end(), u.begin(), u.end());
                xux.push_back(static_cast<Symbol>(x));
                if (wrapped.count(xux)) ++valence;
            }
            ++rows[k - 1][static_cast<std::size_t>(valence)];
        }
    }
    return rows;
}

// Every word of length n over {0..q-1}, in ascending order.
template <class Fn>
void for_each_word(int q, int n, Fn&& fn) {
    std::vector<Symbol> syms(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(Word(Alphabet(q), syms));
        int pos = n;
        while (pos > 0 && syms[static_cast<std::size_t>(pos - 1)] == q - 1)
            syms[static_cast<std::size_t>(--pos)] = 0;
        if (pos == 0) return;
        ++syms[static_cast<std::size_t>(pos - 1)];
    }
}

// S_{n,p} by definition: over all words, the count of distinct length-p
// palindromic factors.
inline long long brute_snp(int q, int n, int p) {
    long long total = 0;
    for_each_word(q, n, [&](const Word& w) {
        total += static_cast<long long>(naive_pal_factors(w, static_cast<std::size_t>(p)).size());
    });
    return total;
}

inline long long brute_sum_p(int q, int n) {
    long long total = 0;
    for_each_word(q, n, [&](const Word& w) { total += naive_total_pal(w); });
    return total;
}

} // namespace testsupport
