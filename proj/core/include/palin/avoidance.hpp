#pragma once

#include "palin/word.hpp"

#include <cstdint>
#include <vector>

namespace palin {

// Deterministic factor-matching automaton for one pattern. State s < |pattern|
// is the length of the longest pattern prefix matching a suffix of the text
// read so far; state |pattern| (the accept state) is absorbing. Transitions
// are total.
class AvoidanceAutomaton {
public:
    using u128 = unsigned __int128;

    explicit AvoidanceAutomaton(const Word& pattern);

    const Word& pattern() const noexcept { return pattern_; }
    int q() const noexcept { return q_; }
    int state_count() const noexcept { return static_cast<int>(pattern_.size()) + 1; }

    int next(int state, Symbol c) const noexcept {
        return trans_[static_cast<std::size_t>(state) * q_ + c];
    }

    // Number of length-n words containing no occurrence of the pattern.
    u128 avoid_count(std::size_t n) const;

    // [i] = avoid(i) for i = 0..n, from one DP sweep.
    std::vector<u128> avoid_counts_up_to(std::size_t n) const;

private:
    Word pattern_;
    int q_;
    std::vector<int> trans_;
};

} // namespace palin
