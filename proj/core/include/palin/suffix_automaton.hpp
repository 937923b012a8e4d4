#pragma once

#include "palin/alphabet.hpp"

#include <span>
#include <vector>

namespace palin {

// Suffix automaton of a word. Each state is a class of factors sharing the
// same occurrence end-set; the class covers the length range
// (longest(link(s)), longest(s)], and its out-transitions are exactly the
// letters that extend any (equivalently, every) member on the right. That
// makes per-length distinct-factor counts and right-valence tables direct
// reads off the states.
class SuffixAutomaton {
public:
    SuffixAutomaton(std::span<const Symbol> text, int q);

    int q() const noexcept { return q_; }
    int state_count() const noexcept { return static_cast<int>(len_.size()); }

    // State 0 is the initial state (the class of the empty word).
    int longest(int s) const noexcept { return len_[s]; }
    int link(int s) const noexcept { return link_[s]; }
    int out_degree(int s) const noexcept { return out_degree_[s]; }

private:
    int transition(int s, Symbol c) const noexcept {
        return trans_[static_cast<std::size_t>(s) * q_ + c];
    }

    int q_;
    std::vector<int> len_;
    std::vector<int> link_;
    std::vector<int> trans_;
    std::vector<int> out_degree_;
};

} // namespace palin
