#include "palin/avoidance.hpp"

#include <stdexcept>

namespace palin {

AvoidanceAutomaton::AvoidanceAutomaton(const Word& pattern)
    : pattern_(pattern), q_(pattern.q()) {
    if (pattern_.empty()) throw std::invalid_argument("pattern must be nonempty");
    const auto m = static_cast<int>(pattern_.size());
    trans_.assign(static_cast<std::size_t>(m + 1) * q_, 0);

    // Classic prefix-automaton build: state j holds the mismatch transitions
    // of its border state x, then overwrite the matching letter.
    for (int c = 0; c < q_; ++c)
        trans_[static_cast<std::size_t>(c)] = (c == pattern_[0]) ? 1 : 0;
    int x = 0;
    for (int j = 1; j < m; ++j) {
        for (int c = 0; c < q_; ++c)
            trans_[static_cast<std::size_t>(j) * q_ + static_cast<std::size_t>(c)] =
                trans_[static_cast<std::size_t>(x) * q_ + static_cast<std::size_t>(c)];
        trans_[static_cast<std::size_t>(j) * q_ + pattern_[static_cast<std::size_t>(j)]] =
            j + 1;
        x = trans_[static_cast<std::size_t>(x) * q_ +
                   pattern_[static_cast<std::size_t>(j)]];
    }
    // Accept state absorbs.
    for (int c = 0; c < q_; ++c)
        trans_[static_cast<std::size_t>(m) * q_ + static_cast<std::size_t>(c)] = m;
}

auto AvoidanceAutomaton::avoid_count(std::size_t n) const -> u128 {
    return avoid_counts_up_to(n).back();
}

auto AvoidanceAutomaton::avoid_counts_up_to(std::size_t n) const -> std::vector<u128> {
    const auto m = static_cast<std::size_t>(pattern_.size());
    std::vector<u128> cur(m, 0), nxt(m, 0);
    cur[0] = 1;

    std::vector<u128> out;
    out.reserve(n + 1);
    out.push_back(1);
    for (std::size_t step = 1; step <= n; ++step) {
        for (std::size_t s = 0; s < m; ++s) nxt[s] = 0;
        for (std::size_t s = 0; s < m; ++s) {
            const u128 ways = cur[s];
            if (ways == 0) continue;
            const std::size_t base = s * q_;
            for (int c = 0; c < q_; ++c) {
                const int t = trans_[base + static_cast<std::size_t>(c)];
                if (static_cast<std::size_t>(t) < m) nxt[static_cast<std::size_t>(t)] += ways;
            }
        }
        cur.swap(nxt);
        u128 total = 0;
        for (u128 v : cur) total += v;
        out.push_back(total);
    }
    return out;
}

} // namespace palin
