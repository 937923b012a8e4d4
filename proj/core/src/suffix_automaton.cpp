#include "palin/suffix_automaton.hpp"

namespace palin {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text, int q) : q_(q) {
    len_.reserve(2 * text.size() + 2);
    link_.reserve(2 * text.size() + 2);
    trans_.reserve((2 * text.size() + 2) * static_cast<std::size_t>(q_));

    auto add_state = [&](int len, int link, int clone_of) {
        len_.push_back(len);
        link_.push_back(link);
        const std::size_t base = trans_.size();
        trans_.resize(base + static_cast<std::size_t>(q_), -1);
        if (clone_of >= 0)
            for (int c = 0; c < q_; ++c)
                trans_[base + static_cast<std::size_t>(c)] =
                    trans_[static_cast<std::size_t>(clone_of) * q_ + static_cast<std::size_t>(c)];
        return static_cast<int>(len_.size()) - 1;
    };

    add_state(0, -1, -1);
    int last = 0;
    for (Symbol c : text) {
        const int cur = add_state(len_[last] + 1, -1, -1);
        int p = last;
        while (p != -1 && transition(p, c) == -1) {
            trans_[static_cast<std::size_t>(p) * q_ + c] = cur;
            p = link_[p];
        }
        if (p == -1) {
            link_[cur] = 0;
        } else {
            const int next = transition(p, c);
            if (len_[p] + 1 == len_[next]) {
                link_[cur] = next;
            } else {
                const int clone = add_state(len_[p] + 1, link_[next], next);
                while (p != -1 && transition(p, c) == next) {
                    trans_[static_cast<std::size_t>(p) * q_ + c] = clone;
                    p = link_[p];
                }
                link_[next] = clone;
                link_[cur] = clone;
            }
        }
        last = cur;
    }

    out_degree_.assign(len_.size(), 0);
    for (std::size_t s = 0; s < len_.size(); ++s) {
        int d = 0;
        for (int c = 0; c < q_; ++c)
            if (trans_[s * q_ + static_cast<std::size_t>(c)] != -1) ++d;
        out_degree_[s] = d;
    }
}

} // namespace palin
