#include "palin/complexity.hpp"

#include "palin/eertree.hpp"
#include "palin/error.hpp"
#include "palin/suffix_automaton.hpp"

#include <stdexcept>
#include <string>

namespace palin {

long long ComplexityProfile::at(std::size_t k) const {
    if (k == 0) return kind == ProfileKind::subword ? 1 : 0;
    if (k > counts.size()) return 0;
    return counts[k - 1];
}

bool ParityProjection::is_nondecreasing() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] < counts[i - 1]) return false;
    return true;
}

namespace {

void require_nonempty(const Word& w) {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
}

// Every factor in a suffix-automaton state shares the state's out-degree as
// its right valence and the state spans one factor per length in
// (longest(link), longest]; accumulate over states with a difference array.
ValenceTable subword_valences(const Word& w) {
    const SuffixAutomaton sam(w.symbols(), w.q());
    const std::size_t n = w.size();
    const int q = w.q();

    std::vector<std::vector<long long>> delta(
        static_cast<std::size_t>(q) + 1, std::vector<long long>(n + 2, 0));
    for (int s = 1; s < sam.state_count(); ++s) {
        const auto lo = static_cast<std::size_t>(sam.longest(sam.link(s))) + 1;
        const auto hi = static_cast<std::size_t>(sam.longest(s));
        const int j = sam.out_degree(s);
        ++delta[static_cast<std::size_t>(j)][lo];
        --delta[static_cast<std::size_t>(j)][hi + 1];
    }

    ValenceTable table{ProfileKind::subword, q, {}};
    table.rows.assign(n, std::vector<long long>(static_cast<std::size_t>(q) + 1, 0));
    for (int j = 0; j <= q; ++j) {
        long long run = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            run += delta[static_cast<std::size_t>(j)][k];
            table.rows[k - 1][static_cast<std::size_t>(j)] = run;
        }
    }
    return table;
}

} // namespace

ComplexityProfile subword_complexity_profile(const Word& w) {
    require_nonempty(w);
    const ValenceTable table = subword_valences(w);
    ComplexityProfile profile{ProfileKind::subword, w.q(), w.size(), {}};
    profile.counts.resize(w.size(), 0);
    for (std::size_t k = 1; k <= w.size(); ++k) {
        long long total = 0;
        for (long long c : table.rows[k - 1]) total += c;
        profile.counts[k - 1] = total;
    }
    return profile;
}

ValenceTable right_valence_table(const Word& w) {
    require_nonempty(w);
    ValenceTable table = subword_valences(w);
    // s(0,k) counts factors that admit no right extension; in a finite word
    // that can only be the length-k suffix.
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (table.rows[k - 1][0] > 1)
            throw invariant_error("more than one right-blocked factor of length " +
                                  std::to_string(k));
    return table;
}

bool check_subword_iteration(const Word& w) {
    require_nonempty(w);
    const ComplexityProfile p = subword_complexity_profile(w);
    const ValenceTable s = right_valence_table(w);
    for (std::size_t k = 1; k + 1 <= w.size(); ++k) {
        long long delta = 0;
        for (int j = 0; j <= w.q(); ++j)
            delta += (j - 1) * s.rows[k - 1][static_cast<std::size_t>(j)];
        if (p.at(k + 1) != p.at(k) + delta) return false;
    }
    return true;
}

TrapezoidShape trapezoid_shape(const ComplexityProfile& profile) {
    if (profile.kind != ProfileKind::subword)
        throw std::invalid_argument("trapezoid segmentation applies to subword profiles");
    const std::size_t n = profile.word_length;

    // J: end of the strictly increasing head (k = 0 carries p(0) = 1).
    std::size_t j = 0;
    while (j < n && profile.at(j + 1) > profile.at(j)) ++j;
    // M: end of the plateau at the maximum.
    std::size_t m = j;
    while (m < n && profile.at(m + 1) == profile.at(j)) ++m;
    // Tail must fall with slope exactly -1.
    for (std::size_t k = m; k < n; ++k)
        if (profile.at(k + 1) != profile.at(k) - 1)
            throw invariant_error("subword profile is not trapezoidal at k = " +
                                  std::to_string(k + 1));
    return {j, m};
}

ComplexityProfile palindrome_profile(const Word& w) {
    require_nonempty(w);
    Eertree tree(w.alphabet(), w.size());
    tree.assign(w.symbols());
    ComplexityProfile profile{ProfileKind::palindrome, w.q(), w.size(), {}};
    profile.counts = tree.length_histogram();
    return profile;
}

ValenceTable palindrome_valence_table(const Word& w) {
    require_nonempty(w);
    Eertree tree(w.alphabet(), w.size());
    tree.assign(w.symbols());
    // Tree edge u --x--> xux: a node's edge-children count is its valence.
    ValenceTable table{ProfileKind::palindrome, w.q(), {}};
    table.rows.assign(w.size(), std::vector<long long>(static_cast<std::size_t>(w.q()) + 1, 0));
    tree.visit_nodes([&](std::size_t len, int children) {
        ++table.rows[len - 1][static_cast<std::size_t>(children)];
    });
    return table;
}

bool check_palindrome_iteration(const Word& w) {
    require_nonempty(w);
    const ComplexityProfile pal = palindrome_profile(w);
    const ValenceTable s = palindrome_valence_table(w);
    for (std::size_t k = 1; k + 2 <= w.size(); ++k) {
        long long delta = 0;
        for (int j = 0; j <= w.q(); ++j)
            delta += (j - 1) * s.rows[k - 1][static_cast<std::size_t>(j)];
        if (pal.at(k + 2) != pal.at(k) + delta) return false;
    }
    return true;
}

std::pair<ParityProjection, ParityProjection>
odd_even_projection(const ComplexityProfile& profile) {
    if (profile.kind != ProfileKind::palindrome)
        throw std::invalid_argument("parity projections apply to palindrome profiles");
    ParityProjection odd, even;
    for (std::size_t k = 1; k <= profile.counts.size(); ++k) {
        ParityProjection& dst = (k % 2 == 1) ? odd : even;
        dst.lengths.push_back(k);
        dst.counts.push_back(profile.counts[k - 1]);
    }
    return {odd, even};
}

bool check_complexity_bounds(const Word& w) {
    require_nonempty(w);
    const ComplexityProfile p = subword_complexity_profile(w);
    const ComplexityProfile pal = palindrome_profile(w);
    const std::size_t n = w.size();
    for (std::size_t k = 1; k <= n; ++k) {
        const long long palk = pal.at(k);
        if (palk > p.at(k)) return false;
        const Value cap = saturating_pow(w.q(), (k + 1) / 2);
        const auto window_cap = static_cast<long long>(n - k + 1);
        if (palk > window_cap) return false;
        if (cap < static_cast<Value>(palk)) return false;
    }
    return true;
}

} // namespace palin
