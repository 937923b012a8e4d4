#include "palin/debruijn.hpp"

#include "palin/error.hpp"

#include <stdexcept>
#include <vector>

namespace palin {

namespace {

// Fredricksen-Kessler-Maiorana: emit each necklace's aperiodic prefix when its
// length divides k; concatenation in lexicographic order is the least cyclic
// De Bruijn sequence.
void fkm(int q, int k, std::vector<Symbol>& out) {
    std::vector<Symbol> a(static_cast<std::size_t>(k) + 1, 0);
    // t = position being filled (1-based), p = period of the prefix so far
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > k) {
            if (k % p == 0)
                for (int i = 1; i <= p; ++i) out.push_back(a[static_cast<std::size_t>(i)]);
            return;
        }
        a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
        self(self, t + 1, p);
        for (int c = a[static_cast<std::size_t>(t - p)] + 1; c < q; ++c) {
            a[static_cast<std::size_t>(t)] = static_cast<Symbol>(c);
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
}

} // namespace

DeBruijnWord generate_de_bruijn(Alphabet a, int order, const Budget& budget) {
    if (order < 1) throw std::invalid_argument("De Bruijn order must be >= 1");
    const auto space = checked_pow(a.size(), static_cast<std::size_t>(order));
    if (!space || *space > budget.word_space)
        throw budget_error("q^k = " + std::to_string(a.size()) + "^" +
                           std::to_string(order) + " exceeds the word-space budget");

    std::vector<Symbol> cyc;
    cyc.reserve(static_cast<std::size_t>(*space));
    fkm(a.size(), order, cyc);
    // Linearize: append the first k-1 symbols so every cyclic window appears.
    std::vector<Symbol> lin = cyc;
    lin.insert(lin.end(), cyc.begin(), cyc.begin() + (order - 1));
    return {Word(a, std::move(lin)), order};
}

bool verify_de_bruijn(const Word& w, int order) {
    if (order < 1) return false;
    const auto k = static_cast<std::size_t>(order);
    const auto space = checked_pow(w.q(), k);
    if (!space) return false; // a word that long cannot exist in memory
    if (w.size() != *space + k - 1) return false;

    const auto q = static_cast<Value>(w.q());
    Value msd = 1; // q^(k-1), weight of the symbol leaving the window
    for (std::size_t i = 0; i + 1 < k; ++i) msd *= q;

    std::vector<bool> seen(static_cast<std::size_t>(*space), false);
    auto s = w.symbols();
    Value code = 0;
    for (std::size_t i = 0; i < k; ++i) code = code * q + s[i];
    for (std::size_t pos = 0;; ++pos) {
        if (seen[static_cast<std::size_t>(code)]) return false;
        seen[static_cast<std::size_t>(code)] = true;
        if (pos + k >= w.size()) break;
        code = (code - s[pos] * msd) * q + s[pos + k];
    }
    return true; // count is implied: windows = q^k and none repeated
}

} // namespace palin
