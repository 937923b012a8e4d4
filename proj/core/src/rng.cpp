#include "palin/rng.hpp"

namespace palin {

Word random_word(Alphabet a, std::size_t n, SplitMix64& gen) {
    std::vector<Symbol> syms(n);
    const auto q = static_cast<std::uint32_t>(a.size());
    for (std::size_t i = 0; i < n; ++i)
        syms[i] = static_cast<Symbol>(gen.next_below(q));
    return Word(a, std::move(syms));
}

} // namespace palin
