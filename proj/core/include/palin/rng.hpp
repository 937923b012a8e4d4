#pragma once

#include "palin/alphabet.hpp"
#include "palin/word.hpp"

#include <cstdint>
#include <vector>

namespace palin {

inline constexpr std::uint64_t splitmix64_gamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 output mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// SplitMix64: state walks by the golden-ratio increment, outputs are the
// mixed states. Chosen as the random-word source because the whole stream is
// pinned down by a dozen lines that any language can reproduce bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_ += splitmix64_gamma); }

    // Uniform in [0, q); rejection sampling kills the modulo bias.
    std::uint32_t next_below(std::uint32_t q) {
        const std::uint64_t rem = (UINT64_MAX % q + 1) % q;
        std::uint64_t r = next();
        if (rem != 0)
            while (r > UINT64_MAX - rem) r = next();
        return static_cast<std::uint32_t>(r % q);
    }

private:
    std::uint64_t state_;
};

// Sample `index` of a run seeded with `seed` draws from its own SplitMix64
// stream. The derivation below is part of the file/CLI contract: it keeps
// results identical for any worker count and is trivial to re-derive in
// another language.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * splitmix64_gamma);
}

// n symbols drawn uniformly from the alphabet.
Word random_word(Alphabet a, std::size_t n, SplitMix64& gen);

} // namespace palin
