#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace palin {

// Letters are the integers 0..q-1. Named letters (a, b, ...) map to
// 0, 1, ... in input order.
using Symbol = std::uint8_t;

class Alphabet {
public:
    static constexpr int max_letters = 255;

    explicit Alphabet(int letters) : q_(letters) {
        if (letters < 1 || letters > max_letters)
            throw std::invalid_argument("alphabet size must be in [1, " +
                                        std::to_string(max_letters) + "], got " +
                                        std::to_string(letters));
    }

    int size() const noexcept { return q_; }
    bool contains(Symbol s) const noexcept { return static_cast<int>(s) < q_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    int q_;
};

} // namespace palin
