#include "palin/debruijn.hpp"
#include "palin/error.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace palin;
using testsupport::word_of;

TEST_CASE("small generated words") {
    CHECK(generate_de_bruijn(Alphabet(2), 1).word.str() == "01");
    CHECK(generate_de_bruijn(Alphabet(2), 2).word.str() == "00110");
    CHECK(generate_de_bruijn(Alphabet(2), 3).word.str() == "0001011100");
}

TEST_CASE("verification accepts the paper's example words") {
    CHECK(verify_de_bruijn(word_of("01100", 2), 2));
    CHECK(verify_de_bruijn(word_of("0221201100", 3), 2));
    CHECK_FALSE(verify_de_bruijn(word_of("0110", 2), 2)); // wrong length
    CHECK_FALSE(verify_de_bruijn(word_of("00000", 2), 2)); // repeated window
}

TEST_CASE("generated words verify across q and k") {
    for (int q = 1; q <= 5; ++q) {
        for (int k = 1; k <= (q == 1 ? 6 : 12 / q + 2); ++k) {
            const DeBruijnWord db = generate_de_bruijn(Alphabet(q), k);
            CHECK(db.word.size() == saturating_pow(q, static_cast<std::size_t>(k)) +
                                        static_cast<std::size_t>(k) - 1);
            CHECK(verify_de_bruijn(db.word, k));
        }
    }
}

TEST_CASE("window sets are complete (independent check)") {
    for (auto [q, k] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{4, 2}}) {
        const DeBruijnWord db = generate_de_bruijn(Alphabet(q), k);
        const auto windows = testsupport::naive_factors(db.word, static_cast<std::size_t>(k));
        CHECK(windows.size() == saturating_pow(q, static_cast<std::size_t>(k)));
    }
}

TEST_CASE("determinism") {
    const auto a = generate_de_bruijn(Alphabet(3), 4);
    const auto b = generate_de_bruijn(Alphabet(3), 4);
    CHECK(a.word == b.word);
}

TEST_CASE("unary alphabet") {
    const DeBruijnWord db = generate_de_bruijn(Alphabet(1), 4);
    CHECK(db.word.str() == "0000");
    CHECK(verify_de_bruijn(db.word, 4));
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(generate_de_bruijn(Alphabet(2), 40), budget_error);
    Budget tiny;
    tiny.word_space = 8;
    CHECK_THROWS_AS(generate_de_bruijn(Alphabet(2), 4, tiny), budget_error);
}
