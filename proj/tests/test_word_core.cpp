#include "palin/error.hpp"
#include "palin/word.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace palin;
using testsupport::random_word;
using testsupport::word_of;

TEST_CASE("reverse examples") {
    CHECK(reverse(word_of("0221201100", 3)).str() == "0011021220");
    CHECK(reverse(Word(Alphabet(2), {})).str() == "");
    CHECK(reverse(word_of("010", 2)).str() == "010");
}

TEST_CASE("reverse is an involution") {
    std::mt19937 rng(7);
    for (int q : {1, 2, 3, 5, 12}) {
        for (int rep = 0; rep < 50; ++rep) {
            const Word w = random_word(rng, q, rng() % 40);
            CHECK(reverse(reverse(w)) == w);
            CHECK(is_palindrome(w) == is_palindrome(reverse(w)));
        }
    }
}

TEST_CASE("is_palindrome") {
    CHECK(is_palindrome(word_of("1000001", 2)));
    CHECK(is_palindrome(word_of("0", 2)));
    CHECK(is_palindrome(Word(Alphabet(2), {})));
    CHECK_FALSE(is_palindrome(word_of("01100", 2)));
}

TEST_CASE("factors_of_length") {
    const Word w = word_of("0110", 2);
    WordSet two = factors_of_length(w, 2);
    CHECK(two.size() == 3);
    CHECK(two.contains(word_of("01", 2)));
    CHECK(two.contains(word_of("11", 2)));
    CHECK(two.contains(word_of("10", 2)));
    CHECK_FALSE(two.contains(word_of("00", 2)));

    WordSet whole = factors_of_length(w, 4);
    CHECK(whole.size() == 1);
    CHECK(whole.contains(w));

    CHECK(factors_of_length(w, 5).empty());

    WordSet eps = factors_of_length(w, 0);
    CHECK(eps.size() == 1);
    CHECK(eps.contains(Word(Alphabet(2), {})));
}

TEST_CASE("factor count bound") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4}) {
        for (int rep = 0; rep < 25; ++rep) {
            const Word w = random_word(rng, q, 1 + rng() % 30);
            for (std::size_t k = 1; k <= w.size(); ++k) {
                const Value cap = saturating_pow(q, k);
                const auto count = static_cast<Value>(factors_of_length(w, k).size());
                CHECK(count <= cap);
                CHECK(count <= w.size() - k + 1);
            }
        }
    }
}

TEST_CASE("palindromic_factors examples") {
    WordSet pals = palindromic_factors(word_of("0110", 2));
    CHECK(pals.size() == 4);
    for (const char* s : {"0", "1", "11", "0110"})
        CHECK(std::any_of(pals.begin(), pals.end(),
                          [&](const Word& w) { return w.str() == s; }));

    WordSet unary = palindromic_factors(word_of("0000", 2));
    CHECK(unary.size() == 4);

    WordSet ab = palindromic_factors(word_of("01", 2));
    CHECK(ab.size() == 2);
}

TEST_CASE("palindromic_factors is reversal invariant") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        const Word w = random_word(rng, 3, 1 + rng() % 25);
        CHECK(palindromic_factors(w) == palindromic_factors(reverse(w)));
    }
}

TEST_CASE("uniform palindromic windows: alternating case") {
    const auto c = classify_uniform_palindromic_windows(word_of("010101", 2), 5);
    CHECK(c.kind == WindowClassification::Kind::holds_alternating);
    CHECK(c.a == 0);
    CHECK(c.b == 1);
}

TEST_CASE("uniform palindromic windows: failure reports first window") {
    const auto c = classify_uniform_palindromic_windows(word_of("0110", 2), 2);
    CHECK(c.kind == WindowClassification::Kind::fails);
    CHECK(c.fail_position == 1); // "01"
}

TEST_CASE("uniform palindromic windows: degenerate single factor") {
    const auto c = classify_uniform_palindromic_windows(word_of("000", 2), 2);
    CHECK(c.kind == WindowClassification::Kind::holds_degenerate);
}

TEST_CASE("uniform palindromic windows: random alternating words hold") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        const int q = 2 + static_cast<int>(rng() % 4);
        const auto a = static_cast<Symbol>(rng() % q);
        auto b = static_cast<Symbol>(rng() % q);
        while (b == a) b = static_cast<Symbol>(rng() % q);
        const std::size_t half = 2 + rng() % 6;
        const Symbol block[2] = {a, b};
        const Word w = Word::repeat(Alphabet(q), block, half);
        const auto c = classify_uniform_palindromic_windows(w, w.size() - 1);
        CHECK(c.kind == WindowClassification::Kind::holds_alternating);
        CHECK(c.a == a);
        CHECK(c.b == b);
    }
}

TEST_CASE("uniform palindromic windows: failing position matches naive scan") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 60; ++rep) {
        const Word w = random_word(rng, 2, 4 + rng() % 20);
        const std::size_t k = 2 + rng() % (w.size() - 2);
        std::size_t expected = 0;
        for (std::size_t pos = 0; pos + k <= w.size(); ++pos) {
            std::vector<Symbol> win(w.symbols().begin() + pos, w.symbols().begin() + pos + k);
            if (!testsupport::naive_is_pal(win)) {
                expected = pos + 1;
                break;
            }
        }
        if (expected == 0) continue; // all windows palindromic; covered above
        const auto c = classify_uniform_palindromic_windows(w, k);
        CHECK(c.kind == WindowClassification::Kind::fails);
        CHECK(c.fail_position == expected);
    }
}

TEST_CASE("uniform palindromic windows: argument validation") {
    CHECK_THROWS_AS(classify_uniform_palindromic_windows(word_of("0110", 2), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_uniform_palindromic_windows(word_of("01", 2), 3),
                    std::invalid_argument);
}

TEST_CASE("word/integer encoding") {
    CHECK(word_to_integer(word_of("0110", 2)) == 6);
    CHECK(word_to_integer(word_of("1001", 2)) == 9);
    CHECK(integer_to_word(0, 4, Alphabet(2)).str() == "0000");
    CHECK_THROWS_AS(integer_to_word(16, 4, Alphabet(2)), std::out_of_range);
}

TEST_CASE("encoding round trip") {
    std::mt19937 rng(23);
    for (int q : {2, 3, 7}) {
        const std::size_t n = 6;
        const Value space = *checked_pow(q, n);
        for (int rep = 0; rep < 50; ++rep) {
            const Value v = rng() % space;
            CHECK(word_to_integer(integer_to_word(v, n, Alphabet(q))) == v);
        }
    }
}

TEST_CASE("parse and render") {
    CHECK(word_of("0110", 2).str() == "0110");
    CHECK_THROWS_AS(word_of("012", 2), std::invalid_argument); // symbol 2 outside q=2
    CHECK_THROWS_AS(word_of("01a0", 2), std::invalid_argument);

    const Word wide = Word::parse("3,11,0", Alphabet(12));
    CHECK(wide.size() == 3);
    CHECK(wide.str() == "3,11,0");
    CHECK(Word::parse(wide.str(), Alphabet(12)) == wide);
    CHECK_THROWS_AS(Word::parse("3,12", Alphabet(12)), std::invalid_argument);
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet(256), std::invalid_argument);
    CHECK_THROWS_AS(Word(Alphabet(3), {0, 3}), std::invalid_argument);
}

TEST_CASE("word set enforces uniform shape") {
    WordSet set;
    CHECK(set.insert(word_of("01", 2)));
    CHECK_FALSE(set.insert(word_of("01", 2)));
    CHECK_THROWS_AS(set.insert(word_of("011", 2)), std::invalid_argument);
    CHECK_THROWS_AS(set.insert(word_of("01", 3)), std::invalid_argument);
}
