#pragma once

#include "palin/alphabet.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace palin {

// Radix-q integer encoding of a word (most significant symbol first).
using Value = std::uint64_t;

// A finite sequence of symbols over a fixed alphabet. The empty word is valid.
class Word {
public:
    Word(Alphabet a, std::vector<Symbol> symbols);

    // Text form: contiguous digits for q <= 10, comma-separated integers above.
    static Word parse(const std::string& text, Alphabet a);
    static Word repeat(Alphabet a, std::span<const Symbol> block, std::size_t times);

    Alphabet alphabet() const noexcept { return alphabet_; }
    int q() const noexcept { return alphabet_.size(); }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    Word subword(std::size_t pos, std::size_t len) const;
    std::string str() const;

    friend bool operator==(const Word& x, const Word& y) {
        return x.alphabet_ == y.alphabet_ && x.symbols_ == y.symbols_;
    }
    // Lexicographic on symbols; for equal lengths this is numeric order.
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        return x.symbols_ <=> y.symbols_;
    }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

// Distinct words of one common length over one common alphabet, stored in
// ascending order.
class WordSet {
public:
    WordSet() = default;

    // Returns false when the word is already present. Throws if the word's
    // length or alphabet differs from the members already inserted.
    bool insert(Word w);
    bool contains(const Word& w) const;

    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    std::vector<Word> words_;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// Distinct contiguous subwords of w of length k. {eps} for k = 0, empty for
// k > |w|.
WordSet factors_of_length(const Word& w, std::size_t k);

// Naive reference: every distinct nonempty palindromic factor of w, found by
// enumerating all factors and filtering. Serves as the oracle for the
// palindromic-tree engine.
WordSet palindromic_factors(const Word& w);

// Outcome of checking whether every length-k window of a word is a palindrome.
// When it holds with at least two distinct windows, the word is forced into
// the alternating shape (ab)^(|w|/2) with k = |w|-1; the two letters are
// reported. A single repeated window (e.g. unary words) is the degenerate
// case. Failure reports the leftmost offending window, 1-based.
struct WindowClassification {
    enum class Kind { holds_alternating, holds_degenerate, fails };
    Kind kind = Kind::fails;
    std::size_t fail_position = 0;
    Symbol a = 0;
    Symbol b = 0;
};

WindowClassification classify_uniform_palindromic_windows(const Word& w, std::size_t k);

// Fixed-width radix-q encoding, preserving leading zeros.
Value word_to_integer(const Word& w);
Word integer_to_word(Value v, std::size_t n, Alphabet a);

// q^n, or nullopt when the value does not fit in 64 bits.
std::optional<Value> checked_pow(int q, std::size_t n);
// q^n clamped to the maximum representable value.
Value saturating_pow(int q, std::size_t n);

} // namespace palin
