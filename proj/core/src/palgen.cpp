#include "palin/palgen.hpp"

#include "palin/debruijn.hpp"
#include "palin/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace palin {

namespace {

std::size_t half_length(std::size_t n) { return (n + 1) / 2; }

std::uint64_t list_budget_check(std::size_t length, Alphabet a, const Budget& budget) {
    const auto count = checked_pow(a.size(), half_length(length));
    if (!count || *count > budget.word_space)
        throw budget_error("palindrome list for n = " + std::to_string(length) +
                           ", q = " + std::to_string(a.size()) +
                           " exceeds the word-space budget");
    return *count;
}

} // namespace

Word extend_to_palindrome(const Word& half, std::size_t target_length) {
    if (target_length < 1) throw std::invalid_argument("palindrome length must be >= 1");
    if (half.size() != half_length(target_length))
        throw std::invalid_argument("half word has length " + std::to_string(half.size()) +
                                    ", need ceil(k/2) = " +
                                    std::to_string(half_length(target_length)));
    std::vector<Symbol> syms(half.symbols().begin(), half.symbols().end());
    syms.resize(target_length);
    // Mirror; odd targets share the center symbol.
    for (std::size_t i = half.size(); i < target_length; ++i)
        syms[i] = syms[target_length - 1 - i];
    return Word(half.alphabet(), std::move(syms));
}

PalindromeList palindromes_from_de_bruijn(std::size_t length, Alphabet a,
                                          const Budget& budget) {
    const std::uint64_t expected = list_budget_check(length, a, budget);
    const std::size_t h = half_length(length);
    const DeBruijnWord db = generate_de_bruijn(a, static_cast<int>(h), budget);

    PalindromeList out;
    out.reserve(expected);
    for (std::size_t pos = 0; pos + h <= db.word.size(); ++pos)
        out.push_back(extend_to_palindrome(db.word.subword(pos, h), length));
    std::sort(out.begin(), out.end());
    if (out.size() != expected || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw invariant_error("De Bruijn windows did not cover the half words exactly once");
    return out;
}

PalindromeList lift_palindromes(const PalindromeList& complete) {
    if (complete.empty()) throw std::invalid_argument("incomplete palindrome list: empty");
    const Alphabet a = complete.front().alphabet();
    const std::size_t n = complete.front().size();
    const auto expected = checked_pow(a.size(), half_length(n));
    if (!expected || complete.size() != *expected ||
        !std::is_sorted(complete.begin(), complete.end()))
        throw std::invalid_argument("incomplete palindrome list for length " +
                                    std::to_string(n));
    for (const Word& w : complete)
        if (w.size() != n || !(w.alphabet() == a) || !is_palindrome(w))
            throw std::invalid_argument("incomplete palindrome list: bad member " + w.str());

    PalindromeList out;
    out.reserve(complete.size() * static_cast<std::size_t>(a.size()));
    // x ascending outer, w ascending inner: output stays sorted.
    for (int x = 0; x < a.size(); ++x)
        for (const Word& w : complete) {
            std::vector<Symbol> syms;
            syms.reserve(n + 2);
            syms.push_back(static_cast<Symbol>(x));
            syms.insert(syms.end(), w.symbols().begin(), w.symbols().end());
            syms.push_back(static_cast<Symbol>(x));
            out.push_back(Word(a, std::move(syms)));
        }
    return out;
}

DiffRepresentation diff_representation(std::size_t length, Alphabet a,
                                       const Budget& budget) {
    if (length < 1) throw std::invalid_argument("palindrome length must be >= 1");
    list_budget_check(length, a, budget);
    if (!checked_pow(a.size(), length))
        throw budget_error("q^n for n = " + std::to_string(length) +
                           " exceeds 64-bit encodings");

    const auto q = static_cast<Value>(a.size());
    std::vector<Value> diffs;
    if (length == 1) {
        diffs.assign(q - 1, 1);
    } else if (length == 2) {
        diffs.assign(q - 1, q + 1);
    } else {
        // n = 2k+1 interleaves q^k around the row for 2k; n = 2k+2 interleaves
        // (q+1)q^k around the same row.
        const std::size_t k = (length - 1) / 2;
        const DiffRepresentation prev = diff_representation(2 * k, a, budget);
        Value qk = 1;
        for (std::size_t i = 0; i < k; ++i) qk *= q;
        const Value run = (length % 2 == 1) ? qk : (q + 1) * qk;

        diffs.reserve((prev.diffs.size() + 1) * q - 1);
        auto emit_run = [&] { diffs.insert(diffs.end(), q - 1, run); };
        emit_run();
        for (Value d : prev.diffs) {
            diffs.push_back(d);
            emit_run();
        }
    }
    return {length, a, std::move(diffs)};
}

PalindromeList palindromes_from_diffs(const DiffRepresentation& d) {
    const Value space = saturating_pow(d.alphabet.size(), d.length);
    PalindromeList out;
    out.reserve(d.diffs.size() + 1);
    Value v = 0;
    out.push_back(integer_to_word(0, d.length, d.alphabet));
    for (Value gap : d.diffs) {
        if (gap == 0 || gap >= space - v)
            throw std::invalid_argument("malformed difference representation: running sum "
                                        "leaves [0, q^n)");
        v += gap;
        out.push_back(integer_to_word(v, d.length, d.alphabet));
    }
    return out;
}

PalindromeList enumerate_palindromes(std::size_t length, Alphabet a, const Budget& budget) {
    if (length < 1) throw std::invalid_argument("palindrome length must be >= 1");
    const std::uint64_t count = list_budget_check(length, a, budget);
    const std::size_t h = half_length(length);

    PalindromeList out;
    out.reserve(count);
    std::vector<Symbol> half(h, 0);
    for (std::uint64_t i = 0;; ++i) {
        out.push_back(extend_to_palindrome(Word(a, half), length));
        if (i + 1 == count) break;
        // next half word in ascending order
        std::size_t pos = h;
        while (pos > 0 && half[pos - 1] == a.size() - 1) half[--pos] = 0;
        ++half[pos - 1];
    }
    return out;
}

} // namespace palin
