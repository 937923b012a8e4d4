#include "palin/word.hpp"

#include "palin/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace palin {

Word::Word(Alphabet a, std::vector<Symbol> symbols)
    : alphabet_(a), symbols_(std::move(symbols)) {
    for (Symbol s : symbols_)
        if (!alphabet_.contains(s))
            throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_.size()));
}

Word Word::parse(const std::string& text, Alphabet a) {
    std::vector<Symbol> syms;
    if (a.size() <= 10) {
        syms.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument(std::string("invalid word character '") + ch +
                                            "'; expected digits for q <= 10");
            syms.push_back(static_cast<Symbol>(ch - '0'));
        }
    } else if (!text.empty()) {
        std::istringstream in(text);
        std::string field;
        while (std::getline(in, field, ',')) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(field, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid symbol '" + field + "'");
            }
            if (used != field.size() || v < 0 || v > Alphabet::max_letters)
                throw std::invalid_argument("invalid symbol '" + field + "'");
            syms.push_back(static_cast<Symbol>(v));
        }
    }
    return Word(a, std::move(syms));
}

Word Word::repeat(Alphabet a, std::span<const Symbol> block, std::size_t times) {
    std::vector<Symbol> syms;
    syms.reserve(block.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        syms.insert(syms.end(), block.begin(), block.end());
    return Word(a, std::move(syms));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > symbols_.size() || len > symbols_.size() - pos)
        throw std::out_of_range("subword range outside word");
    return Word(alphabet_,
                std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

std::string Word::str() const {
    std::string out;
    if (alphabet_.size() <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(int(symbols_[i]));
        }
    }
    return out;
}

bool WordSet::insert(Word w) {
    if (!words_.empty()) {
        if (w.size() != words_.front().size())
            throw std::invalid_argument("word set members must share one length");
        if (!(w.alphabet() == words_.front().alphabet()))
            throw std::invalid_argument("word set members must share one alphabet");
    }
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it != words_.end() && *it == w) return false;
    words_.insert(it, std::move(w));
    return true;
}

bool WordSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Word reverse(const Word& w) {
    std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
    return Word(w.alphabet(), std::move(syms));
}

bool is_palindrome(const Word& w) {
    auto s = w.symbols();
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

namespace {

bool window_is_palindrome(std::span<const Symbol> s, std::size_t pos, std::size_t k) {
    for (std::size_t i = 0, j = k; i + 1 < j; ++i, --j)
        if (s[pos + i] != s[pos + j - 1]) return false;
    return true;
}

} // namespace

WordSet factors_of_length(const Word& w, std::size_t k) {
    WordSet out;
    if (k > w.size()) return out;
    for (std::size_t pos = 0; pos + k <= w.size(); ++pos)
        out.insert(w.subword(pos, k));
    return out;
}

WordSet palindromic_factors(const Word& w) {
    WordSet out;
    auto s = w.symbols();
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t k = 1; pos + k <= w.size(); ++k)
            if (window_is_palindrome(s, pos, k)) out.insert(w.subword(pos, k));
    return out;
}

WindowClassification classify_uniform_palindromic_windows(const Word& w, std::size_t k) {
    if (k < 2) throw std::invalid_argument("window length k must be >= 2");
    if (w.size() < k) throw std::invalid_argument("word shorter than window length");

    auto s = w.symbols();
    const std::size_t windows = w.size() - k + 1;
    for (std::size_t pos = 0; pos < windows; ++pos)
        if (!window_is_palindrome(s, pos, k))
            return {WindowClassification::Kind::fails, pos + 1, 0, 0};

    const WordSet distinct = factors_of_length(w, k);
    if (distinct.size() < 2)
        return {WindowClassification::Kind::holds_degenerate, 0, 0, 0};

    // Two distinct all-palindromic windows force w = (ab)^(n/2), k = n-1.
    const std::size_t n = w.size();
    const Symbol a = s[0], b = s[1];
    bool alternating = (n % 2 == 0) && (k == n - 1) && (a != b);
    for (std::size_t i = 0; alternating && i < n; ++i)
        alternating = s[i] == (i % 2 == 0 ? a : b);
    if (!alternating)
        throw invariant_error("uniformly palindromic windows without alternating shape");
    return {WindowClassification::Kind::holds_alternating, 0, a, b};
}

Value word_to_integer(const Word& w) {
    const auto q = static_cast<Value>(w.q());
    Value v = 0;
    for (Symbol s : w.symbols()) {
        if (v > (std::numeric_limits<Value>::max() - s) / q)
            throw std::overflow_error("word encoding exceeds 64 bits");
        v = v * q + s;
    }
    return v;
}

Word integer_to_word(Value v, std::size_t n, Alphabet a) {
    const auto q = static_cast<Value>(a.size());
    std::vector<Symbol> syms(n);
    Value rest = v;
    for (std::size_t i = n; i-- > 0;) {
        syms[i] = static_cast<Symbol>(rest % q);
        rest /= q;
    }
    if (rest != 0)
        throw std::out_of_range("value " + std::to_string(v) + " not representable in " +
                                std::to_string(n) + " base-" + std::to_string(a.size()) +
                                " digits");
    return Word(a, std::move(syms));
}

std::optional<Value> checked_pow(int q, std::size_t n) {
    const auto base = static_cast<Value>(q);
    Value v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (base != 0 && v > std::numeric_limits<Value>::max() / base) return std::nullopt;
        v *= base;
    }
    return v;
}

Value saturating_pow(int q, std::size_t n) {
    return checked_pow(q, n).value_or(std::numeric_limits<Value>::max());
}

} // namespace palin
