#pragma once

#include "palin/alphabet.hpp"
#include "palin/word.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace palin {

// Palindromic tree (eertree): one node per distinct nonempty palindromic
// factor of the current text, built one symbol at a time. Each push adds at
// most one node, so the node count never exceeds |text| + 2 (including the
// two roots), and pop() undoes the most recent push exactly.
//
// Structure used elsewhere:
//   - tree edge u --x--> v  means  v = x.u.x, so the edge-children of a node
//     are precisely the palindromic factors extending it by one letter on
//     both sides (its palindrome valence).
//   - node lengths give the per-length palindrome counts.
class Eertree {
public:
    explicit Eertree(Alphabet a, std::size_t reserve_length = 0);

    void push(Symbol c);
    void pop();
    void clear();
    void assign(std::span<const Symbol> text);

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return text_.size(); }

    // card(PAL(text)): number of real nodes.
    long long distinct_palindromes() const noexcept { return distinct_; }

    // [k-1] = number of distinct palindromic factors of length k, k = 1..size.
    std::vector<long long> length_histogram() const;

    // Calls fn(length, edge_children) for every real node.
    void visit_nodes(const std::function<void(std::size_t, int)>& fn) const;

private:
    static constexpr int root_minus = 0; // imaginary palindrome of length -1
    static constexpr int root_zero = 1;  // empty palindrome

    int node_count() const noexcept { return static_cast<int>(len_.size()); }
    int transition(int node, Symbol c) const noexcept {
        return trans_[static_cast<std::size_t>(node) * q_ + c];
    }
    int& transition(int node, Symbol c) noexcept {
        return trans_[static_cast<std::size_t>(node) * q_ + c];
    }
    // Longest palindromic suffix v of the pending text (reached from `from`
    // via suffix links) that can be extended by c on both sides.
    int find_extension(int from, Symbol c) const noexcept;

    struct Undo {
        int prev_last;
        int created_parent; // -1 when the push created no node
        Symbol sym;
    };

    int q_;
    std::vector<int> len_;
    std::vector<int> link_;
    std::vector<int> children_;
    std::vector<int> trans_;
    std::vector<Symbol> text_;
    std::vector<Undo> undo_;
    std::vector<long long> hist_;
    int last_ = root_zero;
    long long distinct_ = 0;
};

} // namespace palin
