#include "palin/eertree.hpp"

#include <cassert>

namespace palin {

Eertree::Eertree(Alphabet a, std::size_t reserve_length) : q_(a.size()) {
    len_.reserve(reserve_length + 2);
    link_.reserve(reserve_length + 2);
    children_.reserve(reserve_length + 2);
    trans_.reserve((reserve_length + 2) * q_);
    text_.reserve(reserve_length);
    undo_.reserve(reserve_length);
    hist_.reserve(reserve_length);
    clear();
}

void Eertree::clear() {
    len_.assign(2, 0);
    len_[root_minus] = -1;
    len_[root_zero] = 0;
    link_.assign(2, root_minus);
    children_.assign(2, 0);
    trans_.assign(2 * static_cast<std::size_t>(q_), -1);
    text_.clear();
    undo_.clear();
    hist_.clear();
    last_ = root_zero;
    distinct_ = 0;
}

void Eertree::assign(std::span<const Symbol> text) {
    clear();
    for (Symbol c : text) push(c);
}

int Eertree::find_extension(int from, Symbol c) const noexcept {
    const std::size_t pos = text_.size() - 1;
    int v = from;
    // Terminates at root_minus: pos - (-1) - 1 = pos and text_[pos] == c.
    while (true) {
        const auto l = static_cast<std::size_t>(len_[v] + 1);
        if (pos >= l && text_[pos - l] == c) return v;
        v = link_[v];
    }
}

void Eertree::push(Symbol c) {
    assert(c < q_);
    text_.push_back(c);
    const int x = find_extension(last_, c);
    const int existing = transition(x, c);
    if (existing != -1) {
        undo_.push_back({last_, -1, c});
        last_ = existing;
        return;
    }

    const int node = node_count();
    const int node_len = len_[x] + 2;
    len_.push_back(node_len);
    children_.push_back(0);
    trans_.insert(trans_.end(), static_cast<std::size_t>(q_), -1);
    // Suffix link: the longest proper palindromic suffix, found from x's link.
    // Single letters link to the empty palindrome.
    if (node_len == 1) {
        link_.push_back(root_zero);
    } else {
        const int y = find_extension(link_[x], c);
        link_.push_back(transition(y, c));
    }
    transition(x, c) = node;
    ++children_[x];
    ++distinct_;
    if (hist_.size() < static_cast<std::size_t>(node_len)) hist_.resize(node_len, 0);
    ++hist_[static_cast<std::size_t>(node_len) - 1];

    undo_.push_back({last_, x, c});
    last_ = node;
}

void Eertree::pop() {
    assert(!undo_.empty());
    const Undo u = undo_.back();
    undo_.pop_back();
    if (u.created_parent != -1) {
        const int node = node_count() - 1;
        transition(u.created_parent, u.sym) = -1;
        --children_[u.created_parent];
        --hist_[static_cast<std::size_t>(len_[node]) - 1];
        --distinct_;
        len_.pop_back();
        link_.pop_back();
        children_.pop_back();
        trans_.resize(trans_.size() - static_cast<std::size_t>(q_));
    }
    last_ = u.prev_last;
    text_.pop_back();
}

std::vector<long long> Eertree::length_histogram() const {
    std::vector<long long> out(text_.size(), 0);
    for (std::size_t k = 0; k < hist_.size() && k < out.size(); ++k) out[k] = hist_[k];
    return out;
}

void Eertree::visit_nodes(const std::function<void(std::size_t, int)>& fn) const {
    for (int v = 2; v < node_count(); ++v)
        fn(static_cast<std::size_t>(len_[v]), children_[v]);
}

} // namespace palin
