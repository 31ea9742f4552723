#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace splitvd {

using vertex = std::uint32_t;

/// Fixed-universe bitset of vertex ids in [0, universe).
///
/// All binary operations require both operands to share the same universe.
class vertex_set {
public:
    using word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const vertex*;
        using reference = vertex;

        iterator() = default;
        iterator(const vertex_set* s, std::size_t pos) : set_(s), pos_(pos) { seek(); }

        vertex operator*() const { return static_cast<vertex>(pos_); }
        iterator& operator++() {
            ++pos_;
            seek();
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        void seek() {
            const std::size_t n = set_->universe_;
            while (pos_ < n) {
                std::size_t w = pos_ / word_bits;
                word bits = set_->words_[w] >> (pos_ % word_bits);
                if (bits != 0) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(bits));
                    return;
                }
                pos_ = (w + 1) * word_bits;
            }
            pos_ = n;
        }

        const vertex_set* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    vertex_set() = default;
    explicit vertex_set(std::size_t universe) : universe_(universe), words_((universe + word_bits - 1) / word_bits) {}
    vertex_set(std::size_t universe, std::initializer_list<vertex> members) : vertex_set(universe) {
        for (vertex v : members)
            insert(v);
    }

    static vertex_set full(std::size_t universe) {
        vertex_set s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~word{0});
        s.trim();
        return s;
    }

    template <class Range>
    static vertex_set from_range(std::size_t universe, const Range& members) {
        vertex_set s(universe);
        for (auto v : members)
            s.insert(static_cast<vertex>(v));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(vertex v) const { return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U) != 0; }

    void insert(vertex v) {
        check(v);
        words_[v / word_bits] |= word{1} << (v % word_bits);
    }

    void erase(vertex v) {
        check(v);
        words_[v / word_bits] &= ~(word{1} << (v % word_bits));
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](word w) { return w == 0; });
    }

    void clear() { std::fill(words_.begin(), words_.end(), word{0}); }

    /// Smallest member, or universe() when empty.
    vertex first() const { return *begin(); }

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, universe_); }

    std::vector<vertex> to_vector() const { return {begin(), end()}; }

    bool is_subset_of(const vertex_set& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

    bool intersects(const vertex_set& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0)
                return true;
        return false;
    }

    std::size_t intersection_size(const vertex_set& o) const {
        same_universe(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    vertex_set& operator&=(const vertex_set& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    vertex_set& operator|=(const vertex_set& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    vertex_set& operator-=(const vertex_set& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
    friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
    friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

    /// Complement within the universe.
    vertex_set operator~() const {
        vertex_set r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const vertex_set& a, const vertex_set& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::size_t hash() const {
        std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
        for (word w : words_)
            h ^= std::hash<word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check(vertex v) const {
        if (v >= universe_)
            throw std::out_of_range("vertex id out of range");
    }
    void same_universe(const vertex_set& o) const {
        if (o.universe_ != universe_)
            throw std::invalid_argument("vertex sets over different universes");
    }
    void trim() {
        if (universe_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word> words_;
};

} // namespace splitvd
