#ifndef WIDTHKIT_BITSET_HPP
#define WIDTHKIT_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace widthkit {

/// Fixed-width bit vector backed by 64-bit words. Used for adjacency rows
/// and GF(2) matrix rows; width is set at construction and never changes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// Clears every bit that is set in `o`.
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Numeric order on the word representation; a convenient total order
    /// for use as a map key (not the sorted-list order, see lex_less).
    bool operator<(const Bitset& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }

    /// Lowest set bit with index > i, or size() if none.
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= size_) return size_;
        std::size_t w = i >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size()) return size_;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = find_first(); i < size_; i = find_next(i)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for_each_set([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL + w;
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Compares two bitsets as ascending lists of set-bit indices
/// (lexicographic with the shorter-prefix rule).
inline bool lex_less(const Bitset& a, const Bitset& b) {
    std::size_t ia = a.find_first(), ib = b.find_first();
    while (ia < a.size() && ib < b.size()) {
        if (ia != ib) return ia < ib;
        ia = a.find_next(ia);
        ib = b.find_next(ib);
    }
    return ia >= a.size() && ib < b.size();
}

/// Mask version of lex_less for vertex sets over at most 64 vertices.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    std::uint64_t low = d & (0 - d);
    int sh = std::countr_zero(low) + 1;
    if (a & low) return sh >= 64 || (b >> sh) != 0;  // a's element is smaller unless b is a prefix
    return !(sh >= 64 || (a >> sh) != 0);            // b has the element; a smaller iff a is a prefix
}

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace widthkit

#endif
