#ifndef CLIQUEKIT_BITSET_HPP
#define CLIQUEKIT_BITSET_HPP

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cliquekit {

/// Fixed-capacity set of vertex IDs packed into unsigned machine words.
/// The default word width is 32 bits; a wider word can be selected at build
/// time through the template parameter.
///
/// Bits at positions >= capacity are always zero, so popcounting the words
/// gives the exact cardinality.
template <std::unsigned_integral Word = std::uint32_t>
class BasicVertexBitset {
public:
    using word_type = Word;
    static constexpr std::size_t word_bits = std::numeric_limits<Word>::digits;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BasicVertexBitset() = default;

    explicit BasicVertexBitset(std::size_t capacity)
        : words_((capacity + word_bits - 1) / word_bits, Word{0}), capacity_(capacity) {}

    std::size_t capacity() const { return capacity_; }

    void insert(std::size_t v) {
        check_range(v);
        words_[v / word_bits] |= Word{1} << (v % word_bits);
    }

    void remove(std::size_t v) {
        check_range(v);
        words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
    }

    bool contains(std::size_t v) const {
        if (v >= capacity_) return false;
        return (words_[v / word_bits] >> (v % word_bits)) & Word{1};
    }

    void clear() { words_.assign(words_.size(), Word{0}); }

    std::size_t count() const {
        std::size_t total = 0;
        for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }

    void intersect_with(const BasicVertexBitset& other) {
        check_capacity(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    }

    std::size_t intersection_count(const BasicVertexBitset& other) const {
        check_capacity(other);
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return total;
    }

    /// this = a & b. All three operands must share a capacity.
    void assign_intersection(const BasicVertexBitset& a, const BasicVertexBitset& b) {
        check_capacity(a);
        check_capacity(b);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
    }

    /// Lowest member, or npos when empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return npos;
    }

    /// Lowest member strictly greater than v, or npos.
    std::size_t next(std::size_t v) const {
        std::size_t i = (v + 1) / word_bits;
        if (i >= words_.size()) return npos;
        Word w = words_[i] & (~Word{0} << ((v + 1) % word_bits));
        while (true) {
            if (w != 0) return i * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++i >= words_.size()) return npos;
            w = words_[i];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(i * word_bits + bit);
                w &= w - Word{1};
            }
        }
    }

    class const_iterator {
    public:
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        const_iterator(const BasicVertexBitset* set, std::size_t pos) : set_(set), pos_(pos) {}

        std::size_t operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next(pos_);
            return *this;
        }
        const_iterator operator++(int) {
            const_iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.pos_ == b.pos_;
        }

    private:
        const BasicVertexBitset* set_ = nullptr;
        std::size_t pos_ = npos;
    };

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, npos); }

    friend bool operator==(const BasicVertexBitset& a, const BasicVertexBitset& b) {
        return a.capacity_ == b.capacity_ && a.words_ == b.words_;
    }

private:
    void check_range(std::size_t v) const {
        if (v >= capacity_)
            throw std::out_of_range("vertex bitset: id " + std::to_string(v) +
                                    " outside capacity " + std::to_string(capacity_));
    }

    void check_capacity(const BasicVertexBitset& other) const {
        if (capacity_ != other.capacity_)
            throw std::invalid_argument("vertex bitset: capacity mismatch (" +
                                        std::to_string(capacity_) + " vs " +
                                        std::to_string(other.capacity_) + ")");
    }

    std::vector<Word> words_;
    std::size_t capacity_ = 0;
};

using VertexBitset = BasicVertexBitset<>;

}  // namespace cliquekit

#endif
