#ifndef GRAPHPOW_BITSET_HPP
#define GRAPHPOW_BITSET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace graphpow {

namespace bits {

inline int word_count(int nbits) { return (nbits + 63) / 64; }

inline long long popcount(std::span<const uint64_t> words) {
    long long c = 0;
    for (uint64_t w : words) c += std::popcount(w);
    return c;
}

inline long long popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    long long c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

template <class F>
inline void for_each_set(std::span<const uint64_t> words, F&& f) {
    for (size_t wi = 0; wi < words.size(); ++wi) {
        uint64_t w = words[wi];
        while (w) {
            int b = std::countr_zero(w);
            f(static_cast<int>(wi * 64 + b));
            w &= w - 1;
        }
    }
}

}  // namespace bits

// Set of vertex ids over a fixed universe [0, n), stored as 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(bits::word_count(universe), 0) {}

    int universe() const { return universe_; }
    void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    long long count() const { return bits::popcount(words_); }

    std::span<const uint64_t> words() const { return words_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        bits::for_each_set(words_, [&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const { bits::for_each_set(words_, f); }

    bool operator==(const VertexSet&) const = default;

private:
    int universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace graphpow

#endif
