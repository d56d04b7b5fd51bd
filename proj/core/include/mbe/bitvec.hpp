#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mbe {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
/// The length is set at construction and never changes; xor is word-wise.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size)
        : words_((size + 63) / 64, 0), size_(size) {}

    // "1011" -> bits 0,2,3 set (bit i = i-th character).
    static BitVec from_string(std::string_view s);

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        if (value) {
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        } else {
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Index of the first set bit, or -1 if the vector is zero.
    int first_set() const;

    /// Parity of the AND with another vector (dot product over GF(2)).
    bool dot(const BitVec& other) const;

    /// Sorted list of set-bit indices.
    std::vector<std::size_t> set_bits() const;

    bool operator==(const BitVec& other) const = default;

    /// Order by the bit string read from index 0 (a 0 before a 1 at the
    /// first differing position makes a vector smaller). Used wherever a
    /// deterministic tie-break among incidence vectors is needed.
    bool lex_less(const BitVec& other) const;

    std::size_t hash() const;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

} // namespace mbe
