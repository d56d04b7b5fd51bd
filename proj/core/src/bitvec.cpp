#include "mbe/bitvec.hpp"

#include <stdexcept>

namespace mbe {

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            v.set(i);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitVec::from_string: expected 0/1");
        }
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitVec xor: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

int BitVec::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        }
    }
    return -1;
}

bool BitVec::dot(const BitVec& other) const {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitVec dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVec::lex_less(const BitVec& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff != 0) {
            // First differing bit; the vector holding a 0 there is smaller.
            int b = std::countr_zero(diff);
            return ((words_[i] >> b) & 1u) == 0;
        }
    }
    return false;
}

std::size_t BitVec::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    h ^= size_;
    return static_cast<std::size_t>(h * 0x9e3779b97f4a7c15ull);
}

} // namespace mbe
