#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace grel {

// Fixed-capacity bitset sized at construction. Capacity is the universe size
// (a vertex range); all binary operations assume equal capacity.
class Bitset {
 public:
    Bitset() = default;
    explicit Bitset(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    int capacity() const { return capacity_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void set_all() {
        if (capacity_ == 0) return;
        std::fill(words_.begin(), words_.end(), ~uint64_t(0));
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= capacity_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == (int)words_.size()) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset complement() const {
        Bitset r(capacity_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = next(); i >= 0; i = next(i + 1)) v.push_back(i);
        return v;
    }

 private:
    void trim() {
        if (capacity_ & 63) words_.back() &= (~uint64_t(0)) >> (64 - (capacity_ & 63));
    }

    int capacity_ = 0;
    std::vector<uint64_t> words_;
};

inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

}  // namespace grel
