#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace tdk {

// Fixed-capacity dynamic bitset over 64-bit words. Just enough surface for the
// branch-and-bound solvers; capacity is set once and all operands must match.
class dynbitset {
  public:
    dynbitset() = default;
    explicit dynbitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    // Lowest set bit, or -1.
    int first() const {
        for (size_t b = 0; b < w_.size(); ++b)
            if (w_[b]) return int(b) * 64 + std::countr_zero(w_[b]);
        return -1;
    }
    // Lowest set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t b = size_t(i) >> 6;
        uint64_t w = w_[b] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(b) * 64 + std::countr_zero(w);
            if (++b == w_.size()) return -1;
            w = w_[b];
        }
    }

    dynbitset& operator&=(const dynbitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t b = 0; b < w_.size(); ++b) w_[b] &= o.w_[b];
        return *this;
    }
    dynbitset& operator|=(const dynbitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t b = 0; b < w_.size(); ++b) w_[b] |= o.w_[b];
        return *this;
    }
    // this \ o
    dynbitset& operator-=(const dynbitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t b = 0; b < w_.size(); ++b) w_[b] &= ~o.w_[b];
        return *this;
    }

    friend dynbitset operator&(dynbitset a, const dynbitset& b) { return a &= b; }
    friend dynbitset operator|(dynbitset a, const dynbitset& b) { return a |= b; }
    friend dynbitset operator-(dynbitset a, const dynbitset& b) { return a -= b; }

    bool intersects(const dynbitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t b = 0; b < w_.size(); ++b)
            if (w_[b] & o.w_[b]) return true;
        return false;
    }
    bool operator==(const dynbitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace tdk
