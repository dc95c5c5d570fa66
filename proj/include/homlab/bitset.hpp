#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace homlab {

// Fixed-size bitset sized at runtime. The solver's hot loop is
// intersecting candidate sets with adjacency rows, so everything here
// stays word-wise and branch-light.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n, bool ones = false) : n_(n), w_((n + 63) / 64, ones ? ~0ull : 0ull)
    {
        trim();
    }

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear()
    {
        for (auto & w : w_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : w_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const
    {
        for (auto w : w_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    // index of lowest set bit, or size() if empty
    std::size_t first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
        return n_;
    }

    // next set bit at position >= i, or size()
    std::size_t next(std::size_t i) const
    {
        if (i >= n_)
            return n_;
        std::size_t word = i >> 6;
        std::uint64_t cur = w_[word] & (~0ull << (i & 63));
        while (true) {
            if (cur)
                return word * 64 + static_cast<std::size_t>(__builtin_ctzll(cur));
            if (++word >= w_.size())
                return n_;
            cur = w_[word];
        }
    }

    Bitset & operator&=(const Bitset & o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    Bitset & operator|=(const Bitset & o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    bool intersects(const Bitset & o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }

    bool operator==(const Bitset & o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    void trim()
    {
        if (n_ & 63)
            if (!w_.empty())
                w_.back() &= (~0ull >> (64 - (n_ & 63)));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}
