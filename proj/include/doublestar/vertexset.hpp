#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace doublestar {

// Fixed-capacity set of vertex ids backed by 64-bit words. Capacity is chosen
// at construction and never changes; all binary operations require equal
// capacities. Word-level popcounts are the performance primitive the rest of
// the library leans on.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : cap_(capacity), words_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {
        assert(capacity >= 0);
    }

    int capacity() const { return cap_; }

    bool contains(int v) const {
        assert(v >= 0 && v < cap_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && v < cap_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < cap_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    // Smallest element, or -1 when empty.
    int smallest() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        }
        return -1;
    }

    // Visits elements in ascending order. The callback may return void, or
    // bool where false stops the scan early.
    template <typename F> void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                int v = static_cast<int>(i * 64 + std::countr_zero(w));
                if constexpr (std::is_void_v<decltype(f(0))>) {
                    f(v);
                } else {
                    if (!f(v)) return;
                }
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend int union_count(const VertexSet& a, const VertexSet& b) {
        assert(a.cap_ == b.cap_);
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) c += std::popcount(a.words_[i] | b.words_[i]);
        return c;
    }

    friend int intersection_count(const VertexSet& a, const VertexSet& b) {
        assert(a.cap_ == b.cap_);
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    bool operator==(const VertexSet&) const = default;

private:
    int cap_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace doublestar
