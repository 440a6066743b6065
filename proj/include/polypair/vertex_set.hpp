#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace polypair {

// Dynamic bitset over dense 0-based ids. Two sets compare equal only if they
// were created with the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int id : ids) insert(id);
    }
    template <typename Range>
    static VertexSet from(std::size_t universe, const Range& ids) {
        VertexSet s(universe);
        for (int id : ids) s.insert(id);
        return s;
    }
    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<int>(i));
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    void insert(int id) { words_[id >> 6] |= (std::uint64_t{1} << (id & 63)); }
    void erase(int id) { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }
    bool contains(int id) const { return (words_[id >> 6] >> (id & 63)) & 1u; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

} // namespace polypair
