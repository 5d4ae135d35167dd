#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace secsheaf {

// Subset of a fixed finite universe {0, ..., n-1}, packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.words_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(int universe, const std::vector<int>& elems) {
        Bitset b(universe);
        for (int e : elems) b.set(e);
        return b;
    }

    int universe() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

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

    bool operator==(const Bitset& o) const = default;

    // Numeric order on the packed words; a deterministic total order.
    bool operator<(const Bitset& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const { return full(size_) - *this; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    int first() const {
        for (int i = 0; i < size_; ++i)
            if (test(i)) return i;
        return -1;
    }

    std::string to_string(const std::function<std::string(int)>& name = nullptr) const {
        std::string s = "{";
        bool sep = false;
        for (int i = 0; i < size_; ++i) {
            if (!test(i)) continue;
            if (sep) s += ",";
            s += name ? name(i) : std::to_string(i);
            sep = true;
        }
        return s + "}";
    }

private:
    void trim() {
        int spare = (int)words_.size() * 64 - size_;
        if (spare > 0 && !words_.empty()) words_.back() &= ~uint64_t{0} >> spare;
    }

    int size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace secsheaf
