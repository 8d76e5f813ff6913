#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apartness {

/// A subset of a finite carrier {0, ..., n-1}, stored as a bit vector.
/// Bit i set means point i is a member. The length is fixed at construction
/// and must match the carrier of the space the subset is used with.
class Subset {
public:
    Subset() = default;

    explicit Subset(int n) : n_(check_size(n)), words_((n + 63) / 64, 0) {}

    static Subset empty(int n) { return Subset(n); }

    static Subset full(int n) {
        Subset s(n);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }

    static Subset of(int n, std::initializer_list<int> indices) {
        Subset s(n);
        for (int i : indices) s.set(i);
        return s;
    }

    static Subset from_indices(int n, const std::vector<int>& indices) {
        Subset s(n);
        for (int i : indices) s.set(i);
        return s;
    }

    /// Low 'n' bits of 'mask' become the membership pattern; n <= 32.
    static Subset from_mask(int n, std::uint32_t mask) {
        if (n > 32) throw std::invalid_argument("Subset::from_mask: carrier too large");
        Subset s(n);
        if (n > 0) s.words_[0] = mask & (n == 32 ? 0xffffffffULL : ((1ULL << n) - 1));
        return s;
    }

    int size() const { return n_; }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        check_index(i);
        words_[i >> 6] |= 1ULL << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(1ULL << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool is_full() const { return count() == n_; }

    Subset operator&(const Subset& o) const {
        Subset r = binary_ready(o);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }

    Subset operator|(const Subset& o) const {
        Subset r = binary_ready(o);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }

    /// Set difference: members of *this that are not members of o.
    Subset minus(const Subset& o) const {
        Subset r = binary_ready(o);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }

    Subset complemented() const {
        Subset r(n_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool is_subset_of(const Subset& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const Subset& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    void and_with(const Subset& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    }

    void or_with(const Subset& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    }

    bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }

    /// Lexicographic on (size, lowest-index-first membership); a total order
    /// used wherever deterministic output requires sorting subsets.
    bool operator<(const Subset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        return false;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F> void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    /// Membership pattern packed in a word; requires n <= 32.
    std::uint32_t to_mask() const {
        if (n_ > 32) throw std::invalid_argument("Subset::to_mask: carrier too large");
        return n_ == 0 ? 0 : static_cast<std::uint32_t>(words_[0]);
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        });
        return out + "}";
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }

private:
    static int check_size(int n) {
        if (n < 0) throw std::invalid_argument("Subset: negative carrier size");
        return n;
    }
    void check_index(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Subset: index out of range");
    }
    void check_same(const Subset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Subset: size mismatch");
    }
    Subset binary_ready(const Subset& o) const {
        check_same(o);
        return Subset(n_);
    }
    void trim() {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace apartness

template <> struct std::hash<apartness::Subset> {
    std::size_t operator()(const apartness::Subset& s) const { return s.hash(); }
};
