#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "apartness/subset.hpp"

namespace apartness {

/// Square boolean matrix with Subset-valued row access.
class BoolMatrix {
public:
    BoolMatrix() = default;

    explicit BoolMatrix(int n) : n_(n), stride_((n + 63) / 64), data_(std::size_t(n) * stride_, 0) {
        if (n < 0) throw std::invalid_argument("BoolMatrix: negative size");
    }

    static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        BoolMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("BoolMatrix: ragged rows");
            for (int j = 0; j < n; ++j)
                if (rows[i][j]) m.set(i, j, true);
        }
        return m;
    }

    int size() const { return n_; }

    bool at(int i, int j) const {
        check(i), check(j);
        return (data_[std::size_t(i) * stride_ + (j >> 6)] >> (j & 63)) & 1;
    }

    void set(int i, int j, bool v) {
        check(i), check(j);
        auto& w = data_[std::size_t(i) * stride_ + (j >> 6)];
        if (v)
            w |= 1ULL << (j & 63);
        else
            w &= ~(1ULL << (j & 63));
    }

    /// Row i as the subset {j : at(i,j)}.
    Subset row(int i) const {
        check(i);
        Subset s(n_);
        for (int j = 0; j < n_; ++j)
            if (at(i, j)) s.set(j);
        return s;
    }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool diagonal_all_false() const {
        for (int i = 0; i < n_; ++i)
            if (at(i, i)) return false;
        return true;
    }

    bool operator==(const BoolMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }
    bool operator!=(const BoolMatrix& o) const { return !(*this == o); }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("BoolMatrix: index out of range");
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace apartness
