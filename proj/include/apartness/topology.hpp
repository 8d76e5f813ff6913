#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "apartness/axioms.hpp"
#include "apartness/properties.hpp"
#include "apartness/space.hpp"

namespace apartness {

/// The apartness topology of a Space, fully materialised: the deduplicated
/// basic opens {-A : A <= X} and the family of all their unions. Opens are
/// stored as membership masks with an indicator over the full subset
/// lattice, so openness queries are constant-time. Immutable after build.
class Topology {
public:
    explicit Topology(const Space& s) : space_(s), n_(s.n) {
        if (n_ > 16) throw std::length_error("build_topology: carrier too large (max 16)");
        detail::MaskTables t(s);
        const std::size_t count = std::size_t(1) << n_;

        std::vector<std::uint32_t> b(t.minus_of);
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        basics_ = std::move(b);

        // union closure: after basic b_k is folded in, the list holds every
        // union of a subfamily of {b_1..b_k}
        open_ind_.assign(count, false);
        open_ind_[0] = true;
        std::vector<std::uint32_t> worklist{0};
        for (std::uint32_t basic : basics_) {
            const std::size_t snapshot = worklist.size();
            for (std::size_t i = 0; i < snapshot; ++i) {
                const std::uint32_t u = worklist[i] | basic;
                if (!open_ind_[u]) {
                    open_ind_[u] = true;
                    worklist.push_back(u);
                }
            }
        }
        std::sort(worklist.begin(), worklist.end());
        opens_ = std::move(worklist);

        min_nbhd_.resize(n_);
        for (int x = 0; x < n_; ++x) min_nbhd_[x] = t.minus_of[t.p_row[x]];
    }

    const Space& space() const { return space_; }
    int carrier() const { return n_; }

    std::vector<Subset> basics() const { return to_subsets(basics_); }
    std::vector<Subset> opens() const { return to_subsets(opens_); }
    std::size_t open_count() const { return opens_.size(); }

    bool is_open(const Subset& s) const { return open_ind_[mask_of(s)]; }
    bool is_closed(const Subset& s) const { return open_ind_[full_mask() & ~mask_of(s)]; }

    /// Largest open inside S: the union of all opens below it.
    Subset interior(const Subset& s) const {
        const std::uint32_t m = mask_of(s);
        std::uint32_t acc = 0;
        for (std::uint32_t o : opens_)
            if ((o & ~m) == 0) acc |= o;
        return Subset::from_mask(n_, acc);
    }

    /// Smallest closed superset.
    Subset closure(const Subset& s) const {
        const std::uint32_t m = mask_of(s);
        Subset inner = interior(Subset::from_mask(n_, full_mask() & ~m));
        return Subset::from_mask(n_, full_mask() & ~inner.to_mask());
    }

    bool is_dense(const Subset& s) const { return closure(s).is_full(); }

    /// -P_x: the smallest basic open containing x (every -A with x in -A
    /// has A <= P_x, so -P_x sits below it).
    Subset min_neighborhood(int x) const {
        if (x < 0 || x >= n_) throw std::out_of_range("min_neighborhood: point outside carrier");
        return Subset::from_mask(n_, min_nbhd_[x]);
    }

private:
    std::uint32_t full_mask() const { return (n_ == 0) ? 0 : ((1u << n_) - 1); }
    std::uint32_t mask_of(const Subset& s) const {
        if (s.size() != n_) throw std::invalid_argument("Topology: subset size mismatch");
        return s.to_mask();
    }
    std::vector<Subset> to_subsets(const std::vector<std::uint32_t>& masks) const {
        std::vector<Subset> out;
        out.reserve(masks.size());
        for (auto m : masks) out.push_back(Subset::from_mask(n_, m));
        return out;
    }

    Space space_;
    int n_;
    std::vector<std::uint32_t> basics_, opens_;
    std::vector<bool> open_ind_;
    std::vector<std::uint32_t> min_nbhd_;
};

inline Topology build_topology(const Space& s) { return Topology(s); }

/// Density without materialising the topology: S is dense iff every point's
/// minimal neighborhood meets S. Works for any carrier size.
inline bool dense_in_space(const Space& s, const Subset& sub) {
    check_sized_for(s, sub, "dense_in_space");
    for (int x = 0; x < s.n; ++x)
        if (!min_neighborhood_in(s, x).intersects(sub)) return false;
    return true;
}

/// Closure without materialising the topology; agrees with
/// Topology::closure (asserted by tests).
inline Subset closure_in_space(const Space& s, const Subset& sub) {
    check_sized_for(s, sub, "closure_in_space");
    Subset out(s.n);
    for (int x = 0; x < s.n; ++x)
        if (min_neighborhood_in(s, x).intersects(sub)) out.set(x);
    return out;
}

/// (D12): A |><| B iff cl(A) |><| cl(B), closures taken in the apartness
/// topology. Compared over all subset pairs.
inline PropertyReport check_d12(const Space& s, const Topology& top) {
    detail::require_pair_sweep(s.n, "check_d12");
    if (top.carrier() != s.n) throw std::invalid_argument("check_d12: topology size mismatch");
    detail::MaskTables t(s);
    const std::size_t count = std::size_t(1) << s.n;
    std::vector<std::uint32_t> cl(count);
    for (std::uint32_t m = 0; m < count; ++m)
        cl[m] = top.closure(Subset::from_mask(s.n, m)).to_mask();
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            const bool plain = (b & ~t.minus_of[a]) == 0;
            const bool closed = (cl[b] & ~t.minus_of[cl[a]]) == 0;
            if (plain != closed) {
                Witness w;
                w.sets = {{"A", detail::mask_subset(s.n, a)},
                          {"B", detail::mask_subset(s.n, b)}};
                w.note = plain ? "apart but closures are not" : "closures apart but sets are not";
                return PropertyReport::fail("D12", std::move(w));
            }
        }
    return PropertyReport::pass("D12");
}

inline PropertyReport check_d12(const Space& s) { return check_d12(s, Topology(s)); }

} // namespace apartness
