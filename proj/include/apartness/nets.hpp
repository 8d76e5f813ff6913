#pragma once

#include <cstdint>
#include <vector>

#include "apartness/properties.hpp"
#include "apartness/space.hpp"

namespace apartness {

/// A net over a finite directed index set. preceq(a,b) reads "b succeeds a"
/// (b >= a in the preorder); values maps indices to carrier points.
/// Reflexivity, transitivity and directedness are checked at construction.
struct DirectedNet {
    int m = 0;
    BoolMatrix preceq;
    std::vector<int> values;

    DirectedNet(BoolMatrix order, std::vector<int> vals)
        : m(order.size()), preceq(std::move(order)), values(std::move(vals)) {
        if (m <= 0) throw std::invalid_argument("DirectedNet: index set must be inhabited");
        if (static_cast<int>(values.size()) != m)
            throw std::invalid_argument("DirectedNet: one value per index required");
        for (int a = 0; a < m; ++a)
            if (!preceq.at(a, a)) throw std::invalid_argument("DirectedNet: preorder not reflexive");
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (preceq.at(a, b) && preceq.at(b, c) && !preceq.at(a, c))
                        throw std::invalid_argument("DirectedNet: preorder not transitive");
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                bool bound = false;
                for (int c = 0; c < m && !bound; ++c)
                    if (preceq.at(a, c) && preceq.at(b, c)) bound = true;
                if (!bound) throw std::invalid_argument("DirectedNet: index set not directed");
            }
    }

    /// Total order 0 <= 1 <= ... <= m-1 with the given values.
    static DirectedNet linear(std::vector<int> vals) {
        const int m = static_cast<int>(vals.size());
        BoolMatrix ord(m);
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) ord.set(a, b, true);
        return DirectedNet(std::move(ord), std::move(vals));
    }

    /// Indices succeeding N: {i : i >= N}.
    std::uint32_t tail_mask(int pivot) const {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i)
            if (preceq.at(pivot, i)) mask |= 1u << i;
        return mask;
    }

    void check_values_in(const Space& s) const {
        for (int v : values)
            if (v < 0 || v >= s.n)
                throw std::invalid_argument("DirectedNet: value outside the carrier");
    }
};

/// The two polarities of the totally-Cauchy tail condition. AS_PRINTED
/// keeps the inner negation of the source formula verbatim (which even
/// constant nets fail); CORRECTED reads "not both tails inhabited" and is
/// the default everywhere.
enum class TotallyCauchyVariant { kCorrected, kAsPrinted };

inline const char* to_string(TotallyCauchyVariant v) {
    return v == TotallyCauchyVariant::kCorrected ? "CORRECTED" : "AS_PRINTED";
}

/// A net is totally Cauchy when for all index subsets A, B whose image sets
/// are apart there is an N past which the tails of A and B cannot straddle
/// the apart pair. Exhaustive over the 4^m subset pairs; m <= 8.
inline PropertyReport totally_cauchy(const DirectedNet& net, const Space& s,
                                     TotallyCauchyVariant variant = TotallyCauchyVariant::kCorrected) {
    if (net.m > 8) throw std::length_error("totally_cauchy: index set too large (max 8)");
    net.check_values_in(s);
    const std::string name = std::string("TOTALLY_CAUCHY(") + to_string(variant) + ")";
    const std::size_t count = std::size_t(1) << net.m;

    std::vector<Subset> image(count, Subset(s.n));
    for (std::size_t a = 1; a < count; ++a) {
        image[a] = image[a & (a - 1)];
        image[a].set(net.values[std::countr_zero(static_cast<std::uint32_t>(a))]);
    }
    std::vector<std::uint32_t> tails(net.m);
    for (int i = 0; i < net.m; ++i) tails[i] = net.tail_mask(i);

    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            if (!subset_apart(s, image[a], image[b])) continue;
            bool found = false;
            for (int pivot = 0; pivot < net.m && !found; ++pivot) {
                const bool a_tail = (a & tails[pivot]) != 0;
                const bool b_tail = (b & tails[pivot]) != 0;
                const bool bad =
                    variant == TotallyCauchyVariant::kCorrected ? (a_tail && b_tail)
                                                                : (a_tail && !b_tail);
                if (!bad) found = true;
            }
            if (!found) {
                Witness w;
                w.sets = {{"A", Subset::from_mask(net.m, a)},
                          {"B", Subset::from_mask(net.m, b)}};
                w.note = "index subsets over the net's index set; no admissible N";
                return PropertyReport::fail(name, std::move(w));
            }
        }
    return PropertyReport::pass(name);
}

/// Convergence in the apartness topology: eventually inside every basic
/// open containing x. The minimal such open is -P_x, and eventual
/// containment there implies it everywhere, so one tail check decides.
inline bool net_converges(const DirectedNet& net, const Space& s, int x) {
    if (x < 0 || x >= s.n) throw std::invalid_argument("net_converges: point outside carrier");
    net.check_values_in(s);
    const Subset nbhd = min_neighborhood_in(s, x);
    for (int pivot = 0; pivot < net.m; ++pivot) {
        bool all_in = true;
        for (int i = 0; i < net.m && all_in; ++i)
            if (net.preceq.at(pivot, i) && !nbhd.test(net.values[i])) all_in = false;
        if (all_in) return true;
    }
    return false;
}

} // namespace apartness
