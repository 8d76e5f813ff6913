#pragma once

#include <cstdint>
#include <vector>

#include "apartness/space.hpp"

namespace apartness {

namespace detail {

constexpr int kSubsetSweepCap = 20;   // ops that enumerate 2^n subsets
constexpr int kPairSweepCap = 13;     // ops that enumerate 2^n x 2^n pairs

inline void require_subset_sweep(int n, const char* what) {
    if (n > kSubsetSweepCap)
        throw std::length_error(std::string(what) + ": carrier too large (max " +
                                std::to_string(kSubsetSweepCap) + ")");
}

inline void require_pair_sweep(int n, const char* what) {
    if (n > kPairSweepCap)
        throw std::length_error(std::string(what) + ": carrier too large (max " +
                                std::to_string(kPairSweepCap) + ")");
}

/// Mask-level view of a Space (n <= 20) plus the subset-lattice tables that
/// the 2^n sweeps run on.
///
/// minus_of[m]  = -M for the subset M with membership mask m,
///                computed as the intersection of apartness rows over M
///                (intersection over the empty set is the full carrier);
/// sim_of[m]    = ~M, same with inequality rows.
///
/// Both satisfy the DP recurrence  t[m] = t[m without lowest bit] & row[lowest bit].
struct MaskTables {
    int n;
    std::uint32_t full;
    std::vector<std::uint32_t> p_row, neq_row;
    std::vector<std::uint32_t> minus_of, sim_of;

    explicit MaskTables(const Space& s) : n(s.n) {
        require_subset_sweep(n, "subset-lattice tables");
        full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
        p_row.resize(n);
        neq_row.resize(n);
        for (int x = 0; x < n; ++x) {
            p_row[x] = s.apart_row(x).to_mask();
            neq_row[x] = s.neq_row(x).to_mask();
        }
        const std::size_t count = std::size_t(1) << n;
        minus_of.assign(count, full);
        sim_of.assign(count, full);
        for (std::size_t m = 1; m < count; ++m) {
            const int low = std::countr_zero(static_cast<std::uint32_t>(m));
            const std::size_t rest = m & (m - 1);
            minus_of[m] = minus_of[rest] & p_row[low];
            sim_of[m] = sim_of[rest] & neq_row[low];
        }
    }

};

inline Subset mask_subset(int n, std::uint32_t m) { return Subset::from_mask(n, m); }

} // namespace detail

struct AxiomOptions {
    /// Decide B5 by the literal exists-S search over all 2^n candidates
    /// instead of the canonical-witness reduction. The two must agree; the
    /// equivalence ships as a property test.
    bool b5_brute_force = false;
};

/// Per-axiom verdicts with failure witnesses.
struct AxiomReport {
    CheckResult b1, b2, b3, b4, b5, symmetry;

    bool all_pass() const {
        return b1.ok && b2.ok && b3.ok && b4.ok && b5.ok && symmetry.ok;
    }

    std::vector<std::pair<std::string, const CheckResult*>> entries() const {
        return {{"B1", &b1}, {"B2", &b2}, {"B3", &b3},
                {"B4", &b4}, {"B5", &b5}, {"SYM", &symmetry}};
    }
};

namespace detail {

/// B5 by the literal definition: for every A and x in -A there must be an S
/// with x in -S and X = -A u S. Quadratic in the subset lattice; only the
/// oracle route, the canonical-witness reduction is the shipped fast path.
inline CheckResult b5_by_search(const MaskTables& t) {
    const std::size_t count = std::size_t(1) << t.n;
    for (std::size_t a = 0; a < count; ++a) {
        const std::uint32_t v = t.minus_of[a];
        std::uint32_t members = v;
        while (members) {
            const int x = std::countr_zero(members);
            members &= members - 1;
            bool found = false;
            for (std::size_t s = 0; s < count && !found; ++s)
                if ((t.minus_of[s] & (1u << x)) && ((v | static_cast<std::uint32_t>(s)) == t.full))
                    found = true;
            if (!found) {
                Witness w;
                w.sets = {{"A", mask_subset(t.n, static_cast<std::uint32_t>(a))}};
                w.points = {{"x", x}};
                w.note = "no S with x in -S and X = -A u S (exhaustive search)";
                return CheckResult::fail(std::move(w));
            }
        }
    }
    return CheckResult::pass_note("exhaustive exists-S search");
}

} // namespace detail

/// Decide B1-B5 and symmetry for a Space. B1-B3 and symmetry hold by
/// construction of subset_apart on the collapsed representation; they are
/// still asserted (B3 exhaustively for n <= 5). B4 and B5 are genuine 2^n
/// sweeps:
///   B4  <=>  for all A:  ~V <= -V   where V = -A,
///   B5  <=>  for all A:  X\V <= -V  (canonical witness S = X \ -A; any
///            successful S contains X\-A and - is antitone, so the minimal
///            candidate decides).
inline AxiomReport check_axioms(const Space& s, const AxiomOptions& opts = {}) {
    detail::MaskTables t(s);
    AxiomReport rep;

    // B1: X |><| empty.
    if (!subset_apart(s, Subset::full(s.n), Subset::empty(s.n))) {
        Witness w;
        w.note = "X not apart from the empty set";
        rep.b1 = CheckResult::fail(std::move(w));
    }

    // B2 at point level: p(x,y) => neq(x,y); with B3 collapsed this is
    // exactly -A <= ~A for every A.
    for (int x = 0; x < s.n && rep.b2.ok; ++x)
        for (int y = 0; y < s.n && rep.b2.ok; ++y)
            if (s.p(x, y) && !s.neq(x, y)) {
                Witness w;
                w.points = {{"x", x}, {"y", y}};
                w.note = "apart pair not unequal";
                rep.b2 = CheckResult::fail(std::move(w));
            }

    // Symmetry of the point matrix (the subset relation inherits it).
    for (int x = 0; x < s.n && rep.symmetry.ok; ++x)
        for (int y = x + 1; y < s.n && rep.symmetry.ok; ++y)
            if (s.p(x, y) != s.p(y, x)) {
                Witness w;
                w.points = {{"x", x}, {"y", y}};
                rep.symmetry = CheckResult::fail(std::move(w));
            }

    // B3: an identity of the pointwise definition. Asserted exhaustively on
    // small carriers, structural above that.
    if (s.n <= 5) {
        const std::size_t count = std::size_t(1) << s.n;
        for (std::size_t a1 = 0; a1 < count && rep.b3.ok; ++a1)
            for (std::size_t a2 = a1; a2 < count && rep.b3.ok; ++a2)
                for (std::size_t b1 = 0; b1 < count && rep.b3.ok; ++b1)
                    for (std::size_t b2 = b1; b2 < count && rep.b3.ok; ++b2) {
                        const bool united =
                            (static_cast<std::uint32_t>(b1 | b2) &
                             ~t.minus_of[a1 | a2]) == 0;
                        const bool parts =
                            (static_cast<std::uint32_t>(b1) & ~t.minus_of[a1]) == 0 &&
                            (static_cast<std::uint32_t>(b2) & ~t.minus_of[a1]) == 0 &&
                            (static_cast<std::uint32_t>(b1) & ~t.minus_of[a2]) == 0 &&
                            (static_cast<std::uint32_t>(b2) & ~t.minus_of[a2]) == 0;
                        if (united != parts) {
                            Witness w;
                            w.sets = {{"A1", detail::mask_subset(s.n, a1)},
                                      {"A2", detail::mask_subset(s.n, a2)},
                                      {"B1", detail::mask_subset(s.n, b1)},
                                      {"B2", detail::mask_subset(s.n, b2)}};
                            rep.b3 = CheckResult::fail(std::move(w));
                        }
                    }
        if (rep.b3.ok) rep.b3 = CheckResult::pass_note("exhaustive quadruple check");
    } else {
        rep.b3 = CheckResult::pass_note("holds by construction of subset_apart");
    }

    // B4 sweep: worst B for a given A is ~(-A) itself.
    const std::size_t count = std::size_t(1) << s.n;
    for (std::size_t a = 0; a < count && rep.b4.ok; ++a) {
        const std::uint32_t v = t.minus_of[a];
        if (t.sim_of[v] & ~t.minus_of[v]) {
            Witness w;
            w.sets = {{"A", detail::mask_subset(s.n, static_cast<std::uint32_t>(a))},
                      {"B", detail::mask_subset(s.n, t.sim_of[v])}};
            w.note = "-A <= ~B but not -A <= -B";
            rep.b4 = CheckResult::fail(std::move(w));
        }
    }

    // B5 sweep (canonical witness), or the flagged brute-force search.
    if (opts.b5_brute_force) {
        rep.b5 = detail::b5_by_search(t);
    } else {
        for (std::size_t a = 0; a < count && rep.b5.ok; ++a) {
            const std::uint32_t v = t.minus_of[a];
            const std::uint32_t outside = t.full & ~v;
            if (outside & ~t.minus_of[v]) {
                // name the first x in -A that is not apart from all of X\-A
                std::uint32_t members = v;
                int bad = -1;
                while (members) {
                    const int x = std::countr_zero(members);
                    members &= members - 1;
                    if (outside & ~t.p_row[x]) {
                        bad = x;
                        break;
                    }
                }
                Witness w;
                w.sets = {{"A", detail::mask_subset(s.n, static_cast<std::uint32_t>(a))}};
                w.points = {{"x", bad}};
                w.note = "x in -A but {x} not apart from X minus -A";
                rep.b5 = CheckResult::fail(std::move(w));
            }
        }
    }

    return rep;
}

} // namespace apartness
