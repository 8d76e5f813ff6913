#pragma once

#include <cstdint>
#include <vector>

#include "apartness/axioms.hpp"
#include "apartness/space.hpp"

namespace apartness {

/// A full 2^n x 2^n subset-pair apartness table, indexed by membership
/// masks. Candidate relations may violate any axiom; that is their purpose.
/// Carrier capped at 13 (the table is ~8 MB of bits there).
class RawRelation {
public:
    explicit RawRelation(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("RawRelation: negative carrier");
        detail::require_pair_sweep(n, "RawRelation");
        bits_.assign(((std::size_t(1) << (2 * n)) + 63) / 64, 0);
    }

    int carrier() const { return n_; }
    std::uint32_t full_mask() const { return (1u << n_) - 1; }
    std::size_t subset_count() const { return std::size_t(1) << n_; }

    bool at(std::uint32_t a, std::uint32_t b) const {
        const std::size_t idx = index(a, b);
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }

    void set(std::uint32_t a, std::uint32_t b, bool v) {
        const std::size_t idx = index(a, b);
        if (v)
            bits_[idx >> 6] |= 1ULL << (idx & 63);
        else
            bits_[idx >> 6] &= ~(1ULL << (idx & 63));
    }

    bool at(const Subset& a, const Subset& b) const { return at(a.to_mask(), b.to_mask()); }

    bool operator==(const RawRelation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::size_t index(std::uint32_t a, std::uint32_t b) const {
        if (a > full_mask() || b > full_mask())
            throw std::out_of_range("RawRelation: mask out of range");
        return (std::size_t(a) << n_) | b;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Symmetry of a raw relation, with a witness pair of subsets.
inline CheckResult check_symmetry(const RawRelation& rel) {
    const std::size_t count = rel.subset_count();
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = a + 1; b < count; ++b)
            if (rel.at(a, b) != rel.at(b, a)) {
                Witness w;
                w.sets = {{"A", Subset::from_mask(rel.carrier(), a)},
                          {"B", Subset::from_mask(rel.carrier(), b)}};
                return CheckResult::fail(std::move(w));
            }
    return CheckResult::pass();
}

/// The table of subset_apart: usable only when the Space representation is
/// meaningful, i.e. n <= 13.
inline RawRelation raw_from_space(const Space& s) {
    detail::require_pair_sweep(s.n, "raw_from_space");
    detail::MaskTables t(s);
    RawRelation rel(s.n);
    const std::size_t count = rel.subset_count();
    for (std::uint32_t a = 0; a < count; ++a) {
        const std::uint32_t m = t.minus_of[a];
        for (std::uint32_t b = 0; b < count; ++b)
            if ((b & ~m) == 0) rel.set(a, b, true);
    }
    return rel;
}

/// Restrict a raw table to singleton pairs. Construction fails if the
/// restriction violates the Space invariants (diagonal, symmetry, p <= neq).
inline Space space_from_raw(const RawRelation& rel, const Inequality& ineq) {
    if (ineq.n != rel.carrier())
        throw std::invalid_argument("space_from_raw: inequality size mismatch");
    BoolMatrix p(rel.carrier());
    for (int x = 0; x < rel.carrier(); ++x)
        for (int y = 0; y < rel.carrier(); ++y)
            if (rel.at(1u << x, 1u << y)) p.set(x, y, true);
    return Space(ineq, PointApartness(rel.carrier(), std::move(p)));
}

namespace detail {

/// -A and ~A computed from a raw table's singleton rows.
struct RawComplements {
    std::vector<std::uint32_t> minus_of, sim_of;

    RawComplements(const RawRelation& rel, const Inequality& ineq) {
        const int n = rel.carrier();
        const std::size_t count = rel.subset_count();
        minus_of.assign(count, 0);
        sim_of.assign(count, 0);
        std::vector<std::uint32_t> neq_row(n, 0);
        for (int x = 0; x < n; ++x) neq_row[x] = Subset(ineq.neq.row(x)).to_mask();
        for (std::uint32_t a = 0; a < count; ++a) {
            std::uint32_t mv = 0, sv = rel.full_mask();
            for (int x = 0; x < n; ++x)
                if (rel.at(1u << x, a)) mv |= 1u << x;
            std::uint32_t rest = a;
            while (rest) {
                const int s = std::countr_zero(rest);
                rest &= rest - 1;
                sv &= neq_row[s];
            }
            minus_of[a] = mv;
            sim_of[a] = sv;
        }
    }
};

} // namespace detail

/// Axiom verdicts for an arbitrary candidate relation. Unlike check_axioms,
/// nothing is structural here: B3 is itself under test (via the
/// principal-ideal characterisation of its quadruple form, with an explicit
/// violating quadruple as witness), and B5 falls back to the genuine
/// exists-S search whenever B3 fails, because the canonical-witness
/// shortcut is only valid under B3.
inline AxiomReport check_axioms_raw(const RawRelation& rel, const Inequality& ineq) {
    const int n = rel.carrier();
    if (ineq.n != n) throw std::invalid_argument("check_axioms_raw: inequality size mismatch");
    const std::size_t count = rel.subset_count();
    const std::uint32_t full = rel.full_mask();
    AxiomReport rep;

    // B1
    if (!rel.at(full, 0u)) {
        Witness w;
        w.note = "X not apart from the empty set";
        rep.b1 = CheckResult::fail(std::move(w));
    }

    rep.symmetry = check_symmetry(rel);

    detail::RawComplements comp(rel, ineq);

    // B2: -A <= ~A for every A.
    for (std::uint32_t a = 0; a < count && rep.b2.ok; ++a)
        if (comp.minus_of[a] & ~comp.sim_of[a]) {
            const int x = std::countr_zero(comp.minus_of[a] & ~comp.sim_of[a]);
            Witness w;
            w.sets = {{"A", Subset::from_mask(n, a)}};
            w.points = {{"x", x}};
            w.note = "x in -A but x not in ~A";
            rep.b2 = CheckResult::fail(std::move(w));
        }

    // B3 via row/column structure: for each A the family {B : A |><| B}
    // must be empty or the full down-set of its union, and dually for
    // columns. That is equivalent to the quadruple form, and each failure
    // converts to a violating quadruple.
    auto check_principal = [&](bool rows) -> CheckResult {
        for (std::uint32_t a = 0; a < count; ++a) {
            std::uint32_t hull = 0;
            bool seen = false;
            for (std::uint32_t b = 0; b < count; ++b)
                if (rows ? rel.at(a, b) : rel.at(b, a)) {
                    hull |= b;
                    seen = true;
                }
            if (!seen) continue;
            // locate a member chain failure: either the hull itself is not
            // a member (union-closure break) or some subset of a member is
            // not a member (downward-closure break)
            for (std::uint32_t b = 0; b < count; ++b) {
                const bool member = rows ? rel.at(a, b) : rel.at(b, a);
                if (member || (b & ~hull) != 0) continue;
                // b <= hull yet not a member; build the quadruple
                Witness w;
                if (rows ? rel.at(a, hull) : rel.at(hull, a)) {
                    // downward closure fails against the hull
                    w.sets = {{rows ? "A1" : "B1", Subset::from_mask(n, a)},
                              {rows ? "A2" : "B2", Subset::from_mask(n, a)},
                              {rows ? "B1" : "A1", Subset::from_mask(n, b)},
                              {rows ? "B2" : "A2", Subset::from_mask(n, hull)}};
                    w.note = "union apart but a part is not";
                } else {
                    // accumulate members until the running union stops
                    // being a member
                    std::uint32_t acc = 0;
                    std::uint32_t last = 0, step = 0;
                    for (std::uint32_t c = 0; c < count; ++c) {
                        if (!(rows ? rel.at(a, c) : rel.at(c, a))) continue;
                        const std::uint32_t next = acc | c;
                        if (next == acc) continue;
                        if (!(rows ? rel.at(a, next) : rel.at(next, a))) {
                            last = acc;
                            step = c;
                            break;
                        }
                        acc = next;
                    }
                    w.sets = {{rows ? "A1" : "B1", Subset::from_mask(n, a)},
                              {rows ? "A2" : "B2", Subset::from_mask(n, a)},
                              {rows ? "B1" : "A1", Subset::from_mask(n, last)},
                              {rows ? "B2" : "A2", Subset::from_mask(n, step)}};
                    w.note = "parts apart but their union is not";
                }
                return CheckResult::fail(std::move(w));
            }
        }
        return CheckResult::pass();
    };
    rep.b3 = check_principal(true);
    if (rep.b3.ok) rep.b3 = check_principal(false);

    // B4 over all pairs.
    for (std::uint32_t a = 0; a < count && rep.b4.ok; ++a)
        for (std::uint32_t b = 0; b < count && rep.b4.ok; ++b)
            if ((comp.minus_of[a] & ~comp.sim_of[b]) == 0 &&
                (comp.minus_of[a] & ~comp.minus_of[b]) != 0) {
                Witness w;
                w.sets = {{"A", Subset::from_mask(n, a)}, {"B", Subset::from_mask(n, b)}};
                w.note = "-A <= ~B but not -A <= -B";
                rep.b4 = CheckResult::fail(std::move(w));
            }

    // B5: canonical witness only under B3; otherwise the genuine search.
    if (rep.b3.ok) {
        for (std::uint32_t a = 0; a < count && rep.b5.ok; ++a) {
            const std::uint32_t v = comp.minus_of[a];
            std::uint32_t members = v;
            while (members && rep.b5.ok) {
                const int x = std::countr_zero(members);
                members &= members - 1;
                if (!rel.at(1u << x, full & ~v)) {
                    Witness w;
                    w.sets = {{"A", Subset::from_mask(n, a)}};
                    w.points = {{"x", x}};
                    w.note = "x in -A but {x} not apart from X minus -A";
                    rep.b5 = CheckResult::fail(std::move(w));
                }
            }
        }
        if (rep.b5.ok) rep.b5 = CheckResult::pass_note("canonical witness (B3 holds)");
    } else {
        for (std::uint32_t a = 0; a < count && rep.b5.ok; ++a) {
            const std::uint32_t v = comp.minus_of[a];
            std::uint32_t members = v;
            while (members && rep.b5.ok) {
                const int x = std::countr_zero(members);
                members &= members - 1;
                bool found = false;
                for (std::uint32_t sset = 0; sset < count && !found; ++sset)
                    if ((comp.minus_of[sset] & (1u << x)) && ((v | sset) == full)) found = true;
                if (!found) {
                    Witness w;
                    w.sets = {{"A", Subset::from_mask(n, a)}};
                    w.points = {{"x", x}};
                    w.note = "no S with x in -S and X = -A u S (exhaustive search)";
                    rep.b5 = CheckResult::fail(std::move(w));
                }
            }
        }
        if (rep.b5.ok) rep.b5 = CheckResult::pass_note("exhaustive exists-S search (B3 failed)");
    }

    return rep;
}

} // namespace apartness
