#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apartness/matrix.hpp"
#include "apartness/subset.hpp"

namespace apartness {

/// Named parts of a counterexample: the sets and points instantiating a
/// failed axiom or property, plus a free-form note.
struct Witness {
    std::vector<std::pair<std::string, Subset>> sets;
    std::vector<std::pair<std::string, int>> points;
    std::string note;

    bool empty() const { return sets.empty() && points.empty() && note.empty(); }

    std::string to_string() const {
        std::string out;
        for (const auto& [k, v] : sets) out += (out.empty() ? "" : ", ") + k + "=" + v.to_string();
        for (const auto& [k, v] : points)
            out += (out.empty() ? "" : ", ") + k + "=" + std::to_string(v);
        if (!note.empty()) out += (out.empty() ? "" : " ") + ("[" + note + "]");
        return out;
    }
};

struct CheckResult {
    bool ok = true;
    Witness witness;

    static CheckResult pass() { return {}; }
    static CheckResult pass_note(std::string note) {
        CheckResult r;
        r.witness.note = std::move(note);
        return r;
    }
    static CheckResult fail(Witness w) { return {false, std::move(w)}; }
};

/// Point-level inequality relation on a finite carrier.
/// Invariants: irreflexive, symmetric. Tightness is a property to check,
/// not an invariant.
struct Inequality {
    int n = 0;
    BoolMatrix neq;

    Inequality() = default;
    Inequality(int n_, BoolMatrix m) : n(n_), neq(std::move(m)) { validate(); }

    /// neq(x,y) iff x and y are distinct indices.
    static Inequality denotational(int n_) {
        BoolMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j) m.set(i, j, true);
        return Inequality(n_, std::move(m));
    }

    /// The all-false relation: no two points are unequal.
    static Inequality indiscrete(int n_) { return Inequality(n_, BoolMatrix(n_)); }

    bool at(int x, int y) const { return neq.at(x, y); }

    void validate() const {
        if (neq.size() != n) throw std::invalid_argument("Inequality: matrix size mismatch");
        if (!neq.diagonal_all_false())
            throw std::invalid_argument("Inequality: relation must be irreflexive");
        if (!neq.is_symmetric())
            throw std::invalid_argument("Inequality: relation must be symmetric");
    }
};

/// Point-level apartness matrix: p(x,y) means {x} apart {y}.
/// Symmetric with a false diagonal; must sit below the inequality of the
/// enclosing Space.
struct PointApartness {
    int n = 0;
    BoolMatrix p;

    PointApartness() = default;
    PointApartness(int n_, BoolMatrix m) : n(n_), p(std::move(m)) { validate(); }

    bool at(int x, int y) const { return p.at(x, y); }

    void validate() const {
        if (p.size() != n) throw std::invalid_argument("PointApartness: matrix size mismatch");
        if (!p.diagonal_all_false())
            throw std::invalid_argument("PointApartness: diagonal must be false");
        if (!p.is_symmetric()) throw std::invalid_argument("PointApartness: must be symmetric");
    }
};

/// A finite carrier with an inequality and a point-level apartness matrix.
/// This is the canonical model representation: on a finite decidable
/// carrier, axiom B3 collapses the subset relation to its restriction to
/// singletons, so the n x n matrix determines apartness of arbitrary
/// subsets. Which axioms actually hold is reported by check_axioms, never
/// assumed.
struct Space {
    int n = 0;
    Inequality ineq;
    PointApartness apart;

    Space() = default;
    Space(Inequality i, PointApartness a) : n(i.n), ineq(std::move(i)), apart(std::move(a)) {
        validate();
    }

    static Space create(int n, const BoolMatrix& neq, const BoolMatrix& p) {
        return Space(Inequality(n, neq), PointApartness(n, p));
    }

    bool neq(int x, int y) const { return ineq.at(x, y); }
    bool p(int x, int y) const { return apart.at(x, y); }

    /// Row x of the apartness matrix: {y : p(x,y)}.
    Subset apart_row(int x) const { return apart.p.row(x); }
    Subset neq_row(int x) const { return ineq.neq.row(x); }

    bool operator==(const Space& o) const {
        return n == o.n && ineq.neq == o.ineq.neq && apart.p == o.apart.p;
    }

    void validate() const {
        ineq.validate();
        apart.validate();
        if (apart.n != n) throw std::invalid_argument("Space: component size mismatch");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (apart.at(x, y) && !ineq.at(x, y))
                    throw std::invalid_argument(
                        "Space: point apartness must imply inequality (p <= neq)");
    }
};

inline void check_sized_for(const Space& s, const Subset& a, const char* what) {
    if (a.size() != s.n)
        throw std::invalid_argument(std::string(what) + ": subset size mismatch");
}

/// Subset apartness A |><| B. On a finite decidable carrier B3 forces
/// A |><| B  <=>  p(a,b) for every a in A, b in B; an empty side is
/// vacuously apart (the B1+B3 convention).
inline bool subset_apart(const Space& s, const Subset& a, const Subset& b) {
    check_sized_for(s, a, "subset_apart");
    check_sized_for(s, b, "subset_apart");
    if (b.none()) return true;
    bool ok = true;
    a.for_each([&](int x) {
        if (ok && !b.is_subset_of(s.apart_row(x))) ok = false;
    });
    return ok;
}

/// Logical complement: {x : x not in S}.
inline Subset complement_not(const Space& s, const Subset& sub) {
    check_sized_for(s, sub, "complement_not");
    return sub.complemented();
}

/// Inequality complement: {x : neq(x,s) for all s in S}. ~empty = X.
inline Subset complement_neq(const Space& s, const Subset& sub) {
    check_sized_for(s, sub, "complement_neq");
    Subset acc = Subset::full(s.n);
    sub.for_each([&](int x) { acc.and_with(s.neq_row(x)); });
    return acc;
}

/// Apartness complement: {x : {x} |><| S}. -empty = X, and -S is contained
/// in ~S whenever the Space invariant p <= neq holds.
inline Subset complement_apart(const Space& s, const Subset& sub) {
    check_sized_for(s, sub, "complement_apart");
    Subset acc = Subset::full(s.n);
    sub.for_each([&](int x) { acc.and_with(s.apart_row(x)); });
    return acc;
}

/// Minimal basic open around x: -P_x where P_x = {y : p(x,y)}. Every basic
/// open -A containing x satisfies A <= P_x, so -P_x <= -A by antitonicity;
/// x itself always lies in -P_x.
inline Subset min_neighborhood_in(const Space& s, int x) {
    return complement_apart(s, s.apart_row(x));
}

/// Tightness of an inequality: not(x != y) implies x = y. On a finite
/// decidable carrier this means neq(x,y) holds for all distinct indices.
inline CheckResult check_tight(const Inequality& ineq) {
    for (int x = 0; x < ineq.n; ++x)
        for (int y = x + 1; y < ineq.n; ++y)
            if (!ineq.at(x, y)) {
                Witness w;
                w.points = {{"x", x}, {"y", y}};
                w.note = "distinct points not separated by the inequality";
                return CheckResult::fail(std::move(w));
            }
    return CheckResult::pass();
}

} // namespace apartness
