#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "apartness/rational.hpp"
#include "apartness/space.hpp"

namespace apartness {

/// Finite metric space with exact rational distances. Symmetry, zero
/// diagonal, positivity off the diagonal and the triangle inequality are
/// all checked at construction.
class MetricSpace {
public:
    MetricSpace(int n, std::vector<std::vector<Rational>> dist)
        : n_(n), dist_(std::move(dist)) {
        validate();
    }

    int size() const { return n_; }
    const Rational& dist(int x, int y) const { return dist_.at(x).at(y); }
    const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

    Rational diameter() const {
        Rational d(0);
        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y) d = std::max(d, dist_[x][y]);
        return d;
    }

    /// Restriction to the points listed (reindexed densely, in order).
    MetricSpace restrict(const std::vector<int>& points) const {
        const int k = static_cast<int>(points.size());
        std::vector<std::vector<Rational>> d(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) d[i][j] = dist(points[i], points[j]);
        return MetricSpace(k, std::move(d));
    }

private:
    // Generated metrics (cantor) are valid by construction; the unchecked
    // path skips the cubic triangle sweep for them. Tests re-validate.
    struct unchecked_t {};
    MetricSpace(int n, std::vector<std::vector<Rational>> dist, unchecked_t)
        : n_(n), dist_(std::move(dist)) {}
    friend MetricSpace cantor_metric_unchecked(int, std::vector<std::vector<Rational>>);

    void validate() const {
        if (n_ <= 0) throw std::invalid_argument("MetricSpace: carrier must be inhabited");
        if (static_cast<int>(dist_.size()) != n_)
            throw std::invalid_argument("MetricSpace: matrix size mismatch");
        for (const auto& row : dist_)
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("MetricSpace: ragged distance matrix");
        for (int x = 0; x < n_; ++x) {
            if (dist_[x][x] != Rational(0))
                throw std::invalid_argument("MetricSpace: nonzero diagonal");
            for (int y = 0; y < n_; ++y) {
                if (dist_[x][y] != dist_[y][x])
                    throw std::invalid_argument("MetricSpace: not symmetric");
                if (x != y && dist_[x][y] <= Rational(0))
                    throw std::invalid_argument(
                        "MetricSpace: distance between distinct points must be positive");
            }
        }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z)
                    if (dist_[x][z] > dist_[x][y] + dist_[y][z])
                        throw std::invalid_argument("MetricSpace: triangle inequality fails");
    }

    int n_ = 0;
    std::vector<std::vector<Rational>> dist_;
};

inline MetricSpace cantor_metric_unchecked(int n, std::vector<std::vector<Rational>> dist) {
    return MetricSpace(n, std::move(dist), MetricSpace::unchecked_t{});
}

/// Finite base of entourages for a uniform structure. Each member contains
/// the diagonal; the base is directed, admits square roots and transposes
/// below every member, and is Hausdorff: the intersection of all members is
/// exactly the diagonal.
class UniformBase {
public:
    UniformBase(int n, std::vector<BoolMatrix> entourages)
        : n_(n), entourages_(std::move(entourages)) {
        validate();
    }

    int size() const { return n_; }
    const std::vector<BoolMatrix>& entourages() const { return entourages_; }

    /// The inequality x != y iff (x,y) escapes some entourage. Tight by the
    /// Hausdorff stipulation.
    Inequality induced_inequality() const {
        BoolMatrix m(n_);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                bool escapes = false;
                for (const auto& u : entourages_)
                    if (!u.at(x, y)) {
                        escapes = true;
                        break;
                    }
                if (escapes) m.set(x, y, true);
            }
        return Inequality(n_, std::move(m));
    }

private:
    void validate() const {
        if (n_ <= 0) throw std::invalid_argument("UniformBase: carrier must be inhabited");
        if (entourages_.empty()) throw std::invalid_argument("UniformBase: base must be nonempty");
        for (const auto& u : entourages_) {
            if (u.size() != n_) throw std::invalid_argument("UniformBase: entourage size mismatch");
            for (int x = 0; x < n_; ++x)
                if (!u.at(x, x))
                    throw std::invalid_argument("UniformBase: entourage misses the diagonal");
        }
        for (const auto& u : entourages_) {
            bool has_root = false, has_transpose = false;
            for (const auto& v : entourages_) {
                if (!has_root) {
                    bool ok = true;
                    for (int x = 0; x < n_ && ok; ++x)
                        for (int z = 0; z < n_ && ok; ++z) {
                            bool composed = false;
                            for (int y = 0; y < n_ && !composed; ++y)
                                if (v.at(x, y) && v.at(y, z)) composed = true;
                            if (composed && !u.at(x, z)) ok = false;
                        }
                    has_root = ok;
                }
                if (!has_transpose) {
                    bool ok = true;
                    for (int x = 0; x < n_ && ok; ++x)
                        for (int y = 0; y < n_ && ok; ++y)
                            if (v.at(x, y) && !u.at(y, x)) ok = false;
                    has_transpose = ok;
                }
            }
            if (!has_root)
                throw std::invalid_argument("UniformBase: no member composes into entourage");
            if (!has_transpose)
                throw std::invalid_argument("UniformBase: no member below the transpose");
        }
        for (const auto& u1 : entourages_)
            for (const auto& u2 : entourages_) {
                bool found = false;
                for (const auto& v : entourages_) {
                    bool below = true;
                    for (int x = 0; x < n_ && below; ++x)
                        for (int y = 0; y < n_ && below; ++y)
                            if (v.at(x, y) && !(u1.at(x, y) && u2.at(x, y))) below = false;
                    if (below) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::invalid_argument("UniformBase: base not directed");
            }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                bool in_all = true;
                for (const auto& u : entourages_)
                    if (!u.at(x, y)) {
                        in_all = false;
                        break;
                    }
                if (in_all != (x == y))
                    throw std::invalid_argument(
                        "UniformBase: intersection of entourages must be the diagonal");
            }
    }

    int n_ = 0;
    std::vector<BoolMatrix> entourages_;
};

/// Depth of a truncated Cantor space {0,1}^k; carrier 2^k capped at 2^20.
struct CantorSpec {
    int depth = 1;

    explicit CantorSpec(int k) : depth(k) {
        if (k < 1) throw std::invalid_argument("CantorSpec: depth must be at least 1");
        if (k > 20) throw std::length_error("CantorSpec: depth too large (max 20)");
    }
};

/// Metric-induced apartness. Finitely many pairs mean the exists-epsilon in
/// the induced relation is witnessed by the minimum distance, so
/// p(x,y) = (dist(x,y) > 0); for finite metrics subset apartness is
/// disjointness. The inequality is denotational.
inline Space from_metric(const MetricSpace& m) {
    BoolMatrix p(m.size());
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (m.dist(x, y) > Rational(0)) p.set(x, y, true);
    return Space(Inequality::denotational(m.size()), PointApartness(m.size(), std::move(p)));
}

/// Uniform-induced apartness: p(x,y) iff (x,y) lies in the inequality
/// complement of some entourage, where (x,y) != (u,v) reads
/// neq(x,u) or neq(y,v) under the supplied inequality. With the inequality
/// omitted the induced (tight) one is used.
inline Space from_uniform(const UniformBase& base,
                          std::optional<Inequality> supplied = std::nullopt) {
    const int n = base.size();
    Inequality ineq = supplied ? std::move(*supplied) : base.induced_inequality();
    if (ineq.n != n) throw std::invalid_argument("from_uniform: inequality size mismatch");
    BoolMatrix p(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool apart = false;
            for (const auto& u : base.entourages()) {
                bool in_complement = true;
                for (int a = 0; a < n && in_complement; ++a)
                    for (int b = 0; b < n && in_complement; ++b)
                        if (u.at(a, b) && !(ineq.at(x, a) || ineq.at(y, b)))
                            in_complement = false;
                if (in_complement) {
                    apart = true;
                    break;
                }
            }
            if (apart) p.set(x, y, true);
        }
    return Space(std::move(ineq), PointApartness(n, std::move(p)));
}

/// Restriction of both matrices to an inhabited carrier, reindexed densely.
inline Space subspace(const Space& s, const Subset& carrier) {
    check_sized_for(s, carrier, "subspace");
    if (carrier.none()) throw std::invalid_argument("subspace: carrier must be inhabited");
    const std::vector<int> points = carrier.indices();
    const int k = static_cast<int>(points.size());
    BoolMatrix neq(k), p(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (s.neq(points[i], points[j])) neq.set(i, j, true);
            if (s.p(points[i], points[j])) p.set(i, j, true);
        }
    return Space::create(k, neq, p);
}

/// Two-copy carrier X x {0} u Y x {1}: copy X occupies indices
/// [0, nX), copy Y indices [nX, nX+nY). Within a copy both matrices are
/// inherited; across copies both are all-true (a cross pair of singletons
/// has an empty component on each side, hence is apart).
inline Space disjoint_union(const Space& x, const Space& y) {
    const int n = x.n + y.n;
    BoolMatrix neq(n), p(n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            if (x.neq(i, j)) neq.set(i, j, true);
            if (x.p(i, j)) p.set(i, j, true);
        }
    for (int i = 0; i < y.n; ++i)
        for (int j = 0; j < y.n; ++j) {
            if (y.neq(i, j)) neq.set(x.n + i, x.n + j, true);
            if (y.p(i, j)) p.set(x.n + i, x.n + j, true);
        }
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < y.n; ++j) {
            neq.set(i, x.n + j, true);
            neq.set(x.n + j, i, true);
            p.set(i, x.n + j, true);
            p.set(x.n + j, i, true);
        }
    return Space::create(n, neq, p);
}

/// Index of the pair (x,y) in the row-major (x-major) product carrier.
inline int product_index(const Space& x, const Space& y, int xi, int yi) {
    if (xi < 0 || xi >= x.n || yi < 0 || yi >= y.n)
        throw std::out_of_range("product_index: point outside factor");
    return xi * y.n + yi;
}

/// Product apartness, pointwise by disjunction in each coordinate; on
/// B3-collapsed finite models this agrees with the rectangle-cover
/// definition (asserted by tests on small instances).
inline Space product(const Space& x, const Space& y) {
    const int n = x.n * y.n;
    BoolMatrix neq(n), p(n);
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < y.n; ++b)
            for (int c = 0; c < x.n; ++c)
                for (int d = 0; d < y.n; ++d) {
                    const int i = a * y.n + b, j = c * y.n + d;
                    if (x.neq(a, c) || y.neq(b, d)) neq.set(i, j, true);
                    if (x.p(a, c) || y.p(b, d)) p.set(i, j, true);
                }
    return Space::create(n, neq, p);
}

/// Truncated Cantor space {0,1}^k, enumerated lexicographically (index bits
/// read most-significant-first as the word), with the first-difference
/// ultrametric dist(a,b) = 2^-i, i the first differing position.
inline MetricSpace cantor(const CantorSpec& spec) {
    const int k = spec.depth;
    const int n = 1 << k;
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int diff = a ^ b;
            const int first = k - 1 - (31 - std::countl_zero(static_cast<std::uint32_t>(diff)) );
            dist[a][b] = dist[b][a] = pow2_inverse(first);
        }
    return cantor_metric_unchecked(n, std::move(dist));
}

/// Greedy cover: scan points in index order, keep each point not already
/// within distance < eps of a kept representative. Every carrier point ends
/// within < eps of some representative.
inline std::vector<int> epsilon_net(const MetricSpace& m, const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("epsilon_net: eps must be positive");
    std::vector<int> reps;
    for (int x = 0; x < m.size(); ++x) {
        bool covered = false;
        for (int r : reps)
            if (m.dist(x, r) < eps) {
                covered = true;
                break;
            }
        if (!covered) reps.push_back(x);
    }
    return reps;
}

/// The threshold entourages {(x,y) : dist(x,y) < t} over the finitely many
/// relevant thresholds (every positive distance value, plus one above the
/// diameter for the full relation). A valid base: the smallest member is
/// the diagonal, which composes and transposes below everything.
inline UniformBase metric_entourages(const MetricSpace& m) {
    std::vector<Rational> thresholds;
    for (int x = 0; x < m.size(); ++x)
        for (int y = x + 1; y < m.size(); ++y) thresholds.push_back(m.dist(x, y));
    thresholds.push_back(m.diameter() + Rational(1));
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    std::vector<BoolMatrix> base;
    for (const auto& t : thresholds) {
        BoolMatrix u(m.size());
        for (int x = 0; x < m.size(); ++x)
            for (int y = 0; y < m.size(); ++y)
                if (m.dist(x, y) < t) u.set(x, y, true);
        base.push_back(std::move(u));
    }
    return UniformBase(m.size(), std::move(base));
}

} // namespace apartness
