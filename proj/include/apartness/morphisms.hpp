#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apartness/constructors.hpp"
#include "apartness/properties.hpp"
#include "apartness/topology.hpp"

namespace apartness {

/// Total function between finite carriers, stored as the image array.
struct PointMap {
    int src = 0;
    int dst = 0;
    std::vector<int> image;

    PointMap() = default;
    PointMap(int src_, int dst_, std::vector<int> img)
        : src(src_), dst(dst_), image(std::move(img)) {
        if (static_cast<int>(image.size()) != src)
            throw std::invalid_argument("PointMap: one image per source point required");
        for (int v : image)
            if (v < 0 || v >= dst) throw std::invalid_argument("PointMap: image out of range");
    }

    static PointMap identity(int n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        return PointMap(n, n, std::move(img));
    }

    static PointMap constant(int src_, int dst_, int value) {
        return PointMap(src_, dst_, std::vector<int>(src_, value));
    }

    int operator()(int x) const { return image.at(x); }

    /// x -> g(f(x)).
    PointMap then(const PointMap& g) const {
        if (dst != g.src) throw std::invalid_argument("PointMap::then: sizes do not compose");
        std::vector<int> img(src);
        for (int i = 0; i < src; ++i) img[i] = g.image[image[i]];
        return PointMap(src, g.dst, std::move(img));
    }

    Subset image_of(const Subset& s) const {
        if (s.size() != src) throw std::invalid_argument("PointMap: subset size mismatch");
        Subset out(dst);
        s.for_each([&](int i) { out.set(image[i]); });
        return out;
    }

    Subset preimage_of(const Subset& s) const {
        if (s.size() != dst) throw std::invalid_argument("PointMap: subset size mismatch");
        Subset out(src);
        for (int i = 0; i < src; ++i)
            if (s.test(image[i])) out.set(i);
        return out;
    }
};

/// Strong continuity: f(A) |><| f(B) in Y implies A |><| B in X. On
/// collapsed finite models this is equivalent to the point condition
/// p_Y(f(x), f(x')) => p_X(x, x'); the subset-pair route stays available
/// behind the brute-force flag and must agree.
inline PropertyReport is_strongly_continuous(const PointMap& f, const Space& x, const Space& y,
                                             const PropertyOptions& opts = {}) {
    if (f.src != x.n || f.dst != y.n)
        throw std::invalid_argument("is_strongly_continuous: size mismatch");
    if (opts.brute_force) {
        detail::require_pair_sweep(x.n, "is_strongly_continuous (brute force)");
        detail::MaskTables tx(x);
        detail::MaskTables ty(y);
        const std::size_t count = std::size_t(1) << x.n;
        std::vector<std::uint32_t> img(count, 0);
        for (std::size_t a = 1; a < count; ++a)
            img[a] = img[a & (a - 1)] | (1u << f.image[std::countr_zero(
                                             static_cast<std::uint32_t>(a))]);
        for (std::uint32_t a = 0; a < count; ++a)
            for (std::uint32_t b = 0; b < count; ++b) {
                const bool image_apart = (img[b] & ~ty.minus_of[img[a]]) == 0;
                const bool source_apart = (b & ~tx.minus_of[a]) == 0;
                if (image_apart && !source_apart) {
                    Witness w;
                    w.sets = {{"A", detail::mask_subset(x.n, a)},
                              {"B", detail::mask_subset(x.n, b)}};
                    w.note = "images apart, sources not";
                    return PropertyReport::fail("STRONGLY_CONTINUOUS", std::move(w));
                }
            }
        return PropertyReport::pass_note("STRONGLY_CONTINUOUS", "subset-pair search");
    }
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b)
            if (y.p(f(a), f(b)) && !x.p(a, b)) {
                Witness w;
                w.points = {{"x", a}, {"x'", b}};
                w.note = "images apart, sources not";
                return PropertyReport::fail("STRONGLY_CONTINUOUS", std::move(w));
            }
    return PropertyReport::pass("STRONGLY_CONTINUOUS");
}

/// Uniform continuity between finite entourage bases: for every target
/// entourage V some source entourage U maps pairwise into it.
inline PropertyReport is_uniformly_continuous(const PointMap& f, const UniformBase& ux,
                                              const UniformBase& uy) {
    if (f.src != ux.size() || f.dst != uy.size())
        throw std::invalid_argument("is_uniformly_continuous: size mismatch");
    for (std::size_t vi = 0; vi < uy.entourages().size(); ++vi) {
        const auto& v = uy.entourages()[vi];
        bool found = false;
        for (const auto& u : ux.entourages()) {
            bool fits = true;
            for (int a = 0; a < f.src && fits; ++a)
                for (int b = 0; b < f.src && fits; ++b)
                    if (u.at(a, b) && !v.at(f(a), f(b))) fits = false;
            if (fits) {
                found = true;
                break;
            }
        }
        if (!found) {
            Witness w;
            w.points = {{"V", static_cast<int>(vi)}};
            w.note = "no source entourage maps into target entourage V (by index)";
            return PropertyReport::fail("UNIFORMLY_CONTINUOUS", std::move(w));
        }
    }
    return PropertyReport::pass("UNIFORMLY_CONTINUOUS");
}

/// Open map over materialised topologies: the image of every open is open.
inline CheckResult is_open_map(const PointMap& f, const Topology& tx, const Topology& ty) {
    if (f.src != tx.carrier() || f.dst != ty.carrier())
        throw std::invalid_argument("is_open_map: size mismatch");
    for (const Subset& o : tx.opens()) {
        if (!ty.is_open(f.image_of(o))) {
            Witness w;
            w.sets = {{"O", o}};
            w.note = "image of open set not open";
            return CheckResult::fail(std::move(w));
        }
    }
    return CheckResult::pass();
}

/// Open map directly on spaces, via the minimal-neighborhood base: every
/// open is a union of minimal neighborhoods and images distribute over
/// unions, so f is open iff the image of each minimal neighborhood is open,
/// and a set is open iff it contains the minimal neighborhood of each of
/// its points. Works at any carrier size; agrees with the topology route
/// (asserted by tests).
inline CheckResult is_open_map(const PointMap& f, const Space& x, const Space& y) {
    if (f.src != x.n || f.dst != y.n) throw std::invalid_argument("is_open_map: size mismatch");
    std::vector<Subset> nbhd_y;
    nbhd_y.reserve(y.n);
    for (int p = 0; p < y.n; ++p) nbhd_y.push_back(min_neighborhood_in(y, p));
    for (int p = 0; p < x.n; ++p) {
        const Subset img = f.image_of(min_neighborhood_in(x, p));
        bool open = true;
        img.for_each([&](int q) {
            if (open && !nbhd_y[q].is_subset_of(img)) open = false;
        });
        if (!open) {
            Witness w;
            w.sets = {{"O", min_neighborhood_in(x, p)}};
            w.points = {{"x", p}};
            w.note = "image of the minimal neighborhood of x not open";
            return CheckResult::fail(std::move(w));
        }
    }
    return CheckResult::pass();
}

/// The gluing map of two subspaces back into their ambient space, together
/// with its domain (the disjoint union of the two subspaces).
struct Gluing {
    Space domain;
    PointMap map;
};

/// g(x,0) = x, g(y,1) = y from disjoint_union(E|X_sub, E|Y_sub) to E.
inline Gluing glue_map(const Subset& x_sub, const Subset& y_sub, const Space& e) {
    check_sized_for(e, x_sub, "glue_map");
    check_sized_for(e, y_sub, "glue_map");
    if (x_sub.none() || y_sub.none())
        throw std::invalid_argument("glue_map: subsets must be inhabited");
    const Space sx = subspace(e, x_sub);
    const Space sy = subspace(e, y_sub);
    Space dom = disjoint_union(sx, sy);
    std::vector<int> img;
    img.reserve(dom.n);
    for (int i : x_sub.indices()) img.push_back(i);
    for (int i : y_sub.indices()) img.push_back(i);
    return {std::move(dom), PointMap(sx.n + sy.n, e.n, std::move(img))};
}

/// Projection of the row-major product carrier onto factor k (0 or 1).
inline PointMap projection(const Space& x, const Space& y, int k) {
    if (k != 0 && k != 1) throw std::invalid_argument("projection: factor index must be 0 or 1");
    std::vector<int> img(x.n * y.n);
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < y.n; ++b) img[a * y.n + b] = (k == 0) ? a : b;
    return PointMap(x.n * y.n, k == 0 ? x.n : y.n, std::move(img));
}

/// (h1,h2) : (a,b) -> (h1(a), h2(b)) between row-major product carriers.
inline PointMap pair_map(const PointMap& h1, const PointMap& h2) {
    std::vector<int> img(std::size_t(h1.src) * h2.src);
    for (int a = 0; a < h1.src; ++a)
        for (int b = 0; b < h2.src; ++b)
            img[std::size_t(a) * h2.src + b] = h1.image[a] * h2.dst + h2.image[b];
    return PointMap(h1.src * h2.src, h1.dst * h2.dst, std::move(img));
}

} // namespace apartness
