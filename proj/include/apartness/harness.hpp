#pragma once

#include <string>
#include <vector>

#include "apartness/morphisms.hpp"

namespace apartness {

/// Finite-depth replay of the union-theorem diagram: the two-copy carrier
/// is realised as cantor(k+1) via the explicit first-bit isomorphism
///   f : cantor(k+1) -> cantor(k) x {0,1},  alpha -> (tail, first bit),
/// w glues the two given maps into the disjoint union, and g folds the
/// union back into the ambient space. Every claim the underlying proof
/// establishes is checked at this depth and reported.
struct HarnessReport {
    int depth = 0;
    std::vector<PropertyReport> preconditions;
    PropertyReport w_range_dense;
    PropertyReport w_strongly_continuous;
    PropertyReport f_open;
    PropertyReport gwf_strongly_continuous;
    PropertyReport gwf_image_dense;

    bool preconditions_ok() const {
        for (const auto& p : preconditions)
            if (!p.ok) return false;
        return true;
    }
    bool checks_ok() const {
        return w_range_dense.ok && w_strongly_continuous.ok && f_open.ok &&
               gwf_strongly_continuous.ok && gwf_image_dense.ok;
    }
    bool all_pass() const { return preconditions_ok() && checks_ok(); }

    std::vector<const PropertyReport*> checks() const {
        return {&w_range_dense, &w_strongly_continuous, &f_open, &gwf_strongly_continuous,
                &gwf_image_dense};
    }
};

inline Space two_point_discrete() {
    BoolMatrix p(2);
    p.set(0, 1, true);
    p.set(1, 0, true);
    return Space(Inequality::denotational(2), PointApartness(2, std::move(p)));
}

inline HarnessReport union_harness(int depth, const Subset& d1, const Subset& d2,
                                   const PointMap& h1, const PointMap& h2, const Space& x0,
                                   const Space& x1) {
    if (depth < 1) throw std::invalid_argument("union_harness: depth must be at least 1");
    const MetricSpace cm = cantor(CantorSpec(depth));
    const Space c_sp = from_metric(cm);
    const int nc = c_sp.n;
    if (d1.size() != nc || d2.size() != nc)
        throw std::invalid_argument("union_harness: dense-set size must match cantor carrier");
    if (d1.none() || d2.none())
        throw std::invalid_argument("union_harness: dense sets must be inhabited");
    if (h1.src != d1.count() || h1.dst != x0.n || h2.src != d2.count() || h2.dst != x1.n)
        throw std::invalid_argument("union_harness: map sizes do not match");

    HarnessReport rep;
    rep.depth = depth;

    // Preconditions are reported, not thrown.
    auto density_report = [&](const char* name, const Space& sp, const Subset& sub) {
        if (dense_in_space(sp, sub)) return PropertyReport::pass(name);
        Witness w;
        w.sets = {{"D", sub}};
        w.note = "not dense";
        return PropertyReport::fail(name, std::move(w));
    };
    rep.preconditions.push_back(density_report("D1_DENSE", c_sp, d1));
    rep.preconditions.push_back(density_report("D2_DENSE", c_sp, d2));

    const Space dom_h1 = subspace(c_sp, d1);
    const Space dom_h2 = subspace(c_sp, d2);
    {
        PropertyReport r = is_strongly_continuous(h1, dom_h1, x0);
        r.name = "H1_STRONGLY_CONTINUOUS";
        rep.preconditions.push_back(std::move(r));
        PropertyReport r2 = is_strongly_continuous(h2, dom_h2, x1);
        r2.name = "H2_STRONGLY_CONTINUOUS";
        rep.preconditions.push_back(std::move(r2));
    }
    rep.preconditions.push_back(
        density_report("H1_IMAGE_DENSE", x0, h1.image_of(Subset::full(dom_h1.n))));
    rep.preconditions.push_back(
        density_report("H2_IMAGE_DENSE", x1, h2.image_of(Subset::full(dom_h2.n))));

    // f : cantor(k+1) -> cantor(k) x {0,1}; the first bit picks the copy.
    const Space ck1_sp = from_metric(cantor(CantorSpec(depth + 1)));
    const Space two = two_point_discrete();
    const Space prod = product(c_sp, two);
    std::vector<int> f_img(ck1_sp.n);
    for (int idx = 0; idx < ck1_sp.n; ++idx) {
        const int head = idx >> depth;
        const int tail = idx & (nc - 1);
        f_img[idx] = tail * 2 + head;
    }
    const PointMap f(ck1_sp.n, prod.n, std::move(f_img));

    // w : (D1 x {0}) u (D2 x {1}) -> X0 u X1, as a map out of the product
    // subspace carved by the dense sets.
    Subset w_carrier(prod.n);
    d1.for_each([&](int a) { w_carrier.set(a * 2 + 0); });
    d2.for_each([&](int a) { w_carrier.set(a * 2 + 1); });
    const Space dom_w = subspace(prod, w_carrier);
    const Space uni = disjoint_union(x0, x1);

    std::vector<int> pos1(nc, -1), pos2(nc, -1);
    {
        int i = 0;
        for (int a : d1.indices()) pos1[a] = i++;
        i = 0;
        for (int a : d2.indices()) pos2[a] = i++;
    }
    std::vector<int> w_img;
    w_img.reserve(dom_w.n);
    for (int q : w_carrier.indices()) {
        const int alpha = q >> 1;
        if ((q & 1) == 0)
            w_img.push_back(h1(pos1[alpha]));
        else
            w_img.push_back(x0.n + h2(pos2[alpha]));
    }
    const PointMap w(dom_w.n, uni.n, std::move(w_img));

    // g folds the union back into the ambient space; with abstract factors
    // the natural ambient is the union itself, split at the copy boundary.
    Subset copy0(uni.n), copy1(uni.n);
    for (int i = 0; i < x0.n; ++i) copy0.set(i);
    for (int i = 0; i < x1.n; ++i) copy1.set(x0.n + i);
    const Gluing g = glue_map(copy0, copy1, uni);

    // The five diagram checks.
    rep.w_range_dense = density_report("W_RANGE_DENSE", uni, w.image_of(Subset::full(dom_w.n)));
    rep.w_strongly_continuous = is_strongly_continuous(w, dom_w, uni);
    rep.w_strongly_continuous.name = "W_STRONGLY_CONTINUOUS";
    {
        CheckResult open = is_open_map(f, ck1_sp, prod);
        rep.f_open = open.ok ? PropertyReport::pass("F_OPEN")
                             : PropertyReport::fail("F_OPEN", std::move(open.witness));
    }

    // restrict f to the preimage of w's carrier, then compose with w and g
    Subset d_mask = f.preimage_of(w_carrier);
    const Space dom_gwf = subspace(ck1_sp, d_mask);
    std::vector<int> pos_w(prod.n, -1);
    {
        int i = 0;
        for (int q : w_carrier.indices()) pos_w[q] = i++;
    }
    std::vector<int> gwf_img;
    gwf_img.reserve(dom_gwf.n);
    for (int idx : d_mask.indices()) gwf_img.push_back(g.map(w(pos_w[f(idx)])));
    const PointMap gwf(dom_gwf.n, uni.n, std::move(gwf_img));

    rep.gwf_strongly_continuous = is_strongly_continuous(gwf, dom_gwf, uni);
    rep.gwf_strongly_continuous.name = "GWF_STRONGLY_CONTINUOUS";
    rep.gwf_image_dense =
        density_report("GWF_IMAGE_DENSE", uni, gwf.image_of(Subset::full(dom_gwf.n)));

    return rep;
}

/// Default harness: full dense sets, identity maps onto two cantor(k)
/// copies.
inline HarnessReport union_harness(int depth) {
    const Space c_sp = from_metric(cantor(CantorSpec(depth)));
    const Subset full = Subset::full(c_sp.n);
    const PointMap id = PointMap::identity(c_sp.n);
    return union_harness(depth, full, full, id, id, c_sp, c_sp);
}

} // namespace apartness
