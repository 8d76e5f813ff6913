#include <catch_amalgamated.hpp>

#include <random>

#include "apartness/harness.hpp"
#include "apartness/morphisms.hpp"
#include "oracles.hpp"

using namespace apartness;

namespace {

Space discrete(int n) {
    BoolMatrix p(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) p.set(i, j, true);
    return Space(Inequality::denotational(n), PointApartness(n, p));
}

Space indiscrete(int n) {
    return Space(Inequality::denotational(n), PointApartness(n, BoolMatrix(n)));
}

std::vector<PointMap> all_maps(int src, int dst) {
    std::vector<PointMap> out;
    std::vector<int> img(src, 0);
    while (true) {
        out.emplace_back(src, dst, img);
        int k = src - 1;
        while (k >= 0 && img[k] == dst - 1) img[k--] = 0;
        if (k < 0) break;
        ++img[k];
    }
    return out;
}

PointMap random_map(int src, int dst, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, dst - 1);
    std::vector<int> img(src);
    for (int& v : img) v = pick(rng);
    return PointMap(src, dst, std::move(img));
}

} // namespace

TEST_CASE("point map basics") {
    const PointMap id = PointMap::identity(3);
    REQUIRE(id(2) == 2);
    const PointMap c = PointMap::constant(3, 2, 1);
    REQUIRE(c(0) == 1);
    REQUIRE(id.then(c)(2) == 1);
    REQUIRE(c.image_of(Subset::full(3)) == Subset::of(2, {1}));
    REQUIRE(c.preimage_of(Subset::of(2, {0})).none());
    REQUIRE_THROWS_AS(PointMap(2, 2, {0, 5}), std::invalid_argument);
    REQUIRE_THROWS_AS(PointMap(2, 2, {0}), std::invalid_argument);
}

TEST_CASE("strong continuity examples") {
    std::mt19937 rng(107);
    const Space s = oracle::random_model(4, rng);
    REQUIRE(is_strongly_continuous(PointMap::identity(4), s, s).ok);
    // constant maps: image pairs are never apart
    const Space t = oracle::random_model(3, rng);
    REQUIRE(is_strongly_continuous(PointMap::constant(4, 3, 1), s, t).ok);

    // identity carrier map from the all-false space into the discrete one
    const PropertyReport r =
        is_strongly_continuous(PointMap::identity(2), indiscrete(2), discrete(2));
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witness.points.size() == 2);
    // and the subset-pair route agrees, witnessing a pair of sets
    const PropertyReport rb = is_strongly_continuous(PointMap::identity(2), indiscrete(2),
                                                     discrete(2), {.brute_force = true});
    REQUIRE_FALSE(rb.ok);
}

TEST_CASE("point fast path equals the subset-pair search for all maps, small carriers") {
    long mismatches = 0;
    for (const Space& x : oracle::all_models(2))
        for (const Space& y : oracle::all_models(2))
            for (const PointMap& f : all_maps(2, 2))
                if (is_strongly_continuous(f, x, y).ok !=
                    is_strongly_continuous(f, x, y, {.brute_force = true}).ok)
                    ++mismatches;
    REQUIRE(mismatches == 0);

    std::mt19937 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        const Space x = oracle::random_model(4, rng);
        const Space y = oracle::random_model(3, rng);
        const PointMap f = random_map(4, 3, rng);
        if (is_strongly_continuous(f, x, y).ok !=
            is_strongly_continuous(f, x, y, {.brute_force = true}).ok)
            ++mismatches;
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("composition preserves strong continuity (randomized)") {
    std::mt19937 rng(113);
    int tested = 0;
    while (tested < 40) {
        const Space x = oracle::random_model(5, rng);
        const Space y = oracle::random_model(6, rng);
        const Space z = oracle::random_model(4, rng);
        const PointMap f = random_map(5, 6, rng);
        const PointMap g = random_map(6, 4, rng);
        if (!is_strongly_continuous(f, x, y).ok || !is_strongly_continuous(g, y, z).ok) continue;
        REQUIRE(is_strongly_continuous(f.then(g), x, z).ok);
        ++tested;
    }
}

TEST_CASE("uniform continuity") {
    const MetricSpace m = cantor(CantorSpec(2));
    const UniformBase base = metric_entourages(m);
    REQUIRE(is_uniformly_continuous(PointMap::identity(4), base, base).ok);

    BoolMatrix diag(4);
    for (int i = 0; i < 4; ++i) diag.set(i, i, true);
    const UniformBase diag_base(4, {diag});
    // into the diagonal base: the diagonal source entourage always fits
    REQUIRE(is_uniformly_continuous(PointMap::constant(4, 4, 0), base, diag_base).ok);

    // a target strictly finer than anything the source offers
    BoolMatrix coarse(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) coarse.set(i, j, true);
    BoolMatrix diag2(2);
    diag2.set(0, 0, true);
    diag2.set(1, 1, true);
    const UniformBase coarse_base(2, {diag2, coarse});
    const UniformBase fine_base(2, {diag2});
    // swap on a two-point carrier: identity-level inspection
    const PointMap swap(2, 2, {1, 0});
    REQUIRE(is_uniformly_continuous(swap, coarse_base, fine_base).ok);
}

TEST_CASE("uniformly continuous maps are strongly continuous on the induced spaces") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 20; ++trial) {
        const MetricSpace mx = oracle::random_metric(4, rng);
        const MetricSpace my = oracle::random_metric(3, rng);
        const PointMap f = random_map(4, 3, rng);
        if (is_uniformly_continuous(f, metric_entourages(mx), metric_entourages(my)).ok)
            REQUIRE(is_strongly_continuous(f, from_metric(mx), from_metric(my)).ok);
    }
}

TEST_CASE("open map examples") {
    const Space d3 = discrete(3);
    const Topology td3(d3);
    REQUIRE(is_open_map(PointMap::identity(3), td3, td3).ok);
    REQUIRE(is_open_map(PointMap::identity(3), d3, d3).ok);

    // constant map into the two-open target: the image of X is a proper
    // inhabited set, not open there
    const Space target = indiscrete(2);
    const CheckResult r = is_open_map(PointMap::constant(3, 2, 0), d3, target);
    REQUIRE_FALSE(r.ok);
    REQUIRE_FALSE(is_open_map(PointMap::constant(3, 2, 0), td3, Topology(target)).ok);

    // first-bit-drop surjection between cantor spaces is open
    for (int k = 1; k <= 3; ++k) {
        const Space big = from_metric(cantor(CantorSpec(k + 1)));
        const Space small = from_metric(cantor(CantorSpec(k)));
        std::vector<int> img(big.n);
        for (int i = 0; i < big.n; ++i) img[i] = i & ((1 << k) - 1);
        REQUIRE(is_open_map(PointMap(big.n, small.n, std::move(img)), big, small).ok);
    }
}

TEST_CASE("the two open-map routes agree on every model pair, n <= 2, plus random") {
    long mismatches = 0;
    for (const Space& x : oracle::all_models(2))
        for (const Space& y : oracle::all_models(2)) {
            const Topology tx(x), ty(y);
            for (const PointMap& f : all_maps(2, 2))
                if (is_open_map(f, tx, ty).ok != is_open_map(f, x, y).ok) ++mismatches;
        }
    std::mt19937 rng(131);
    for (int trial = 0; trial < 40; ++trial) {
        const Space x = oracle::random_model(4, rng);
        const Space y = oracle::random_model(4, rng);
        const PointMap f = random_map(4, 4, rng);
        if (is_open_map(f, Topology(x), Topology(y)).ok != is_open_map(f, x, y).ok)
            ++mismatches;
    }
    REQUIRE(mismatches == 0);
}

TEST_CASE("glue map: fold is strongly continuous, disjoint pieces give injectivity") {
    std::mt19937 rng(137);
    for (int trial = 0; trial < 30; ++trial) {
        const Space e = oracle::random_model(4, rng);
        const Subset full = Subset::full(4);
        const Gluing fold = glue_map(full, full, e);
        REQUIRE(fold.map.src == 8);
        REQUIRE(is_strongly_continuous(fold.map, fold.domain, e).ok);

        const Gluing split = glue_map(Subset::of(4, {0, 1}), Subset::of(4, {2, 3}), e);
        std::vector<bool> seen(4, false);
        for (int i = 0; i < split.map.src; ++i) {
            REQUIRE_FALSE(seen[split.map(i)]);
            seen[split.map(i)] = true;
        }
    }
    REQUIRE_THROWS_AS(glue_map(Subset::empty(4), Subset::full(4), discrete(4)),
                      std::invalid_argument);
}

TEST_CASE("glue map preimage identity: (g-1(A))^0 = A n X_sub") {
    std::mt19937 rng(139);
    const Space e = oracle::random_model(4, rng);
    const Subset x_sub = Subset::of(4, {0, 2, 3});
    const Subset y_sub = Subset::of(4, {1, 2});
    const Gluing g = glue_map(x_sub, y_sub, e);
    const std::vector<int> xs = x_sub.indices();
    for (unsigned am = 0; am < 16; ++am) {
        const Subset a = oracle::subset_of_mask(4, am);
        const Subset pre = g.map.preimage_of(a);
        // copy-0 block of the preimage, read back through the reindexing
        for (std::size_t i = 0; i < xs.size(); ++i)
            REQUIRE(pre.test(static_cast<int>(i)) == (a.test(xs[i]) && x_sub.test(xs[i])));
    }
}

TEST_CASE("projections and pair maps") {
    std::mt19937 rng(149);
    const Space x = oracle::random_model(3, rng);
    const Space y = oracle::random_model(2, rng);
    const Space pr = product(x, y);

    REQUIRE(is_strongly_continuous(projection(x, y, 0), pr, x).ok);
    REQUIRE(is_strongly_continuous(projection(x, y, 1), pr, y).ok);

    // pair map of identities is the identity of the product
    const PointMap paired = pair_map(PointMap::identity(3), PointMap::identity(2));
    REQUIRE(paired.image == PointMap::identity(6).image);

    // pair map of strongly continuous maps is strongly continuous
    int tested = 0;
    while (tested < 30) {
        const Space a = oracle::random_model(2, rng);
        const Space b = oracle::random_model(2, rng);
        const PointMap h1 = random_map(2, 3, rng);
        const PointMap h2 = random_map(2, 2, rng);
        if (!is_strongly_continuous(h1, a, x).ok || !is_strongly_continuous(h2, b, y).ok)
            continue;
        REQUIRE(is_strongly_continuous(pair_map(h1, h2), product(a, b), pr).ok);
        ++tested;
    }
}
