#include <catch_amalgamated.hpp>

#include "apartness/harness.hpp"

using namespace apartness;

TEST_CASE("default harness passes at small depths") {
    for (int depth : {1, 2, 3}) {
        const HarnessReport rep = union_harness(depth);
        INFO("depth " << depth);
        REQUIRE(rep.preconditions_ok());
        REQUIRE(rep.w_range_dense.ok);
        REQUIRE(rep.w_strongly_continuous.ok);
        REQUIRE(rep.f_open.ok);
        REQUIRE(rep.gwf_strongly_continuous.ok);
        REQUIRE(rep.gwf_image_dense.ok);
        REQUIRE(rep.all_pass());
    }
}

TEST_CASE("the advertised range of w really is h1(D1) x {0} u h2(D2) x {1}") {
    const int depth = 2;
    const Space c = from_metric(cantor(CantorSpec(depth)));
    const Subset d1 = Subset::of(c.n, {0, 1, 2, 3});
    const Subset d2 = Subset::of(c.n, {0, 1, 2, 3});
    // h1 collapses onto even points, h2 identity
    const PointMap h1(4, c.n, {0, 0, 2, 2});
    const PointMap h2 = PointMap::identity(c.n);
    const HarnessReport rep = union_harness(depth, d1, d2, h1, h2, c, c);
    // h1's image misses half the first copy, so neither the h1 image nor
    // the range of w is dense, and the composite inherits the failure
    bool h1_dense = true;
    for (const auto& p : rep.preconditions)
        if (p.name == "H1_IMAGE_DENSE") h1_dense = p.ok;
    REQUIRE_FALSE(h1_dense);
    REQUIRE_FALSE(rep.w_range_dense.ok);
    REQUIRE_FALSE(rep.gwf_image_dense.ok);
    // the maps themselves stay strongly continuous: at finite depth the
    // cantor-side domains are discrete, which makes every map out of them
    // strongly continuous
    REQUIRE(rep.w_strongly_continuous.ok);
    REQUIRE(rep.gwf_strongly_continuous.ok);
    REQUIRE_FALSE(rep.all_pass());
}

TEST_CASE("non-dense D1 is reported, not thrown") {
    const int depth = 2;
    const Space c = from_metric(cantor(CantorSpec(depth)));
    Subset d1(c.n);
    d1.set(0); // a single point is not dense in a discrete space
    const HarnessReport rep =
        union_harness(depth, d1, Subset::full(c.n), PointMap(1, c.n, {0}),
                      PointMap::identity(c.n), c, c);
    bool d1_dense = true;
    for (const auto& p : rep.preconditions)
        if (p.name == "D1_DENSE") d1_dense = p.ok;
    REQUIRE_FALSE(d1_dense);
    REQUIRE_FALSE(rep.all_pass());
}

TEST_CASE("harness density verdicts match the materialised topology") {
    const int depth = 2;
    const Space c = from_metric(cantor(CantorSpec(depth)));
    const Space uni = disjoint_union(c, c);
    const Topology top(uni);
    // the harness judges density through the minimal-neighborhood route;
    // cross-check against closures at a size where the topology fits
    const PointMap h1(c.n, c.n, {0, 0, 2, 2});
    Subset image(uni.n);
    for (int i = 0; i < c.n; ++i) {
        image.set(h1(i));           // copy 0
        image.set(c.n + i);         // copy 1 via identity
    }
    REQUIRE(dense_in_space(uni, image) == top.is_dense(image));
    REQUIRE_FALSE(dense_in_space(uni, image));
}

TEST_CASE("harness input validation") {
    const Space c = from_metric(cantor(CantorSpec(2)));
    REQUIRE_THROWS_AS(union_harness(0), std::invalid_argument);
    REQUIRE_THROWS_AS(union_harness(2, Subset::empty(c.n), Subset::full(c.n),
                                    PointMap::identity(c.n), PointMap::identity(c.n), c, c),
                      std::invalid_argument);
    // wrong h1 arity
    REQUIRE_THROWS_AS(union_harness(2, Subset::full(c.n), Subset::full(c.n),
                                    PointMap::identity(2), PointMap::identity(c.n), c, c),
                      std::invalid_argument);
}

TEST_CASE("abstract component spaces work") {
    // one discrete and one two-open component
    const Space x0 = two_point_discrete();
    const Space x1(Inequality::denotational(2), PointApartness(2, BoolMatrix(2)));
    const HarnessReport rep = union_harness(1, Subset::full(2), Subset::full(2),
                                            PointMap::identity(2), PointMap::identity(2), x0, x1);
    REQUIRE(rep.all_pass());
}
