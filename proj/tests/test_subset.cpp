#include <catch_amalgamated.hpp>

#include <random>

#include "apartness/matrix.hpp"
#include "apartness/subset.hpp"

using namespace apartness;

TEST_CASE("subset basics") {
    Subset s(5);
    REQUIRE(s.none());
    s.set(1);
    s.set(3);
    REQUIRE(s.count() == 2);
    REQUIRE(s.test(3));
    REQUIRE_FALSE(s.test(0));
    REQUIRE(s.to_string() == "{1,3}");
    REQUIRE(s.indices() == std::vector<int>{1, 3});
    s.reset(3);
    REQUIRE(s.count() == 1);

    REQUIRE(Subset::full(5).is_full());
    REQUIRE(Subset::full(0).none());
    REQUIRE(Subset::of(4, {0, 2}) == Subset::from_mask(4, 0b0101));
}

TEST_CASE("subset operations agree with mask arithmetic") {
    std::mt19937 rng(7);
    for (int n : {1, 7, 31}) {
        std::uniform_int_distribution<unsigned> dist(0, (n == 31 ? 0x7fffffffu : (1u << n) - 1));
        for (int trial = 0; trial < 200; ++trial) {
            const unsigned a = dist(rng), b = dist(rng);
            const Subset sa = Subset::from_mask(n, a), sb = Subset::from_mask(n, b);
            REQUIRE((sa & sb).to_mask() == (a & b));
            REQUIRE((sa | sb).to_mask() == (a | b));
            REQUIRE(sa.minus(sb).to_mask() == (a & ~b));
            REQUIRE(sa.complemented().to_mask() == (~a & ((n == 31) ? 0x7fffffffu : (1u << n) - 1)));
            REQUIRE(sa.is_subset_of(sb) == ((a & ~b) == 0));
            REQUIRE(sa.intersects(sb) == ((a & b) != 0));
            REQUIRE(sa.count() == std::popcount(a));
        }
    }
}

TEST_CASE("subset crosses word boundaries") {
    Subset s(130);
    s.set(0);
    s.set(64);
    s.set(129);
    REQUIRE(s.count() == 3);
    REQUIRE(s.complemented().count() == 127);
    REQUIRE(s.is_subset_of(Subset::full(130)));
    Subset t(130);
    t.set(64);
    REQUIRE(t.is_subset_of(s));
    REQUIRE_FALSE(s.is_subset_of(t));
}

TEST_CASE("subset hashing distinguishes content and length") {
    REQUIRE(std::hash<Subset>{}(Subset::of(5, {1, 3})) ==
            std::hash<Subset>{}(Subset::of(5, {1, 3})));
    REQUIRE(std::hash<Subset>{}(Subset::of(5, {1, 3})) !=
            std::hash<Subset>{}(Subset::of(5, {1, 2})));
    REQUIRE(std::hash<Subset>{}(Subset::empty(4)) != std::hash<Subset>{}(Subset::empty(5)));
}

TEST_CASE("subset size mismatch throws") {
    REQUIRE_THROWS_AS(Subset(3) & Subset(4), std::invalid_argument);
    REQUIRE_THROWS_AS(Subset(3).is_subset_of(Subset(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(Subset(3).test(3), std::out_of_range);
    REQUIRE_THROWS_AS(Subset::from_mask(33, 0), std::invalid_argument);
}

TEST_CASE("bool matrix") {
    BoolMatrix m(3);
    m.set(0, 1, true);
    REQUIRE(m.at(0, 1));
    REQUIRE_FALSE(m.is_symmetric());
    m.set(1, 0, true);
    REQUIRE(m.is_symmetric());
    REQUIRE(m.diagonal_all_false());
    REQUIRE(m.row(0) == Subset::of(3, {1}));
    REQUIRE(BoolMatrix::from_rows({{0, 1}, {1, 0}}).is_symmetric());
    REQUIRE_THROWS_AS(BoolMatrix::from_rows({{0, 1}}), std::invalid_argument);
}
