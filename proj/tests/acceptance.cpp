// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line. Run directly or through ctest (-R acceptance).
#include <catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "apartness/apartness.hpp"
#include "oracles.hpp"

using namespace apartness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, double secs = -1.0) {
    std::cout << "ACCEPTANCE " << index << " " << name << ": " << (ok ? "PASS" : "FAIL");
    if (secs >= 0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", secs);
        std::cout << buf;
    }
    std::cout << std::endl;
}

std::vector<Space> axiom_passing_models(int n) {
    std::vector<Space> out;
    for (const Space& s : oracle::all_models(n))
        if (check_axioms(s).all_pass()) out.push_back(s);
    return out;
}

} // namespace

TEST_CASE("criterion 1: disjoint-union axiom closure") {
    const auto start = Clock::now();
    std::vector<Space> pool;
    for (int n = 1; n <= 3; ++n)
        for (const Space& s : axiom_passing_models(n)) pool.push_back(s);

    std::mt19937 rng(2026);
    int added = 0;
    while (added < 200) {
        const Space s = oracle::random_model(4, rng);
        if (!check_axioms(s).all_pass()) continue;
        pool.push_back(s);
        ++added;
    }

    long failures = 0;
    for (const Space& x : pool)
        for (const Space& y : pool)
            if (!check_axioms(disjoint_union(x, y)).all_pass()) ++failures;

    const double secs = seconds_since(start);
    const bool ok = failures == 0 && secs < 60.0;
    report(1, "disjoint-union-axiom-closure", ok, secs);
    REQUIRE(failures == 0);
    REQUIRE(secs < 60.0);
}

TEST_CASE("criterion 2: gluing-map lemma") {
    const auto start = Clock::now();
    long failures = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Space& e : oracle::all_models(n)) {
            const unsigned count = 1u << n;
            for (unsigned xm = 1; xm < count; ++xm)
                for (unsigned ym = 1; ym < count; ++ym) {
                    const Gluing g = glue_map(oracle::subset_of_mask(n, xm),
                                              oracle::subset_of_mask(n, ym), e);
                    if (!is_strongly_continuous(g.map, g.domain, e).ok) ++failures;
                }
        }
    const double secs = seconds_since(start);
    report(2, "gluing-map-strong-continuity", failures == 0, secs);
    REQUIRE(failures == 0);
}

TEST_CASE("criterion 3: product laws") {
    const auto start = Clock::now();

    std::vector<Space> factors;
    for (int n = 1; n <= 3; ++n)
        for (const Space& s : oracle::all_models(n)) factors.push_back(s);

    // domains and all their strongly continuous maps into a given target
    std::vector<Space> domains;
    for (int n = 1; n <= 2; ++n)
        for (const Space& s : oracle::all_models(n)) domains.push_back(s);
    auto sc_maps_into = [&](const Space& dom, const Space& target) {
        std::vector<PointMap> out;
        std::vector<int> img(dom.n, 0);
        while (true) {
            PointMap f(dom.n, target.n, img);
            if (is_strongly_continuous(f, dom, target).ok) out.push_back(f);
            int k = dom.n - 1;
            while (k >= 0 && img[k] == target.n - 1) img[k--] = 0;
            if (k < 0) break;
            ++img[k];
        }
        return out;
    };

    // every factor pair with n <= 3, with the pair-map sweep running all
    // strongly continuous maps out of the full two-point-and-below catalog
    long projection_failures = 0, pair_failures = 0, closure_failures = 0;
    for (const Space& x : factors)
        for (const Space& y : factors) {
            const Space pr = product(x, y);
            if (!is_strongly_continuous(projection(x, y, 0), pr, x).ok) ++projection_failures;
            if (!is_strongly_continuous(projection(x, y, 1), pr, y).ok) ++projection_failures;
            if (check_axioms(x).all_pass() && check_axioms(y).all_pass() &&
                !check_axioms(pr).all_pass())
                ++closure_failures;
            for (const Space& a : domains) {
                const auto h1s = sc_maps_into(a, x);
                for (const Space& b : domains) {
                    const Space dom = product(a, b);
                    for (const PointMap& h1 : h1s)
                        for (const PointMap& h2 : sc_maps_into(b, y))
                            if (!is_strongly_continuous(pair_map(h1, h2), dom, pr).ok)
                                ++pair_failures;
                }
            }
        }

    const double secs = seconds_since(start);
    const bool ok = projection_failures == 0 && pair_failures == 0 && closure_failures == 0;
    report(3, "product-laws", ok, secs);
    REQUIRE(projection_failures == 0);
    REQUIRE(pair_failures == 0);
    REQUIRE(closure_failures == 0);
}

TEST_CASE("criterion 4: union-theorem harness at depth 4") {
    const auto start = Clock::now();
    const HarnessReport rep = union_harness(4);
    const double secs = seconds_since(start);
    const bool ok = rep.all_pass() && secs < 10.0;
    report(4, "union-harness-depth-4", ok, secs);
    REQUIRE(rep.preconditions_ok());
    REQUIRE(rep.w_range_dense.ok);
    REQUIRE(rep.w_strongly_continuous.ok);
    REQUIRE(rep.f_open.ok);
    REQUIRE(rep.gwf_strongly_continuous.ok);
    REQUIRE(rep.gwf_image_dense.ok);
    REQUIRE(secs < 10.0);
}

TEST_CASE("criterion 5: fast paths agree with brute-force searches, n <= 4") {
    const auto start = Clock::now();
    long mismatches = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Space& s : oracle::all_models(n)) {
            const bool b5_fast = check_axioms(s).b5.ok;
            const bool b5_flag = check_axioms(s, {.b5_brute_force = true}).b5.ok;
            if (b5_fast != b5_flag || b5_fast != oracle::b5(s)) ++mismatches;

            const bool ef_fast = check_ef(s).ok;
            const bool ef_flag = check_ef(s, {.brute_force = true}).ok;
            if (ef_fast != ef_flag || ef_fast != oracle::ef(s)) ++mismatches;

            const bool nn_fast = check_nn(s).ok;
            const bool nn_flag = check_nn(s, {.brute_force = true}).ok;
            if (nn_fast != nn_flag || nn_fast != oracle::nn(s)) ++mismatches;

            const Topology top(s);
            for (int x = 0; x < s.n; ++x)
                if (top.min_neighborhood(x).to_mask() != oracle::min_neighborhood(s, x))
                    ++mismatches;
        }
    const double secs = seconds_since(start);
    report(5, "oracle-equivalences", mismatches == 0, secs);
    REQUIRE(mismatches == 0);
}

TEST_CASE("criterion 6: NN and B5 verdict columns identical, n <= 4") {
    const auto start = Clock::now();
    long divergences = 0;
    long checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Space& s : oracle::all_models(n)) {
            ++checked;
            if (check_nn(s).ok != check_axioms(s).b5.ok) ++divergences;
        }
    const double secs = seconds_since(start);
    report(6, "nn-equals-b5", divergences == 0 && checked == 760, secs);
    REQUIRE(checked == 760);
    REQUIRE(divergences == 0);
}

TEST_CASE("criterion 7: EF implies D12 on every EF-passing model, n <= 4") {
    const auto start = Clock::now();
    long failures = 0;
    long ef_models = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Space& s : oracle::all_models(n)) {
            if (!check_ef(s).ok) continue;
            ++ef_models;
            const Topology top(s);
            if (!check_d12(s, top).ok) ++failures;
        }
    const double secs = seconds_since(start);
    report(7, "ef-implies-d12", failures == 0 && ef_models > 0, secs);
    REQUIRE(ef_models > 0);
    REQUIRE(failures == 0);
}

TEST_CASE("criterion 8: induced spaces pass axioms and separation properties, n <= 5") {
    const auto start = Clock::now();
    std::mt19937 rng(2028);

    std::vector<std::pair<std::string, Space>> family;
    // metric-induced: random triangle-valid metrics plus cantor truncations
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 6; ++trial)
            family.push_back({"metric", from_metric(oracle::random_metric(n, rng))});
    family.push_back({"metric", from_metric(cantor(CantorSpec(1)))});
    family.push_back({"metric", from_metric(cantor(CantorSpec(2)))});
    // uniform-induced with the induced (tight) inequality: threshold bases
    // of metrics, the diagonal base, and partition chains
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 3; ++trial)
            family.push_back(
                {"uniform", from_uniform(metric_entourages(oracle::random_metric(n, rng)))});
    for (int n = 1; n <= 5; ++n) {
        BoolMatrix diag(n);
        for (int i = 0; i < n; ++i) diag.set(i, i, true);
        family.push_back({"uniform", from_uniform(UniformBase(n, {diag}))});
    }
    for (int n = 2; n <= 5; ++n) {
        // a chain: diagonal plus one coarser equivalence (pairing adjacent
        // points), still Hausdorff because the diagonal is a member
        BoolMatrix diag(n), coarse(n);
        for (int i = 0; i < n; ++i) {
            diag.set(i, i, true);
            coarse.set(i, i, true);
        }
        for (int i = 0; i + 1 < n; i += 2) {
            coarse.set(i, i + 1, true);
            coarse.set(i + 1, i, true);
        }
        family.push_back({"uniform", from_uniform(UniformBase(n, {diag, coarse}))});
    }

    long failures = 0;
    long difference_reading_failures = 0;
    for (const auto& [kind, s] : family) {
        if (!check_axioms(s).all_pass()) ++failures;
        if (!check_ef(s).ok) ++failures;
        if (!check_nn(s).ok) ++failures;
        if (!check_wss(s, WssReading::kNeighborhood).ok) ++failures;
        if (!check_wss(s, WssReading::kDifference).ok) ++difference_reading_failures;
    }
    const double secs = seconds_since(start);
    report(8, "induced-space-guarantees", failures == 0, secs);
    std::cout << "  (WSS difference-reading failures on induced spaces: "
              << difference_reading_failures << " of " << family.size() << ")" << std::endl;
    REQUIRE(failures == 0);
}

TEST_CASE("criterion 9: convergent nets are totally Cauchy in WSS models, n <= 3, m <= 4") {
    const auto start = Clock::now();

    // all directed preorders with up to four indices
    std::vector<BoolMatrix> orders;
    for (int m = 1; m <= 4; ++m) {
        const int offdiag = m * m - m;
        for (unsigned code = 0; code < (1u << offdiag); ++code) {
            BoolMatrix ord(m);
            int bit = 0;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    if (a == b) {
                        ord.set(a, b, true);
                        continue;
                    }
                    if (code & (1u << bit)) ord.set(a, b, true);
                    ++bit;
                }
            bool valid = true;
            for (int a = 0; a < m && valid; ++a)
                for (int b = 0; b < m && valid; ++b)
                    for (int c = 0; c < m && valid; ++c)
                        if (ord.at(a, b) && ord.at(b, c) && !ord.at(a, c)) valid = false;
            for (int a = 0; a < m && valid; ++a)
                for (int b = 0; b < m && valid; ++b) {
                    bool bound = false;
                    for (int c = 0; c < m && !bound; ++c)
                        if (ord.at(a, c) && ord.at(b, c)) bound = true;
                    if (!bound) valid = false;
                }
            if (valid) orders.push_back(std::move(ord));
        }
    }

    long failures = 0;
    long convergent_nets = 0;
    for (const Space& s : oracle::all_models(3)) {
        if (!check_wss(s, WssReading::kNeighborhood).ok) continue;
        for (const BoolMatrix& ord : orders) {
            const int m = ord.size();
            std::vector<int> values(m, 0);
            while (true) {
                const DirectedNet net(ord, values);
                bool convergent = false;
                for (int x = 0; x < s.n && !convergent; ++x)
                    if (net_converges(net, s, x)) convergent = true;
                if (convergent) {
                    ++convergent_nets;
                    if (!totally_cauchy(net, s, TotallyCauchyVariant::kCorrected).ok) ++failures;
                }
                int k = m - 1;
                while (k >= 0 && values[k] == s.n - 1) values[k--] = 0;
                if (k < 0) break;
                ++values[k];
            }
        }
    }
    const double secs = seconds_since(start);
    report(9, "convergent-implies-totally-cauchy", failures == 0 && convergent_nets > 0, secs);
    REQUIRE(convergent_nets > 0);
    REQUIRE(failures == 0);
}

TEST_CASE("criterion 10: model finder separates B5, n=3 sweep under a second") {
    // the separation query
    ModelQuery q;
    q.n = 3;
    q.require = {Prop::kB1, Prop::kB2, Prop::kB3, Prop::kB4};
    q.forbid = {Prop::kB5};
    const std::vector<ModelReport> separated = enumerate_models(q);
    bool found_and_verified = !separated.empty();
    for (const ModelReport& rep : separated) {
        const AxiomReport ax = check_axioms(rep.model);
        if (!(ax.b1.ok && ax.b2.ok && ax.b3.ok && ax.b4.ok) || ax.b5.ok) found_and_verified = false;
        if (oracle::b5(rep.model)) found_and_verified = false;
    }

    // the raw sweep: 27 candidates, timed
    const auto start = Clock::now();
    ModelQuery all;
    all.n = 3;
    const std::vector<ModelReport> sweep = enumerate_models(all);
    const double secs = seconds_since(start);

    const bool ok = found_and_verified && sweep.size() == 27 && secs < 1.0;
    report(10, "model-finder-b5-separation", ok, secs);
    REQUIRE(found_and_verified);
    REQUIRE(sweep.size() == 27);
    REQUIRE(secs < 1.0);
}
