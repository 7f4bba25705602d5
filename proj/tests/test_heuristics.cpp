#include "doctest.h"
#include "helpers.hpp"
#include "ucp/heuristics.hpp"
#include "ucp/rng.hpp"
#include "ucp/solver.hpp"

using namespace ucp;

namespace {

SimilarityMatrix random_similarity(Rng& rng, int n) {
    std::vector<long long> xs;
    for (int i = 0; i < n; ++i) xs.push_back(rng.range(0, 12));
    return ucptest::neg_distance_similarity(xs);
}

}  // namespace

TEST_CASE("lloyd solves the easy pair and validates k") {
    const EuclideanInstance e = ucptest::line_points({0, 2});
    for (std::uint64_t seed : {0ULL, 1ULL, 7ULL}) {
        const HeuristicRun run = lloyd(e, 2, seed);
        CHECK(run.value == 0);
        CHECK(run.final_partition.labels == std::vector<int>{0, 1});
        CHECK(run.seed == seed);
        CHECK(run.method == "lloyd");
    }
    CHECK(lloyd(e, 1, 0).value == 2);
    CHECK_THROWS_AS(lloyd(e, 0, 0), InvalidK);
    CHECK_THROWS_AS(lloyd(e, 3, 0), InvalidK);
}

TEST_CASE("lloyd trajectories never increase and runs are deterministic") {
    Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.range(2, 8);
        std::vector<long long> xs;
        for (int i = 0; i < n; ++i) xs.push_back(rng.range(-20, 20));
        const EuclideanInstance e = ucptest::line_points(xs);
        const int k = rng.range(1, n);
        const std::uint64_t seed = rng.raw();
        const HeuristicRun a = lloyd(e, k, seed);
        const HeuristicRun b = lloyd(e, k, seed);
        CHECK(a.final_partition.labels == b.final_partition.labels);
        CHECK(a.value == b.value);
        CHECK(a.trajectory == b.trajectory);
        for (size_t i = 1; i < a.trajectory.size(); ++i)
            CHECK(a.trajectory[i] <= a.trajectory[i - 1]);
        CHECK(a.value == a.trajectory.back());
        // Never better than the exhaustive optimum.
        CHECK(a.value >= oracle_kmeans(e, k));
    }
}

TEST_CASE("lloyd sticks in the local trap from bad centers") {
    // Points 0, 8, 10, 18 with k = 2: starting centers {8, 10} settle on
    // {0,8} | {10,18} at cost 64, but {0} | {8,10,18} costs 56.
    const EuclideanInstance e = ucptest::line_points({0, 8, 10, 18});
    CHECK(oracle_kmeans(e, 2) == 56);
    bool saw_trap = false, saw_optimum = false;
    for (std::uint64_t seed = 0; seed < 60 && !(saw_trap && saw_optimum); ++seed) {
        const HeuristicRun run = lloyd(e, 2, seed);
        if (run.value == 64) saw_trap = true;
        if (run.value == 56) saw_optimum = true;
        CHECK(run.value >= 56);
    }
    CHECK(saw_trap);
    CHECK(saw_optimum);
}

TEST_CASE("greedy complete linkage on small graphs") {
    const MetricInstance k3 = graph_metric(ucptest::k3());
    const HeuristicRun one = greedy_complete_linkage(k3, 1);
    CHECK(one.value == 1);
    CHECK(one.final_partition.k == 1);
    CHECK(one.method == "linkage");

    const MetricInstance p3 = graph_metric(ucptest::path3());
    const HeuristicRun two = greedy_complete_linkage(p3, 2);
    CHECK(two.value == 1);
    CHECK(two.final_partition.labels == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(greedy_complete_linkage(p3, 4), InvalidK);
}

TEST_CASE("greedy linkage misses the optimal two-block split") {
    // Star-ish graph: edges (0,1), (0,2), (1,3). Greedy merges around vertex
    // 0 and ends with a diameter-2 block; grouping by the matching
    // {0,2} | {1,3} keeps both diameters at 1.
    const GraphInstance g = make_graph(4, {{0, 1}, {0, 2}, {1, 3}});
    const MetricInstance m = graph_metric(g);
    const HeuristicRun run = greedy_complete_linkage(m, 2);
    CHECK(run.value == 2);
    CHECK(min_linkage_cost(m, 2) == 1);
}

TEST_CASE("message passing finds exemplars on tiny instances") {
    SimilarityMatrix lone;
    lone.n = 1;
    lone.s = {Rational(-3)};
    const HeuristicRun single = ap_messages(lone, 0.5, 50, 5);
    CHECK(single.value == -3);
    CHECK(!single.non_convergence);
    CHECK(single.final_partition.k == 1);

    // Two mutually distant points with free self-election: both become
    // exemplars and the objective is exactly the optimum.
    SimilarityMatrix twin;
    twin.n = 2;
    twin.s = {Rational(0), Rational(-10), Rational(-10), Rational(0)};
    const HeuristicRun both = ap_messages(twin, 0.5, 200, 10);
    CHECK(!both.non_convergence);
    CHECK(both.value == 0);
    CHECK(both.final_partition.labels == std::vector<int>{0, 1});
    CHECK(both.value == oracle_best_assignment(twin));

    CHECK_THROWS_AS(ap_messages(twin, 1.0, 10, 2), ParseError);
    CHECK_THROWS_AS(ap_messages(twin, -0.1, 10, 2), ParseError);
    CHECK_THROWS_AS(ap_messages(twin, 0.5, 0, 2), ParseError);
}

TEST_CASE("message passing never beats the exhaustive assignment optimum") {
    Rng rng(58);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = rng.range(2, 7);
        SimilarityMatrix s = random_similarity(rng, n);
        // Mild self-penalties keep the exemplar count interesting.
        for (int i = 0; i < n; ++i) s.at(i, i) = Rational(-rng.range(0, 3));
        const HeuristicRun run = ap_messages(s, 0.5, 300, 10);
        CHECK(run.value <= oracle_best_assignment(s));
        const HeuristicRun again = ap_messages(s, 0.5, 300, 10);
        CHECK(run.value == again.value);
        CHECK(run.final_partition.labels == again.final_partition.labels);
    }
}

TEST_CASE("pam climbs to the medoid optimum on a line") {
    const SimilarityMatrix s = ucptest::neg_distance_similarity({0, 1, 3});
    for (std::uint64_t seed : {0ULL, 3ULL, 11ULL}) {
        const HeuristicRun run = pam_swap(s, 2, seed);
        CHECK(run.value == -1);
        CHECK(run.method == "pam");
        for (size_t i = 1; i < run.trajectory.size(); ++i)
            CHECK(run.trajectory[i] > run.trajectory[i - 1]);
    }
    CHECK(pam_swap(s, 3, 5).value == 0);
    CHECK_THROWS_AS(pam_swap(s, 0, 0), InvalidK);
}

TEST_CASE("pam stays below the exemplar oracle and is deterministic") {
    Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = rng.range(3, 7);
        const SimilarityMatrix s = random_similarity(rng, n);
        const int k = rng.range(1, n);
        const std::uint64_t seed = rng.raw();
        const HeuristicRun run = pam_swap(s, k, seed);
        CHECK(run.value <= oracle_kmedoids(s, k));
        CHECK(pam_swap(s, k, seed).value == run.value);
    }
}

TEST_CASE("mean shift merges modes by bandwidth") {
    const EuclideanInstance lone = ucptest::line_points({5});
    const MeanShiftResult one = mean_shift(lone, 1.0, 1e-9, 200);
    CHECK(one.modes.size() == 1);
    CHECK(one.partition.labels == std::vector<int>{0});
    CHECK(!one.max_iters_exceeded[0]);

    const EuclideanInstance pair = ucptest::line_points({0, 10});
    const MeanShiftResult narrow = mean_shift(pair, 0.5, 1e-9, 500);
    CHECK(narrow.modes.size() == 2);
    CHECK(narrow.partition.labels == std::vector<int>{0, 1});
    CHECK(std::abs(narrow.modes[0][0] - 0.0) < 1e-6);
    CHECK(std::abs(narrow.modes[1][0] - 10.0) < 1e-6);

    const MeanShiftResult wide = mean_shift(pair, 100.0, 1e-9, 500);
    CHECK(wide.modes.size() == 1);
    CHECK(wide.partition.labels == std::vector<int>{0, 0});

    // KDE values along each ascent never decrease (fixed-point ascent).
    const EuclideanInstance mixed = ucptest::line_points({0, 1, 2, 9, 10});
    const MeanShiftResult ms = mean_shift(mixed, 1.0, 1e-9, 500);
    for (const auto& path : ms.kde_trajectories) {
        REQUIRE(!path.empty());
        for (size_t i = 1; i < path.size(); ++i)
            CHECK(path[i] >= path[i - 1] - 1e-12);
    }

    // Starving the iteration budget trips the per-point flag.
    const MeanShiftResult starved = mean_shift(mixed, 1.0, 1e-15, 1);
    bool any_flag = false;
    for (const char f : starved.max_iters_exceeded) any_flag = any_flag || f;
    CHECK(any_flag);
}

TEST_CASE("gap rows orient the difference and guard division by zero") {
    const GapRow trap =
        make_gap_row("lloyd_trap", 4, Rational(64), Rational(56), true);
    CHECK(trap.abs_gap == 8);
    CHECK(trap.rel_gap == "1/7");
    CHECK(!trap.optimal);

    const GapRow exact_hit =
        make_gap_row("pam", 0, Rational(-1), Rational(-1), false);
    CHECK(exact_hit.abs_gap == 0);
    CHECK(exact_hit.optimal);
    CHECK(exact_hit.rel_gap == "0");

    const GapRow max_gap = make_gap_row("ap", 0, Rational(-3), Rational(-1), false);
    CHECK(max_gap.abs_gap == 2);
    CHECK(max_gap.rel_gap == "2");

    const GapRow inf_gap = make_gap_row("ap", 0, Rational(-1), Rational(0), false);
    CHECK(inf_gap.rel_gap == "inf");
    CHECK(!inf_gap.optimal);
}
