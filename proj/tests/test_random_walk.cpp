#include <doctest.h>

#include <forestmatrix/errors.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/random_walk.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

using forestmatrix::Graph;
using forestmatrix::ProximityMatrix;
using forestmatrix::Rational;
using forestmatrix::TransitionMatrix;
using forestmatrix::ValidationError;
using forestmatrix::WalkConfig;
using forestmatrix::WalkEstimate;

TEST_CASE("transition matrix of the four-path: 1/(n-1) per neighbor") {
    const TransitionMatrix p = forestmatrix::transition_matrix(forestmatrix::make_path(4));
    REQUIRE(p.n == 4);
    const Rational third(1, 3);
    // Vertex 1: one neighbor, stays with probability 2/3.
    CHECK(p.entries(0, 0) == Rational(2, 3));
    CHECK(p.entries(0, 1) == third);
    CHECK(p.entries(0, 2) == Rational(0));
    // Vertex 2: two neighbors, stays with probability 1/3.
    CHECK(p.entries(1, 0) == third);
    CHECK(p.entries(1, 1) == third);
    CHECK(p.entries(1, 2) == third);
    for (std::size_t i = 0; i < 4; ++i) CHECK(p.entries.row_sum(i) == Rational(1));
}

TEST_CASE("transition matrix of the triangle: both neighbors take half each") {
    // epsilon = 1/(n-1) = 1/2 and every vertex has two neighbors, so the
    // walk never stays put.
    const TransitionMatrix p = forestmatrix::transition_matrix(forestmatrix::make_cycle(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(p.entries(i, j) == (i == j ? Rational(0) : Rational(1, 2)));
}

TEST_CASE("transition matrix of the two-path: always hop") {
    const TransitionMatrix p = forestmatrix::transition_matrix(forestmatrix::make_path(2));
    CHECK(p.entries(0, 0) == Rational(0));
    CHECK(p.entries(0, 1) == Rational(1));
    CHECK(p.entries(1, 0) == Rational(1));
    CHECK(p.entries(1, 1) == Rational(0));
}

TEST_CASE("the walk requires at least two vertices") {
    CHECK_THROWS_AS(forestmatrix::transition_matrix(Graph(1, {})), ValidationError);
    CHECK_THROWS_AS(forestmatrix::exact_q_matrix(Graph(1, {})), ValidationError);
    CHECK_THROWS_AS(forestmatrix::expected_steps(Graph(1, {})), ValidationError);
    const WalkConfig cfg = WalkConfig::for_graph(forestmatrix::make_path(2), 10, 1);
    CHECK_THROWS_AS(forestmatrix::simulate_walks(Graph(1, {}), cfg), ValidationError);
}

TEST_CASE("stopping distribution Q equals the doubly stochastic graph matrix") {
    for (const Graph& g : {forestmatrix::make_path(2), forestmatrix::make_path(5),
                           forestmatrix::make_cycle(6), forestmatrix::make_tcaterpillar(7),
                           forestmatrix::make_complete(5), Graph(4, {{1, 2}, {3, 4}}),
                           forestmatrix::random_graph(7, 0.4, 99)}) {
        CAPTURE(g.vertex_count());
        CAPTURE(g.edge_count());
        const ProximityMatrix q = forestmatrix::exact_q_matrix(g);
        const ProximityMatrix f =
            forestmatrix::proximity_matrix(forestmatrix::forest_matrix_exact(g));
        CHECK(q.entries == f.entries);
    }
}

TEST_CASE("expected steps before stopping is exactly n - 1") {
    CHECK(forestmatrix::expected_steps(forestmatrix::make_path(4)) == Rational(3));
    CHECK(forestmatrix::expected_steps(forestmatrix::make_path(2)) == Rational(1));
    CHECK(forestmatrix::expected_steps(forestmatrix::make_complete(100)) == Rational(99));
}

TEST_CASE("every walk lands somewhere: hit rows sum to the walk budget") {
    const Graph g = forestmatrix::make_cycle(5);
    const WalkEstimate est = forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, 400, 7));
    REQUIRE(est.n == 5);
    REQUIRE(est.hits.size() == 5);
    CHECK(est.num_walks_per_start == 400);
    for (int i = 0; i < 5; ++i) {
        std::uint64_t row = 0;
        for (int j = 0; j < 5; ++j) row += est.hits[i][j];
        CHECK(row == 400);
    }
    CHECK(est.aborted_walks == 0);
}

TEST_CASE("estimates are hits divided by the walk budget") {
    const Graph g = forestmatrix::make_path(3);
    const WalkEstimate est = forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, 250, 3));
    for (int i = 0; i < est.n; ++i)
        for (int j = 0; j < est.n; ++j)
            CHECK(est.estimates[i][j] ==
                  static_cast<double>(est.hits[i][j]) / 250.0);
}

TEST_CASE("simulation is deterministic in the seed and worker-independent") {
    const Graph g = forestmatrix::make_tcaterpillar(5);
    const WalkEstimate base = forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, 600, 11));
    for (int workers = 2; workers <= 5; ++workers) {
        CAPTURE(workers);
        const WalkEstimate est =
            forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, 600, 11, workers));
        CHECK(est.hits == base.hits);
        CHECK(est.total_steps == base.total_steps);
        CHECK(est.zero_step_walks == base.zero_step_walks);
    }
    // A different seed should give a different sample.
    const WalkEstimate other = forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, 600, 12));
    CHECK(other.hits != base.hits);
}

TEST_CASE("step-count telemetry matches the geometric law") {
    // K is geometric with stop probability q = 1/n: mean (1-q)/q = n-1 and
    // Pr{K = 0} = q.  With 60k walks the relative error stays within a few
    // percent at 6+ standard deviations.
    const Graph g = forestmatrix::make_cycle(6);
    const long long walks = 10000;
    const WalkEstimate est =
        forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, walks, 2024));
    const double total_walks = 6.0 * static_cast<double>(walks);
    const double mean_steps = static_cast<double>(est.total_steps) / total_walks;
    CHECK(mean_steps == doctest::Approx(5.0).epsilon(0.05));
    const double zero_fraction = static_cast<double>(est.zero_step_walks) / total_walks;
    CHECK(zero_fraction == doctest::Approx(1.0 / 6.0).epsilon(0.1));
}

TEST_CASE("estimates converge toward the exact Q at the Monte Carlo rate") {
    const Graph g = forestmatrix::make_path(4);
    const ProximityMatrix exact = forestmatrix::exact_q_matrix(g);
    double previous = 1.0;
    for (const long long walks : {100LL, 10000LL}) {
        const WalkEstimate est =
            forestmatrix::simulate_walks(g, WalkConfig::for_graph(g, walks, 1729));
        double max_err = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double target =
                    forestmatrix::to_highfloat(exact.entries(i, j)).convert_to<double>();
                max_err = std::max(max_err, std::abs(est.estimates[i][j] - target));
            }
        CAPTURE(walks);
        // Two decades more walks should shrink the error by roughly 10x;
        // require at least 3x to keep the test robust.
        CHECK(max_err < previous / 3.0);
        previous = max_err;
    }
    // At 10^4 walks per start the worst entry is comfortably within 0.02.
    CHECK(previous < 0.02);
}

TEST_CASE("a tiny step cap forces re-sampling and is reported") {
    const Graph g = forestmatrix::make_path(3);
    WalkConfig cfg = WalkConfig::for_graph(g, 200, 5);
    cfg.max_steps = 1;  // any walk with K > 1 is discarded and re-drawn
    const WalkEstimate est = forestmatrix::simulate_walks(g, cfg);
    CHECK(est.aborted_walks > 0);
    for (int i = 0; i < est.n; ++i) {
        std::uint64_t row = 0;
        for (int j = 0; j < est.n; ++j) row += est.hits[i][j];
        CHECK(row == 200);  // completed walks still fill the budget
    }
    // With K capped at 1, every completed walk stays within one hop of the
    // start, so the far corner is never hit.
    CHECK(est.hits[0][2] == 0);
    CHECK(est.hits[2][0] == 0);
}

TEST_CASE("walk config defaults tie epsilon and q to the graph order") {
    const Graph g = forestmatrix::make_cycle(5);
    const WalkConfig cfg = WalkConfig::for_graph(g, 10, 42);
    CHECK(cfg.epsilon == Rational(1, 4));
    CHECK(cfg.q == Rational(1, 5));
    CHECK(cfg.max_steps == 5000);
    CHECK(cfg.workers == 1);
}
