#pragma once

#include <cstdint>
#include <vector>

#include <forestmatrix/bigint.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/matrix.hpp>

namespace forestmatrix {

// Parameters of the lazy random walk with geometric stopping.  epsilon and
// q are exact rationals tied to the graph's order: epsilon = 1/(n-1) is the
// per-neighbor transition probability and q = 1/n the per-round stopping
// probability.
struct WalkConfig {
    Rational epsilon;
    Rational q;
    long long num_walks = 1;   // walks per start vertex
    std::uint64_t seed = 0;
    long long max_steps = 0;   // a walk exceeding this is re-sampled
    int workers = 1;

    // Canonical config for g: epsilon = 1/(n-1), q = 1/n,
    // max_steps = 1000*n (a geometric step count beyond that is
    // astronomically unlikely; re-samples are counted transparently).
    static WalkConfig for_graph(const Graph& g, long long num_walks,
                                std::uint64_t seed, int workers = 1);
};

// The chain P = I - (1/(n-1)) L: move to each neighbor with probability
// 1/(n-1), stay put with the complementary probability.
struct TransitionMatrix {
    int n = 0;
    RationalMatrix entries;
};

// Empirical estimate of Q: hits[i][j] counts walks started at i+1 that
// stopped at j+1; every row of hits sums to num_walks_per_start.
// The telemetry fields cover completed walks only: total_steps is the sum
// of their step counts K and zero_step_walks the number with K == 0;
// aborted_walks counts discarded attempts that exceeded max_steps.
struct WalkEstimate {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> hits;
    long long num_walks_per_start = 0;
    std::vector<std::vector<double>> estimates;  // hits / num_walks_per_start
    std::uint64_t total_steps = 0;
    std::uint64_t zero_step_walks = 0;
    std::uint64_t aborted_walks = 0;
};

// Exact transition matrix P (requires n >= 2 so 1/(n-1) is defined).
TransitionMatrix transition_matrix(const Graph& g);

// The stopped-walk transition matrix Q = (1/n)(I - (1-1/n)P)^{-1}, computed
// in exact rational arithmetic from P itself.  Equals the doubly stochastic
// graph matrix F entrywise; keeping the computation on the Markov-chain
// side makes that equality a meaningful cross-check.
ProximityMatrix exact_q_matrix(const Graph& g);

// Monte Carlo estimate of Q: for each start vertex, cfg.num_walks
// independent walks, each stopping after a geometric number of steps
// (success probability q per round, sampled by exact integer Bernoulli
// trials).  Results are a pure function of (g, cfg) and independent of
// cfg.workers; each (start, walk) pair draws from its own derived RNG
// stream.
WalkEstimate simulate_walks(const Graph& g, const WalkConfig& cfg);

// Expected number of steps (1-q)/q = n-1, exactly.
Rational expected_steps(const Graph& g);

}  // namespace forestmatrix
