#include <forestmatrix/random_walk.hpp>

#include <string>
#include <thread>
#include <utility>

#include <forestmatrix/errors.hpp>
#include <forestmatrix/rng.hpp>

namespace forestmatrix {
namespace {

void require_walkable(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw ValidationError(
            "random walk requires n >= 2 (the step probability 1/(n-1) is "
            "undefined), got n = " + std::to_string(g.vertex_count()));
    }
}

}  // namespace

WalkConfig WalkConfig::for_graph(const Graph& g, long long num_walks,
                                 std::uint64_t seed, int workers) {
    require_walkable(g);
    if (num_walks < 1) {
        throw ValidationError("num_walks must be >= 1, got " +
                              std::to_string(num_walks));
    }
    const int n = g.vertex_count();
    WalkConfig cfg;
    cfg.epsilon = Rational(1, n - 1);
    cfg.q = Rational(1, n);
    cfg.num_walks = num_walks;
    cfg.seed = seed;
    cfg.max_steps = 1000LL * n;
    cfg.workers = workers < 1 ? 1 : workers;
    return cfg;
}

TransitionMatrix transition_matrix(const Graph& g) {
    require_walkable(g);
    const int n = g.vertex_count();
    const Rational eps(1, n - 1);
    RationalMatrix p(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        p(i - 1, i - 1) = Rational(1) - eps * g.degree(i);
        for (int j : g.neighbors(i)) p(i - 1, j - 1) = eps;
    }
    return TransitionMatrix{n, std::move(p)};
}

ProximityMatrix exact_q_matrix(const Graph& g) {
    const TransitionMatrix p = transition_matrix(g);
    const std::size_t n = p.entries.order();
    const Rational q(1, p.n);
    const Rational keep = Rational(1) - q;  // continue probability per round

    // Q = q * (I - (1-q) P)^(-1), the geometric mixture sum(q(1-q)^k P^k).
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = (i == j ? Rational(1) : Rational(0)) - keep * p.entries(i, j);
        }
    }
    return ProximityMatrix{p.n, m.inverse().scaled(q)};
}

WalkEstimate simulate_walks(const Graph& g, const WalkConfig& cfg) {
    require_walkable(g);
    if (cfg.num_walks < 1) {
        throw ValidationError("num_walks must be >= 1, got " +
                              std::to_string(cfg.num_walks));
    }
    const int n = g.vertex_count();
    const std::uint64_t walks = static_cast<std::uint64_t>(cfg.num_walks);
    const long long max_steps =
        cfg.max_steps > 0 ? cfg.max_steps : 1000LL * n;

    struct Local {
        std::vector<std::uint64_t> hits;
        std::uint64_t steps = 0;
        std::uint64_t zeros = 0;
        std::uint64_t aborted = 0;
    };

    // Flattened task space: task id = start_index * num_walks + walk_index.
    // Each task draws only from its own derived stream, so any partition of
    // the id range gives identical results.
    const std::uint64_t tasks = static_cast<std::uint64_t>(n) * walks;
    int workers = cfg.workers < 1 ? 1 : cfg.workers;
    if (static_cast<std::uint64_t>(workers) > tasks) {
        workers = static_cast<int>(tasks);
    }
    std::vector<Local> partial(workers);

    auto run = [&](int w, std::uint64_t begin, std::uint64_t end) {
        Local& loc = partial[w];
        loc.hits.assign(static_cast<std::size_t>(n) * n, 0);
        for (std::uint64_t id = begin; id < end; ++id) {
            const int start = static_cast<int>(id / walks);
            const std::uint64_t walk = id % walks;
            SplitMix64 rng(derive_stream(cfg.seed,
                                         static_cast<std::uint64_t>(start),
                                         walk));

            // Geometric step count: rounds until a 1-in-n success, counting
            // failures.  A draw past max_steps aborts and re-samples.
            long long k;
            for (;;) {
                k = 0;
                bool completed = true;
                while (rng.uniform_below(static_cast<std::uint64_t>(n)) != 0) {
                    if (++k > max_steps) {
                        ++loc.aborted;
                        completed = false;
                        break;
                    }
                }
                if (completed) break;
            }
            loc.steps += static_cast<std::uint64_t>(k);
            if (k == 0) ++loc.zeros;

            // k steps of the chain: from v, a uniform draw in [0, n-2]
            // either indexes a neighbor (sorted order) or means "stay".
            int v = start + 1;
            for (long long s = 0; s < k; ++s) {
                const std::uint64_t u =
                    rng.uniform_below(static_cast<std::uint64_t>(n) - 1);
                const auto nb = g.neighbors(v);
                if (u < nb.size()) v = nb[static_cast<std::size_t>(u)];
            }
            ++loc.hits[static_cast<std::size_t>(start) * n + (v - 1)];
        }
    };

    if (workers == 1) {
        run(0, 0, tasks);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = tasks / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t end = (w + 1 == workers) ? tasks : begin + chunk;
            pool.emplace_back(run, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    WalkEstimate est;
    est.n = n;
    est.num_walks_per_start = cfg.num_walks;
    est.hits.assign(n, std::vector<std::uint64_t>(n, 0));
    est.estimates.assign(n, std::vector<double>(n, 0.0));
    for (const Local& loc : partial) {
        est.total_steps += loc.steps;
        est.zero_step_walks += loc.zeros;
        est.aborted_walks += loc.aborted;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                est.hits[i][j] += loc.hits[static_cast<std::size_t>(i) * n + j];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            est.estimates[i][j] =
                static_cast<double>(est.hits[i][j]) / static_cast<double>(walks);
        }
    }
    return est;
}

Rational expected_steps(const Graph& g) {
    require_walkable(g);
    const Rational q(1, g.vertex_count());
    return (Rational(1) - q) / q;
}

}  // namespace forestmatrix
