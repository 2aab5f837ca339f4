#include <forestmatrix/verify.hpp>

#include <cmath>
#include <string>
#include <utility>

#include <forestmatrix/closed_forms.hpp>
#include <forestmatrix/enumeration.hpp>
#include <forestmatrix/errors.hpp>
#include <forestmatrix/fib_lucas.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/random_walk.hpp>
#include <forestmatrix/rng.hpp>

namespace forestmatrix {
namespace {

std::string entry_name(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

HighFloat rational_gap(const Rational& value, const HighFloat& limit) {
    const HighFloat gap = to_highfloat(value) - limit;
    return gap < 0 ? HighFloat(-gap) : gap;
}

// T_n with the extra edge (1,2); no closed form, exact computation only.
Graph tcaterpillar_plus_edge(int n) {
    Graph t = make_tcaterpillar(n);
    std::vector<std::pair<int, int>> edges(t.edges().begin(), t.edges().end());
    edges.emplace_back(1, 2);
    return Graph(n, std::move(edges));
}

}  // namespace

std::vector<LabeledGraph> family_corpus(int max_n) {
    std::vector<LabeledGraph> corpus;
    for (int n = 2; n <= max_n; ++n) {
        corpus.push_back({"path n=" + std::to_string(n), make_path(n)});
    }
    for (int n = 3; n <= max_n; ++n) {
        corpus.push_back({"cycle n=" + std::to_string(n), make_cycle(n)});
    }
    for (int n = 3; n <= max_n; ++n) {
        corpus.push_back(
            {"T-caterpillar n=" + std::to_string(n), make_tcaterpillar(n)});
    }
    return corpus;
}

std::vector<LabeledGraph> random_corpus(int count, int max_edges,
                                        std::uint64_t seed) {
    std::vector<LabeledGraph> corpus;
    corpus.reserve(static_cast<std::size_t>(count));
    constexpr double kDensities[] = {0.25, 0.4, 0.6, 0.85};
    for (int k = 0; k < count; ++k) {
        const int n = 4 + k % 5;
        const double pairs = n * (n - 1) / 2.0;
        // Keep the expected edge count below the limit so the rejection
        // loop below terminates quickly.
        const double p =
            std::min(kDensities[(k / 5) % 4], (max_edges - 1.0) / pairs);
        for (std::uint64_t attempt = 0;; ++attempt) {
            Graph g = random_graph(n, p, derive_stream(seed, k, attempt));
            if (g.edge_count() <= max_edges) {
                corpus.push_back({"random #" + std::to_string(k) +
                                      " (n=" + std::to_string(n) + ", " +
                                      std::to_string(g.edge_count()) +
                                      " edges)",
                                  std::move(g)});
                break;
            }
        }
    }
    return corpus;
}

MatrixFixture default_fixture() {
    // Reference values for the 4-vertex path; the same numbers are frozen
    // in the unit tests.
    const long long reference[4][4] = {{13, 5, 2, 1},
                                       {5, 10, 4, 2},
                                       {2, 4, 10, 5},
                                       {1, 2, 5, 13}};
    ForestCountMatrix expected;
    expected.n = 4;
    expected.f = 21;
    expected.counts = IntegerMatrix(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) expected.counts(i, j) = reference[i][j];
    }
    return MatrixFixture{make_path(4), std::move(expected)};
}

SuiteResult verify_fixture(const MatrixFixture& fx) {
    SuiteResult suite{"fixture"};
    const ForestCountMatrix computed = forest_matrix_exact(fx.graph);

    suite.expect(computed.f == fx.expected.f, [&] {
        return "total count f: fixture says " + to_string(fx.expected.f) +
               ", exact computation gives " + to_string(computed.f);
    });
    for (int i = 0; i < computed.n; ++i) {
        for (int j = 0; j < computed.n; ++j) {
            suite.expect(
                computed.counts(i, j) == fx.expected.counts(i, j), [&] {
                    return "counts entry " + entry_name(i + 1, j + 1) +
                           ": fixture says " +
                           to_string(fx.expected.counts(i, j)) +
                           ", exact computation gives " +
                           to_string(computed.counts(i, j));
                });
        }
    }
    return suite;
}

SuiteResult verify_oracle_equivalence(
    const std::vector<LabeledGraph>& corpus) {
    SuiteResult suite{"oracle-equivalence"};
    for (const auto& [label, g] : corpus) {
        const ForestCountMatrix exact = forest_matrix_exact(g);
        const ForestCountMatrix oracle = forest_matrix_by_enumeration(g);

        suite.expect(exact.f == oracle.f, [&] {
            return label + ": exact f = " + to_string(exact.f) +
                   " but enumeration counts " + to_string(oracle.f);
        });
        suite.expect(exact.counts == oracle.counts, [&] {
            return label + ": adjugate and enumeration matrices differ";
        });

        // Constrained counts must reproduce every f_ij individually.
        const int n = g.vertex_count();
        bool constrained_ok = true;
        std::string first_bad;
        for (int i = 1; i <= n && constrained_ok; ++i) {
            for (int j = 1; j <= n && constrained_ok; ++j) {
                ForestConstraint c;
                c.same_tree_rooted_at = std::make_pair(i, j);
                const BigInt counted = count_forests_constrained(g, c);
                if (counted != exact.counts(i - 1, j - 1)) {
                    constrained_ok = false;
                    first_bad = label + ": constrained count " +
                                entry_name(i, j) + " = " + to_string(counted) +
                                " but f_ij = " +
                                to_string(exact.counts(i - 1, j - 1));
                }
            }
        }
        suite.expect(constrained_ok, [&] { return first_bad; });

        // Rooted forests of g biject with spanning trees of the
        // hub-augmented graph.
        const BigInt hub_trees = count_spanning_trees(augment_with_hub(g));
        suite.expect(hub_trees == exact.f, [&] {
            return label + ": hub-augmented spanning trees " +
                   to_string(hub_trees) + " != f = " + to_string(exact.f);
        });
    }
    return suite;
}

SuiteResult verify_closed_forms(int max_n) {
    SuiteResult suite{"closed-forms"};
    for (int n = 2; n <= max_n; ++n) {
        const ForestCountMatrix closed = path_counts(n);
        const ForestCountMatrix exact = forest_matrix_exact(make_path(n));
        suite.expect(closed.f == exact.f && closed.counts == exact.counts,
                     [&] {
                         return "path n=" + std::to_string(n) +
                                ": closed form differs from exact computation";
                     });
    }
    for (int n = 3; n <= max_n; ++n) {
        const ForestCountMatrix theorem = cycle_counts(n);
        const ForestCountMatrix lucas_form = cycle_counts_lucas(n);
        const ForestCountMatrix exact = forest_matrix_exact(make_cycle(n));
        suite.expect(theorem.f == exact.f && theorem.counts == exact.counts,
                     [&] {
                         return "cycle n=" + std::to_string(n) +
                                ": closed form differs from exact computation";
                     });
        suite.expect(lucas_form.f == theorem.f &&
                         lucas_form.counts == theorem.counts,
                     [&] {
                         return "cycle n=" + std::to_string(n) +
                                ": Lucas form differs from Fibonacci form";
                     });

        // Row numerators: multiplying back by the common factor must
        // reproduce the first row.
        const std::vector<BigInt> row = cycle_row_numerators(n);
        const BigInt common = n % 2 != 0 ? lucas(n) : fib(n);
        bool row_ok = row.size() == static_cast<std::size_t>(n);
        for (int d = 0; row_ok && d < n; ++d) {
            row_ok = row[d] * common == theorem.counts(0, d);
        }
        suite.expect(row_ok, [&] {
            return "cycle n=" + std::to_string(n) +
                   ": row numerators do not rebuild row 1";
        });
    }
    for (int n = 3; n <= max_n; ++n) {
        const TCaterpillarCounts closed = tcaterpillar_counts(n);
        const ForestCountMatrix exact =
            forest_matrix_exact(make_tcaterpillar(n));
        suite.expect(closed.f == exact.f, [&] {
            return "T-caterpillar n=" + std::to_string(n) + ": f = " +
                   to_string(closed.f) + " but exact gives " +
                   to_string(exact.f);
        });
        suite.expect(closed.f33 == exact.counts(2, 2), [&] {
            return "T-caterpillar n=" + std::to_string(n) + ": f33 = " +
                   to_string(closed.f33) + " but exact gives " +
                   to_string(exact.counts(2, 2));
        });
        suite.expect(closed.fnn == exact.counts(n - 1, n - 1), [&] {
            return "T-caterpillar n=" + std::to_string(n) + ": fnn = " +
                   to_string(closed.fnn) + " but exact gives " +
                   to_string(exact.counts(n - 1, n - 1));
        });
    }
    return suite;
}

SuiteResult verify_walk_identity(int max_family_n,
                                 const std::vector<LabeledGraph>& corpus) {
    SuiteResult suite{"walk-identity"};
    std::vector<LabeledGraph> graphs = family_corpus(max_family_n);
    for (const auto& lg : corpus) graphs.push_back(lg);

    for (const auto& [label, g] : graphs) {
        const int n = g.vertex_count();
        const TransitionMatrix p = transition_matrix(g);

        bool stochastic = true;
        for (int i = 0; stochastic && i < n; ++i) {
            if (p.entries.row_sum(i) != Rational(1)) stochastic = false;
            for (int j = 0; stochastic && j < n; ++j) {
                const Rational expected =
                    i == j ? Rational(1) - Rational(g.degree(i + 1), n - 1)
                    : g.has_edge(i + 1, j + 1) ? Rational(1, n - 1)
                                               : Rational(0);
                if (p.entries(i, j) != expected) stochastic = false;
            }
        }
        suite.expect(stochastic, [&] {
            return label + ": transition matrix is not the lazy chain";
        });

        const ProximityMatrix via_walk = exact_q_matrix(g);
        const ProximityMatrix via_forests =
            proximity_matrix(forest_matrix_exact(g));
        suite.expect(via_walk.entries == via_forests.entries, [&] {
            return label + ": Q and F differ";
        });

        suite.expect(expected_steps(g) == Rational(n - 1), [&] {
            return label + ": expected steps != n-1";
        });
    }
    return suite;
}

SuiteResult verify_proximity_bounds(const std::vector<LabeledGraph>& corpus) {
    SuiteResult suite{"proximity-bounds"};
    for (const auto& [label, g] : corpus) {
        const int n = g.vertex_count();
        const ForestCountMatrix fc = forest_matrix_exact(g);
        const ProximityMatrix pm = proximity_matrix(fc);

        suite.expect(fc.counts.is_symmetric(),
                     [&] { return label + ": counts not symmetric"; });

        bool stochastic = true;
        for (int i = 0; i < n; ++i) {
            if (fc.counts.row_sum(i) != fc.f ||
                fc.counts.column_sum(i) != fc.f ||
                pm.entries.row_sum(i) != Rational(1) ||
                pm.entries.column_sum(i) != Rational(1)) {
                stochastic = false;
            }
        }
        suite.expect(stochastic,
                     [&] { return label + ": F is not doubly stochastic"; });

        bool positive_definite = true;
        for (int k = 1; k <= n; ++k) {
            if (fc.counts.leading_submatrix(k).determinant() <= 0) {
                positive_definite = false;
            }
        }
        suite.expect(positive_definite, [&] {
            return label + ": a leading principal minor is not positive";
        });

        bool half_bound = true;
        bool degree_bound = true;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j && 2 * fc.counts(i, j) > fc.counts(i, i)) {
                    half_bound = false;
                }
            }
            if (fc.counts(i, i) * (1 + g.degree(i + 1)) < fc.f) {
                degree_bound = false;
            }
        }
        suite.expect(half_bound, [&] {
            return label + ": some off-diagonal f_ij exceeds f_ii/2";
        });
        suite.expect(degree_bound, [&] {
            return label + ": some f_ii * (1+d_i) falls below f";
        });
    }
    return suite;
}

SuiteResult verify_boundary_case() {
    SuiteResult suite{"boundary-case"};

    const ProximityMatrix k3 =
        proximity_matrix(forest_matrix_exact(make_complete(3)));
    for (int i = 0; i < 3; ++i) {
        suite.expect(k3.entries(i, i) == Rational(1, 2), [&] {
            return "triangle: diagonal entry " + entry_name(i + 1, i + 1) +
                   " is not exactly 1/2";
        });
    }
    for (const auto& c : classify_vertices(k3)) {
        suite.expect(c.kind == VertexKind::boundary, [&] {
            return "triangle: vertex " + std::to_string(c.vertex) +
                   " not classified as boundary";
        });
    }

    const auto p4 =
        classify_vertices(proximity_matrix(forest_matrix_exact(make_path(4))));
    suite.expect(p4[0].kind == VertexKind::introvert &&
                     p4[3].kind == VertexKind::introvert,
                 [] { return std::string("path n=4: endpoints not introvert"); });
    suite.expect(p4[1].kind == VertexKind::extrovert &&
                     p4[2].kind == VertexKind::extrovert,
                 [] { return std::string("path n=4: inner vertices not extrovert"); });

    return suite;
}

SuiteResult verify_golden_limits() {
    SuiteResult suite{"golden-limits"};
    const HighFloat tight("1e-12");
    const HighFloat loose("1e-10");

    // Path first-vertex ratio: strictly decreasing gap, tiny by n = 40.
    HighFloat previous = golden_ratio_gap(GoldenFamily::path_first_vertex, 2);
    bool decreasing = true;
    for (int n = 3; n <= 60; ++n) {
        const HighFloat gap =
            golden_ratio_gap(GoldenFamily::path_first_vertex, n);
        if (!(gap < previous)) decreasing = false;
        previous = gap;
    }
    suite.expect(decreasing, [] {
        return std::string("path gap is not strictly decreasing on 2..60");
    });
    suite.expect(
        golden_ratio_gap(GoldenFamily::path_first_vertex, 40) < tight,
        [] { return std::string("path gap at n=40 is not below 1e-12"); });
    suite.expect(
        golden_ratio_gap(GoldenFamily::tcat_last_vertex, 40) < tight, [] {
            return std::string(
                "T-caterpillar last-vertex gap at n=40 is not below 1e-12");
        });
    suite.expect(
        golden_ratio_gap(GoldenFamily::tcat_vertex_3, 40) < tight, [] {
            return std::string(
                "T-caterpillar vertex-3 gap at n=40 is not below 1e-12");
        });

    // The same limits survive adding edge (1,2); no closed form, so go
    // through the exact matrix.
    const int n = 40;
    const ForestCountMatrix fc = forest_matrix_exact(tcaterpillar_plus_edge(n));
    const Rational last_ratio(fc.counts(n - 1, n - 1), fc.f);
    const Rational third_ratio(fc.counts(2, 2), fc.f);
    suite.expect(rational_gap(last_ratio, golden_ratio_inverse()) < loose,
                 [] {
                     return std::string("T-caterpillar + edge (1,2): last-vertex "
                                        "gap at n=40 is not below 1e-10");
                 });
    suite.expect(
        rational_gap(third_ratio, one_minus_golden_inverse()) < loose, [] {
            return std::string("T-caterpillar + edge (1,2): vertex-3 gap at "
                               "n=40 is not below 1e-10");
        });

    return suite;
}

std::vector<SuiteResult> run_verification(
    VerifyScope scope, const std::optional<MatrixFixture>& fixture) {
    const bool full = scope == VerifyScope::all;
    const auto families = family_corpus(8);
    const auto randoms = random_corpus(200, 12, kDefaultSeed);

    std::vector<LabeledGraph> corpus = families;
    for (const auto& lg : randoms) corpus.push_back(lg);

    std::vector<SuiteResult> results;
    results.push_back(verify_fixture(fixture ? *fixture : default_fixture()));
    results.push_back(verify_oracle_equivalence(corpus));
    results.push_back(verify_closed_forms(full ? 40 : 12));
    results.push_back(verify_walk_identity(full ? 30 : 12, randoms));
    results.push_back(verify_proximity_bounds(corpus));
    results.push_back(verify_boundary_case());
    results.push_back(verify_golden_limits());
    return results;
}

}  // namespace forestmatrix
