#pragma once

#include <optional>
#include <string>
#include <vector>

#include <forestmatrix/graph.hpp>
#include <forestmatrix/serialization.hpp>

namespace forestmatrix {

// Outcome of one verification suite: how many checks ran and the messages
// for those that failed.
struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> messages;

    bool ok() const { return failures == 0; }
    void pass() { ++checks; }
    void fail(std::string message) {
        ++checks;
        ++failures;
        messages.push_back(std::move(message));
    }
    // Records `condition`; on failure stores the message built by `desc`.
    template <typename MakeMessage>
    void expect(bool condition, MakeMessage&& desc) {
        if (condition) {
            pass();
        } else {
            fail(desc());
        }
    }
};

// fast: every suite at reduced sweep depth (full oracle corpus, families to
// n = 12 elsewhere).  all: full sweep depths (closed forms to n = 40, walk
// identity to n = 30).
enum class VerifyScope { fast, all };

struct LabeledGraph {
    std::string label;
    Graph graph;
};

// Default seed for anything randomized that the caller did not seed.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// All P_n (n >= 2), C_n and T_n (n >= 3) up to max_n, labeled.
std::vector<LabeledGraph> family_corpus(int max_n);

// `count` seeded random graphs with at most max_edges edges, orders 4..8,
// a deterministic function of (count, max_edges, seed).
std::vector<LabeledGraph> random_corpus(int count, int max_edges,
                                        std::uint64_t seed);

// The built-in reference fixture: P4 with its known count matrix.
MatrixFixture default_fixture();

// Exact recomputation of a fixture's matrix; mismatches name the entry,
// e.g. "counts entry (1,1)".
SuiteResult verify_fixture(const MatrixFixture& fx);

// Brute-force enumeration versus the exact adjugate: totals, entries,
// constrained counts, and the spanning-tree/hub cross-check.
SuiteResult verify_oracle_equivalence(const std::vector<LabeledGraph>& corpus);

// Path/cycle/T-caterpillar closed forms against the exact computation for
// 2 <= n <= max_n, including the Fibonacci/Lucas cross-identities and the
// cycle row-numerator sequences.
SuiteResult verify_closed_forms(int max_n);

// The stopped-walk identity Q = F, the transition-matrix sanity checks,
// and expected_steps = n-1, on families up to max_family_n plus the given
// corpus.
SuiteResult verify_walk_identity(int max_family_n,
                                 const std::vector<LabeledGraph>& corpus);

// Structural facts about F on the corpus: symmetry, double stochasticity,
// positive definiteness, and the diagonal-dominance bounds
// 2 f_ij <= f_ii and f_ii (1 + d_i) >= f.
SuiteResult verify_proximity_bounds(const std::vector<LabeledGraph>& corpus);

// The exact boundary case: every K3 diagonal ratio is exactly 1/2, plus
// the path classification (endpoints introvert, inner vertices extrovert).
SuiteResult verify_boundary_case();

// Golden-ratio limits: gap decay for paths, the two T-caterpillar limits,
// and the same limits for T_n plus edge (1,2) computed exactly.
SuiteResult verify_golden_limits();

// Every suite for the scope, in a fixed order, using the given fixture (or
// the built-in one).
std::vector<SuiteResult> run_verification(
    VerifyScope scope, const std::optional<MatrixFixture>& fixture = {});

}  // namespace forestmatrix
