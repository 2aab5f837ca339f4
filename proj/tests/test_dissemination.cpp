#include <doctest.h>

#include <forestmatrix/dissemination.hpp>
#include <forestmatrix/enumeration.hpp>
#include <forestmatrix/errors.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/rng.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

using forestmatrix::DisseminationEstimate;
using forestmatrix::ForestSampler;
using forestmatrix::Graph;
using forestmatrix::ProximityMatrix;
using forestmatrix::ResourceLimitError;
using forestmatrix::RootedForest;
using forestmatrix::SplitMix64;

namespace {

using ForestKey = std::pair<std::vector<std::pair<int, int>>, std::vector<int>>;

std::map<ForestKey, int> index_forests(const std::vector<RootedForest>& forests) {
    std::map<ForestKey, int> index;
    for (std::size_t k = 0; k < forests.size(); ++k)
        index.emplace(ForestKey{forests[k].edges, forests[k].roots}, static_cast<int>(k));
    return index;
}

// Upper chi-square quantile by the Wilson-Hilferty cube approximation;
// z = 3.090232 is the standard normal quantile at 0.999.
double chi2_critical(int df, double z = 3.090232) {
    const double a = 2.0 / (9.0 * static_cast<double>(df));
    const double c = 1.0 - a + z * std::sqrt(a);
    return static_cast<double>(df) * c * c * c;
}

double uniformity_statistic(const Graph& g, int samples, std::uint64_t seed, int* categories) {
    const std::vector<RootedForest> forests = forestmatrix::enumerate_rooted_forests(g);
    const std::map<ForestKey, int> index = index_forests(forests);
    const ForestSampler sampler(g);
    REQUIRE(sampler.total_forests() == forests.size());

    std::vector<std::uint64_t> observed(forests.size(), 0);
    for (int t = 0; t < samples; ++t) {
        SplitMix64 rng(forestmatrix::derive_stream(seed, static_cast<std::uint64_t>(t), 0));
        const RootedForest draw = sampler.sample(rng);
        const auto it = index.find(ForestKey{draw.edges, draw.roots});
        REQUIRE(it != index.end());  // every draw is a genuine rooted forest
        ++observed[static_cast<std::size_t>(it->second)];
    }

    const double expected = static_cast<double>(samples) / static_cast<double>(forests.size());
    double stat = 0.0;
    for (const std::uint64_t obs : observed) {
        const double d = static_cast<double>(obs) - expected;
        stat += d * d / expected;
    }
    *categories = static_cast<int>(forests.size());
    return stat;
}

}  // namespace

TEST_CASE("sampler totals equal the enumeration sizes") {
    for (const Graph& g : {forestmatrix::make_path(2), forestmatrix::make_path(4),
                           forestmatrix::make_cycle(5), forestmatrix::make_tcaterpillar(5),
                           Graph(1, {}), Graph(4, {{1, 2}, {3, 4}})}) {
        CAPTURE(g.vertex_count());
        CHECK(ForestSampler(g).total_forests() ==
              forestmatrix::enumerate_rooted_forests(g).size());
    }
}

TEST_CASE("two-vertex path: each of the three forests appears about equally") {
    const Graph g = forestmatrix::make_path(2);
    const std::vector<RootedForest> forests = forestmatrix::enumerate_rooted_forests(g);
    const std::map<ForestKey, int> index = index_forests(forests);
    const ForestSampler sampler(g);

    std::vector<int> observed(3, 0);
    const int samples = 30000;
    for (int t = 0; t < samples; ++t) {
        SplitMix64 rng(forestmatrix::derive_stream(404, static_cast<std::uint64_t>(t), 0));
        const RootedForest draw = sampler.sample(rng);
        ++observed[static_cast<std::size_t>(index.at(ForestKey{draw.edges, draw.roots}))];
    }
    for (int k = 0; k < 3; ++k) {
        CAPTURE(k);
        const double freq = static_cast<double>(observed[static_cast<std::size_t>(k)]) / samples;
        CHECK(freq == doctest::Approx(1.0 / 3.0).epsilon(0.03));
    }
}

TEST_CASE("chi-square uniformity of the forest sampler at the 0.1% level") {
    struct Case {
        Graph g;
        std::uint64_t seed;
    };
    const std::vector<Case> cases = {{forestmatrix::make_path(4), 101},
                                     {forestmatrix::make_cycle(5), 202},
                                     {forestmatrix::make_tcaterpillar(5), 303}};
    for (const Case& c : cases) {
        CAPTURE(c.g.vertex_count());
        CAPTURE(c.g.edge_count());
        int categories = 0;
        const double stat = uniformity_statistic(c.g, 100000, c.seed, &categories);
        CAPTURE(categories);
        CHECK(stat < chi2_critical(categories - 1));
    }
}

TEST_CASE("single vertex: the only forest roots the vertex at itself") {
    const Graph g(1, {});
    const ForestSampler sampler(g);
    CHECK(sampler.total_forests() == 1);
    SplitMix64 rng(9);
    CHECK(sampler.sample(rng) == RootedForest{{}, {1}});

    const DisseminationEstimate est = forestmatrix::estimate_source_probabilities(g, 50, 1);
    CHECK(est.n == 1);
    CHECK(est.source_counts[0][0] == 50);
}

TEST_CASE("every vertex has exactly one source per trial: columns sum to trials") {
    const Graph g = forestmatrix::make_tcaterpillar(5);
    const long long trials = 2000;
    const DisseminationEstimate est = forestmatrix::estimate_source_probabilities(g, trials, 17);
    CHECK(est.trials == trials);
    for (int j = 0; j < est.n; ++j) {
        std::uint64_t column = 0;
        for (int i = 0; i < est.n; ++i) column += est.source_counts[static_cast<std::size_t>(i)]
                                                                   [static_cast<std::size_t>(j)];
        CHECK(column == static_cast<std::uint64_t>(trials));
    }
}

TEST_CASE("source frequencies converge to the doubly stochastic graph matrix") {
    const Graph g = forestmatrix::make_path(4);
    const long long trials = 100000;
    const DisseminationEstimate est = forestmatrix::estimate_source_probabilities(g, trials, 5150);
    const ProximityMatrix f = forestmatrix::proximity_matrix(forestmatrix::forest_matrix_exact(g));
    double max_err = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double freq =
                static_cast<double>(est.source_counts[i][j]) / static_cast<double>(trials);
            const double target = forestmatrix::to_highfloat(f.entries(i, j)).convert_to<double>();
            max_err = std::max(max_err, std::abs(freq - target));
        }
    CHECK(max_err < 0.01);
}

TEST_CASE("triangle diagonal: a vertex sources its own unit half the time") {
    const Graph g = forestmatrix::make_cycle(3);
    const long long trials = 20000;
    const DisseminationEstimate est = forestmatrix::estimate_source_probabilities(g, trials, 31);
    for (std::size_t i = 0; i < 3; ++i) {
        const double freq =
            static_cast<double>(est.source_counts[i][i]) / static_cast<double>(trials);
        CHECK(freq == doctest::Approx(0.5).epsilon(0.04));
    }
}

TEST_CASE("estimates are deterministic in the seed") {
    const Graph g = forestmatrix::make_cycle(4);
    const DisseminationEstimate a = forestmatrix::estimate_source_probabilities(g, 500, 77);
    const DisseminationEstimate b = forestmatrix::estimate_source_probabilities(g, 500, 77);
    CHECK(a.source_counts == b.source_counts);
    const DisseminationEstimate c = forestmatrix::estimate_source_probabilities(g, 500, 78);
    CHECK(c.source_counts != a.source_counts);

    CHECK(forestmatrix::sample_rooted_forest(g, 123) == forestmatrix::sample_rooted_forest(g, 123));
}

TEST_CASE("sampling refuses graphs over the enumeration edge cap") {
    const Graph k7 = forestmatrix::make_complete(7);  // 21 edges
    CHECK_THROWS_AS(ForestSampler{k7}, ResourceLimitError);
    CHECK_THROWS_AS(forestmatrix::estimate_source_probabilities(k7, 10, 1), ResourceLimitError);
    CHECK_THROWS_AS(forestmatrix::sample_rooted_forest(k7, 1), ResourceLimitError);
}
