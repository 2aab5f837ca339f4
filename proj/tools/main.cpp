#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <forestmatrix/forestmatrix.hpp>

#include "CLI11.hpp"
#include "json.hpp"

namespace fm = forestmatrix;

namespace {

// Shared --family/--n/--input flags: a graph comes either from a family
// plus order or from a JSON file.
struct GraphSource {
    std::string family = "path";
    int n = 0;
    std::string input;

    void attach(CLI::App* cmd, bool allow_file) {
        std::vector<std::string> families = {"path", "cycle", "tcat"};
        if (allow_file) families.push_back("file");
        cmd->add_option("--family", family,
                        "graph family (or \"file\" to read --input)")
            ->check(CLI::IsMember(families));
        cmd->add_option("--n", n, "number of vertices for a family graph");
        if (allow_file) {
            cmd->add_option("--input", input,
                            "graph JSON file for --family file");
        }
    }

    fm::Graph resolve() const {
        if (family == "file") {
            if (input.empty()) {
                throw fm::ValidationError("--family file requires --input");
            }
            return fm::load_graph(input);
        }
        if (!input.empty()) {
            throw fm::ValidationError("--input is only valid with --family file");
        }
        if (n <= 0) {
            throw fm::ValidationError("--family " + family +
                                      " requires --n >= 1");
        }
        if (family == "path") return fm::make_path(n);
        if (family == "cycle") return fm::make_cycle(n);
        return fm::make_tcaterpillar(n);
    }
};

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        std::cout << content;
    } else {
        fm::write_text_file(output_path, content);
    }
}

double rational_to_double(const fm::Rational& r) {
    return r.convert_to<double>();
}

double max_abs_error(const std::vector<std::vector<double>>& estimates,
                     const fm::ProximityMatrix& exact) {
    double worst = 0.0;
    for (int i = 0; i < exact.n; ++i) {
        for (int j = 0; j < exact.n; ++j) {
            worst = std::max(worst,
                             std::abs(estimates[i][j] -
                                      rational_to_double(exact.entries(i, j))));
        }
    }
    return worst;
}

const char* kind_name(fm::VertexKind kind) {
    switch (kind) {
        case fm::VertexKind::introvert: return "introvert";
        case fm::VertexKind::extrovert: return "extrovert";
        default: return "boundary";
    }
}

int run_verify(const std::string& scope_name, const std::string& fixture_path) {
    const fm::VerifyScope scope = scope_name == "all" ? fm::VerifyScope::all
                                                      : fm::VerifyScope::fast;
    std::optional<fm::MatrixFixture> fixture;
    if (!fixture_path.empty()) {
        fixture = fm::fixture_from_json(fm::read_text_file(fixture_path));
    }

    const auto results = fm::run_verification(scope, fixture);
    long long failing_suites = 0;
    for (const auto& suite : results) {
        std::cout << "suite " << suite.name << ": " << suite.checks
                  << " checks, " << suite.failures << " failures\n";
        constexpr std::size_t kMaxShown = 20;
        for (std::size_t k = 0; k < suite.messages.size() && k < kMaxShown;
             ++k) {
            std::cout << "  - " << suite.messages[k] << "\n";
        }
        if (suite.messages.size() > kMaxShown) {
            std::cout << "  ... and " << suite.messages.size() - kMaxShown
                      << " more\n";
        }
        if (!suite.ok()) ++failing_suites;
    }
    if (failing_suites > 0) {
        std::cout << "verification: FAIL (" << failing_suites
                  << " suite(s) with failures)\n";
        return 3;
    }
    std::cout << "verification: PASS (" << results.size() << " suites)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spanning rooted forests, the doubly stochastic graph matrix, and "
        "its random-walk and dissemination interpretations"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write a family graph as JSON");
    GraphSource gen_src;
    gen_src.attach(gen_cmd, /*allow_file=*/false);
    std::string gen_output;
    gen_cmd->add_option("--output", gen_output, "output path (default stdout)");

    // matrix
    auto* matrix_cmd = app.add_subcommand(
        "matrix", "exact f and forest counts (json) or F entries (csv)");
    GraphSource matrix_src;
    matrix_src.attach(matrix_cmd, /*allow_file=*/true);
    std::string matrix_format = "json";
    std::string matrix_output;
    matrix_cmd->add_option("--format", matrix_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    matrix_cmd->add_option("--output", matrix_output,
                           "output path (default stdout)");

    // closed-form
    auto* closed_cmd = app.add_subcommand(
        "closed-form", "family closed forms without the exact pipeline");
    GraphSource closed_src;
    closed_src.attach(closed_cmd, /*allow_file=*/false);
    std::string closed_format = "json";
    std::string closed_output;
    closed_cmd->add_option("--format", closed_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    closed_cmd->add_option("--output", closed_output,
                           "output path (default stdout)");

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "introvert/extrovert/boundary per vertex");
    GraphSource classify_src;
    classify_src.attach(classify_cmd, /*allow_file=*/true);
    std::string classify_output;
    classify_cmd->add_option("--output", classify_output,
                             "output path (default stdout)");

    // walk
    auto* walk_cmd = app.add_subcommand(
        "walk", "Monte Carlo stopped random walks versus the exact matrix");
    GraphSource walk_src;
    walk_src.attach(walk_cmd, /*allow_file=*/true);
    long long walks = 100000;
    std::uint64_t walk_seed = fm::kDefaultSeed;
    std::string walk_output;
    walk_cmd->add_option("--walks", walks, "walks per start vertex");
    walk_cmd->add_option("--seed", walk_seed,
                         "RNG seed (defaults to the fixed constant 1729)");
    walk_cmd->add_option("--output", walk_output,
                         "output path (default stdout)");

    // disseminate
    auto* diss_cmd = app.add_subcommand(
        "disseminate", "uniform rooted-forest sampling source estimates");
    GraphSource diss_src;
    diss_src.attach(diss_cmd, /*allow_file=*/true);
    long long trials = 100000;
    std::uint64_t diss_seed = fm::kDefaultSeed;
    std::string diss_output;
    diss_cmd->add_option("--trials", trials, "number of sampled forests");
    diss_cmd->add_option("--seed", diss_seed,
                         "RNG seed (defaults to the fixed constant 1729)");
    diss_cmd->add_option("--output", diss_output,
                         "output path (default stdout)");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run the verification suites");
    std::string scope = "fast";
    std::string fixture_path;
    verify_cmd->add_option("--scope", scope, "fast or all")
        ->check(CLI::IsMember({"fast", "all"}));
    verify_cmd->add_option("--fixture", fixture_path,
                           "reference fixture JSON (default: built-in P4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) {
            emit(gen_output, fm::graph_to_json(gen_src.resolve()));
            return 0;
        }

        if (matrix_cmd->parsed()) {
            const fm::ForestCountMatrix fc =
                fm::forest_matrix_exact(matrix_src.resolve());
            emit(matrix_output, matrix_format == "csv"
                                    ? fm::proximity_to_csv(fm::proximity_matrix(fc))
                                    : fm::matrix_to_json(fc));
            return 0;
        }

        if (closed_cmd->parsed()) {
            std::string content;
            if (closed_src.family == "tcat") {
                const fm::TCaterpillarCounts t =
                    fm::tcaterpillar_counts(closed_src.n);
                if (closed_format == "csv") {
                    content = "f,f33,fnn\n" + fm::to_string(t.f) + "," +
                              fm::to_string(t.f33) + "," + fm::to_string(t.fnn) +
                              "\n";
                } else {
                    nlohmann::json doc;
                    doc["n"] = closed_src.n;
                    doc["f"] = fm::to_string(t.f);
                    doc["f33"] = fm::to_string(t.f33);
                    doc["fnn"] = fm::to_string(t.fnn);
                    content = doc.dump(2) + "\n";
                }
            } else {
                if (closed_src.n <= 0) {
                    throw fm::ValidationError("--family " + closed_src.family +
                                              " requires --n >= 1");
                }
                const fm::ForestCountMatrix fc =
                    closed_src.family == "path"
                        ? fm::path_counts(closed_src.n)
                        : fm::cycle_counts(closed_src.n);
                content = closed_format == "csv"
                              ? fm::proximity_to_csv(fm::proximity_matrix(fc))
                              : fm::matrix_to_json(fc);
            }
            emit(closed_output, content);
            return 0;
        }

        if (classify_cmd->parsed()) {
            const fm::ProximityMatrix pm = fm::proximity_matrix(
                fm::forest_matrix_exact(classify_src.resolve()));
            std::ostringstream out;
            for (const auto& c : fm::classify_vertices(pm)) {
                out << "vertex " << c.vertex << ": " << kind_name(c.kind)
                    << " " << fm::to_string(c.ratio) << "\n";
            }
            emit(classify_output, out.str());
            return 0;
        }

        if (walk_cmd->parsed()) {
            const fm::Graph g = walk_src.resolve();
            const fm::WalkConfig cfg =
                fm::WalkConfig::for_graph(g, walks, walk_seed);
            const fm::WalkEstimate est = fm::simulate_walks(g, cfg);
            const fm::ProximityMatrix exact =
                fm::proximity_matrix(fm::forest_matrix_exact(g));
            emit(walk_output,
                 fm::walk_report_to_json(est, walk_seed,
                                         max_abs_error(est.estimates, exact)));
            return 0;
        }

        if (diss_cmd->parsed()) {
            const fm::Graph g = diss_src.resolve();
            const fm::DisseminationEstimate est =
                fm::estimate_source_probabilities(g, trials, diss_seed);
            const fm::ProximityMatrix exact =
                fm::proximity_matrix(fm::forest_matrix_exact(g));
            std::vector<std::vector<double>> freq(
                est.n, std::vector<double>(est.n, 0.0));
            for (int i = 0; i < est.n; ++i) {
                for (int j = 0; j < est.n; ++j) {
                    freq[i][j] = static_cast<double>(est.source_counts[i][j]) /
                                 static_cast<double>(est.trials);
                }
            }
            emit(diss_output,
                 fm::dissemination_report_to_json(
                     est, diss_seed, max_abs_error(freq, exact)));
            return 0;
        }

        if (verify_cmd->parsed()) {
            return run_verify(scope, fixture_path);
        }
    } catch (const fm::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const fm::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
