#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <forestmatrix/dissemination.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/random_walk.hpp>

namespace forestmatrix {

// Count matrix as JSON with big integers in decimal-string form:
// {"counts": [["13", ...], ...], "f": "21", "n": 4}.
std::string matrix_to_json(const ForestCountMatrix& fc);
ForestCountMatrix matrix_from_json(const std::string& text);

// Proximity matrix: JSON keeps each entry exact as {"num": "...",
// "den": "..."}; CSV writes one "num/den" cell per entry.
std::string proximity_to_json(const ProximityMatrix& pm);
std::string proximity_to_csv(const ProximityMatrix& pm);

// Simulation reports.  The error fields are computed by the caller against
// the exact matrix so the reports stay self-describing.
std::string walk_report_to_json(const WalkEstimate& est, std::uint64_t seed,
                                double max_abs_error_vs_exact);
std::string dissemination_report_to_json(const DisseminationEstimate& est,
                                         std::uint64_t seed,
                                         double max_abs_error_vs_exact);

// A graph together with the count matrix it is expected to produce; used
// by the verification command as a tamper-evident reference.
struct MatrixFixture {
    Graph graph;
    ForestCountMatrix expected;
};

// Fixture JSON: {"graph": {"n": ..., "edges": [...]}, "f": "...",
// "counts": [[...], ...]}.
MatrixFixture fixture_from_json(const std::string& text);
std::string fixture_to_json(const MatrixFixture& fx);

// Whole-file helpers; failures throw ValidationError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace forestmatrix
