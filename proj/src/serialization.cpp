#include <forestmatrix/serialization.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <forestmatrix/errors.hpp>

#include "json.hpp"

namespace forestmatrix {
namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string(what) + " JSON parse error: " +
                              e.what());
    }
}

BigInt bigint_field(const json& value, const std::string& where) {
    if (!value.is_string()) {
        throw ValidationError(where + " must be a decimal string");
    }
    try {
        return BigInt(value.get<std::string>());
    } catch (const std::exception&) {
        throw ValidationError(where + " is not a decimal integer: \"" +
                              value.get<std::string>() + "\"");
    }
}

// Shared layout of matrix_to_json and the fixture: fills "n", "f", and
// "counts" on `doc`.
void put_count_matrix(json& doc, const ForestCountMatrix& fc) {
    doc["n"] = fc.n;
    doc["f"] = to_string(fc.f);
    auto rows = json::array();
    for (int i = 0; i < fc.n; ++i) {
        auto row = json::array();
        for (int j = 0; j < fc.n; ++j) {
            row.push_back(to_string(fc.counts(i, j)));
        }
        rows.push_back(std::move(row));
    }
    doc["counts"] = std::move(rows);
}

ForestCountMatrix take_count_matrix(const json& doc, const char* what) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("f") ||
        !doc.contains("counts")) {
        throw ValidationError(std::string(what) +
                              " JSON must contain \"n\", \"f\", and \"counts\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw ValidationError(std::string(what) + " field \"n\" must be an integer");
    }
    const int n = doc["n"].get<int>();
    if (n < 1) {
        throw ValidationError(std::string(what) + " field \"n\" must be >= 1");
    }

    ForestCountMatrix fc;
    fc.n = n;
    fc.f = bigint_field(doc["f"], std::string(what) + " field \"f\"");
    fc.counts = IntegerMatrix(static_cast<std::size_t>(n));

    const json& rows = doc["counts"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
        throw ValidationError(std::string(what) + " field \"counts\" must be an " +
                              std::to_string(n) + "x" + std::to_string(n) +
                              " array");
    }
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ValidationError(std::string(what) + " counts row " +
                                  std::to_string(i + 1) + " must have " +
                                  std::to_string(n) + " entries");
        }
        for (int j = 0; j < n; ++j) {
            fc.counts(i, j) = bigint_field(
                row[j], std::string(what) + " counts entry (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ")");
        }
    }
    return fc;
}

}  // namespace

std::string matrix_to_json(const ForestCountMatrix& fc) {
    json doc;
    put_count_matrix(doc, fc);
    return doc.dump(2) + "\n";
}

ForestCountMatrix matrix_from_json(const std::string& text) {
    return take_count_matrix(parse_document(text, "matrix"), "matrix");
}

std::string proximity_to_json(const ProximityMatrix& pm) {
    json doc;
    doc["n"] = pm.n;
    auto rows = json::array();
    for (int i = 0; i < pm.n; ++i) {
        auto row = json::array();
        for (int j = 0; j < pm.n; ++j) {
            const Rational& value = pm.entries(i, j);
            row.push_back(json{{"num", numerator(value).str()},
                               {"den", denominator(value).str()}});
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string proximity_to_csv(const ProximityMatrix& pm) {
    std::ostringstream out;
    for (int i = 0; i < pm.n; ++i) {
        for (int j = 0; j < pm.n; ++j) {
            if (j > 0) out << ',';
            out << to_string(pm.entries(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string walk_report_to_json(const WalkEstimate& est, std::uint64_t seed,
                                double max_abs_error_vs_exact) {
    json doc;
    doc["n"] = est.n;
    doc["num_walks"] = est.num_walks_per_start;
    doc["seed"] = seed;
    doc["estimates"] = est.estimates;
    doc["max_abs_error_vs_exact"] = max_abs_error_vs_exact;
    doc["aborted_walks"] = est.aborted_walks;
    return doc.dump(2) + "\n";
}

std::string dissemination_report_to_json(const DisseminationEstimate& est,
                                         std::uint64_t seed,
                                         double max_abs_error_vs_exact) {
    json doc;
    doc["n"] = est.n;
    doc["trials"] = est.trials;
    doc["seed"] = seed;
    auto rows = json::array();
    for (int i = 0; i < est.n; ++i) {
        auto row = json::array();
        for (int j = 0; j < est.n; ++j) {
            row.push_back(static_cast<double>(est.source_counts[i][j]) /
                          static_cast<double>(est.trials));
        }
        rows.push_back(std::move(row));
    }
    doc["source_estimates"] = std::move(rows);
    doc["max_abs_error_vs_exact"] = max_abs_error_vs_exact;
    return doc.dump(2) + "\n";
}

MatrixFixture fixture_from_json(const std::string& text) {
    const json doc = parse_document(text, "fixture");
    if (!doc.is_object() || !doc.contains("graph")) {
        throw ValidationError("fixture JSON must contain a \"graph\" object");
    }
    Graph graph = graph_from_json(doc["graph"].dump());
    ForestCountMatrix expected = take_count_matrix(doc, "fixture");
    if (expected.n != graph.vertex_count()) {
        throw ValidationError("fixture matrix order " +
                              std::to_string(expected.n) +
                              " does not match the graph's " +
                              std::to_string(graph.vertex_count()) +
                              " vertices");
    }
    return MatrixFixture{std::move(graph), std::move(expected)};
}

std::string fixture_to_json(const MatrixFixture& fx) {
    json doc;
    doc["graph"] = json::parse(graph_to_json(fx.graph));
    put_count_matrix(doc, fx.expected);
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw ValidationError("failed writing to " + path.string());
    }
}

}  // namespace forestmatrix
