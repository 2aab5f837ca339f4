#include <doctest.h>

#include <forestmatrix/graph.hpp>
#include <forestmatrix/serialization.hpp>
#include <forestmatrix/verify.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI with the given argument string, capturing exit code, stdout,
// and stderr. The binary path is injected by the build.
CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::filesystem::path err_path =
        std::filesystem::temp_directory_path() /
        ("forestmatrix_cli_stderr_" + std::to_string(++counter) + ".txt");

    const std::string command =
        std::string(FORESTMATRIX_CLI_PATH) + " " + args + " 2>" + err_path.string();
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);

    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);

    const int status = pclose(pipe);
    REQUIRE(status != -1);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    if (std::filesystem::exists(err_path)) {
        result.err = forestmatrix::read_text_file(err_path);
        std::filesystem::remove(err_path);
    }
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("help exits zero and lists the subcommands") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("matrix") != std::string::npos);
    CHECK(r.out.find("disseminate") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("matrix csv: the four-path proximity matrix starts with 13/21") {
    const CliResult r = run_cli("matrix --family path --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 5) == "13/21");
    CHECK(r.out.find("10/21") != std::string::npos);
    CHECK(r.out.find("1/21") != std::string::npos);
}

TEST_CASE("matrix json carries exact totals and counts") {
    const CliResult r = run_cli("matrix --family path --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"f\": \"21\"") != std::string::npos);
    CHECK(r.out.find("\"n\": 4") != std::string::npos);
    CHECK(r.out.find("\"13\"") != std::string::npos);
}

TEST_CASE("output is byte-for-byte deterministic") {
    const CliResult a = run_cli("matrix --family cycle --n 6 --format csv");
    const CliResult b = run_cli("matrix --family cycle --n 6 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const CliResult w1 = run_cli("walk --family path --n 3 --walks 500 --seed 11");
    const CliResult w2 = run_cli("walk --family path --n 3 --walks 500 --seed 11");
    CHECK(w1.exit_code == 0);
    CHECK(w1.out == w2.out);
}

TEST_CASE("gen feeds matrix: file input equals the family pipeline") {
    const std::filesystem::path graph_path = temp_file("forestmatrix_cli_c5.json");
    const CliResult gen =
        run_cli("gen --family cycle --n 5 --output " + graph_path.string());
    CHECK(gen.exit_code == 0);
    CHECK(gen.out.empty());

    const CliResult via_file = run_cli("matrix --family file --input " + graph_path.string());
    const CliResult direct = run_cli("matrix --family cycle --n 5");
    CHECK(via_file.exit_code == 0);
    CHECK(via_file.out == direct.out);
    std::filesystem::remove(graph_path);
}

TEST_CASE("classify: the triangle balances every vertex at exactly 1/2") {
    const CliResult r = run_cli("classify --family cycle --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "vertex 1: boundary 1/2\n"
          "vertex 2: boundary 1/2\n"
          "vertex 3: boundary 1/2\n");
}

TEST_CASE("classify: path endpoints are introverts, inner vertices extroverts") {
    const CliResult r = run_cli("classify --family path --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "vertex 1: introvert 13/21\n"
          "vertex 2: extrovert 10/21\n"
          "vertex 3: extrovert 10/21\n"
          "vertex 4: introvert 13/21\n");
}

TEST_CASE("closed-form tcat csv freezes the known triple") {
    const CliResult r = run_cli("closed-form --family tcat --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "f,f33,fnn\n20,8,12\n");
}

TEST_CASE("closed-form path agrees with the exact matrix command") {
    const CliResult closed = run_cli("closed-form --family path --n 7");
    const CliResult exact = run_cli("matrix --family path --n 7");
    CHECK(closed.exit_code == 0);
    CHECK(closed.out == exact.out);
}

TEST_CASE("walk report: small run with the expected shape") {
    const CliResult r = run_cli("walk --family path --n 2 --walks 400 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"n\": 2") != std::string::npos);
    CHECK(r.out.find("\"num_walks\": 400") != std::string::npos);
    CHECK(r.out.find("\"seed\": 9") != std::string::npos);
    CHECK(r.out.find("max_abs_error_vs_exact") != std::string::npos);
    CHECK(r.out.find("\"aborted_walks\": 0") != std::string::npos);
}

TEST_CASE("dissemination report: small run with the expected shape") {
    const CliResult r = run_cli("disseminate --family path --n 2 --trials 600 --seed 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"trials\": 600") != std::string::npos);
    CHECK(r.out.find("source_estimates") != std::string::npos);
    CHECK(r.out.find("max_abs_error_vs_exact") != std::string::npos);
}

TEST_CASE("graphs over the edge cap exit with the resource code") {
    const std::filesystem::path k7_path = temp_file("forestmatrix_cli_k7.json");
    forestmatrix::write_text_file(k7_path,
                                  forestmatrix::graph_to_json(forestmatrix::make_complete(7)));
    const CliResult r =
        run_cli("disseminate --family file --input " + k7_path.string() + " --trials 10");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("resource limit") != std::string::npos);
    CHECK(r.err.find("cap of 20 edges") != std::string::npos);
    std::filesystem::remove(k7_path);
}

TEST_CASE("bad invocations exit with the validation code") {
    CHECK(run_cli("matrix --family nosuch --n 4").exit_code == 1);
    CHECK(run_cli("matrix --family path").exit_code == 1);        // missing --n
    CHECK(run_cli("walk --family path --n 1 --walks 5").exit_code == 1);
    CHECK(run_cli("nosuchcommand").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);  // a subcommand is required
    CHECK(run_cli("matrix --family file").exit_code == 1);        // missing --input
    CHECK(run_cli("gen --family path --n 1").exit_code == 1);     // path needs n >= 2
}

TEST_CASE("verify with a tampered fixture fails closed and names the entry") {
    forestmatrix::MatrixFixture fx = forestmatrix::default_fixture();
    fx.expected.counts(0, 0) += 1;
    const std::filesystem::path fx_path = temp_file("forestmatrix_cli_tampered.json");
    forestmatrix::write_text_file(fx_path, forestmatrix::fixture_to_json(fx));

    const CliResult r = run_cli("verify --scope fast --fixture " + fx_path.string());
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("(1,1)") != std::string::npos);
    CHECK(r.out.find("verification: FAIL") != std::string::npos);
    std::filesystem::remove(fx_path);
}

TEST_CASE("matrix --output writes the file and keeps stdout quiet") {
    const std::filesystem::path out_path = temp_file("forestmatrix_cli_matrix.json");
    const CliResult r =
        run_cli("matrix --family path --n 4 --output " + out_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const std::string content = forestmatrix::read_text_file(out_path);
    CHECK(content.find("\"f\": \"21\"") != std::string::npos);
    std::filesystem::remove(out_path);
}
