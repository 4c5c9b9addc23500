#include "bing/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace bing;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json shipped_schema() {
    std::ifstream in(std::string(BING_SOURCE_DIR) + "/data/report.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

void check_schema(const std::string& stdout_text) {
    std::vector<std::string> errors;
    bool ok = cli::validate_report(json::parse(stdout_text), shipped_schema(), errors);
    for (const auto& e : errors)
        MESSAGE(e);
    CHECK(ok);
}

}  // namespace

TEST_CASE("snf subcommand") {
    auto r = run_cli({"snf", "--matrix", "[[4,0],[0,6]]", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("D").at("entries") ==
          json::parse("[[2,0],[0,12]]"));
    CHECK(report.at("result").at("check").at("umv_equals_d") == true);
    check_schema(r.out);
}

TEST_CASE("homology subcommand") {
    auto r = run_cli({"homology", "-p", "<a | a^5>", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("homology").at("h1_torsion") == json::array({5}));
    CHECK(report.at("result").at("homology").at("h2_rank") == 0);
    check_schema(r.out);

    auto text = run_cli({"homology", "-p", "<a | a^5>"});
    CHECK(text.out.find("H1 = Z_5") != std::string::npos);
    CHECK(text.out.find("H2 = 0") != std::string::npos);
}

TEST_CASE("analyze subcommand decides and reports") {
    auto r = run_cli(
        {"analyze", "-p", "<a,b | a^2, b^2, [a,b]>", "--group", "abelian:2,2", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("outcome") == "NotBing_NoFPPUpToHomotopy");
    CHECK(report.at("result").at("certificate").back().at("theorem_ref") == "Lemma 4.2");
    check_schema(r.out);
}

TEST_CASE("analyze exit codes") {
    CHECK(run_cli({"analyze", "-p", "<a | a^5>", "--group", "abelian:5", "--json"})
              .exit_code == 0);
    CHECK(run_cli({"analyze", "-p", "<a,b | a^2, b^2, [a,b]>", "--group", "unknown",
                   "--json"})
              .exit_code == 3);
    CHECK(run_cli({"analyze", "-p", "<a | a^2>", "--group", "abelian:3"}).exit_code == 2);
    CHECK(run_cli({"analyze", "-p", "<a | a^2", "--group", "unknown"}).exit_code == 2);
    CHECK(run_cli({"analyze", "-p", "<a | a^2>", "--group", "catalog:nope"}).exit_code ==
          2);
}

TEST_CASE("classify-abelian subcommand") {
    auto r = run_cli({"classify-abelian", "--factors", "8,8,8", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("homotopy_type_count") == 2);
    CHECK(report.at("result").at("presentations").size() == 2);
    check_schema(r.out);

    CHECK(run_cli({"classify-abelian", "--factors", "7", "--json"}).exit_code == 2);
}

TEST_CASE("simulate-kp subcommand") {
    auto r = run_cli({"simulate-kp", "--m", "2", "--n", "3", "--grid", "64", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("nielsen_number") == 0);
    CHECK(report.at("result").at("class_index_sum") == 0);
    CHECK(report.at("result").at("lefschetz_chain") == 0);
    CHECK(report.at("result").at("fixed_points").size() == 2);
    check_schema(r.out);
}

TEST_CASE("simulate-x subcommand") {
    auto r = run_cli({"simulate-x", "--l", "2", "--m", "3", "--n", "4", "--resolution",
                      "128", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("nielsen_number") == 0);
    CHECK(report.at("result").at("chi_X") == 2);
    CHECK(report.at("result").at("chi_standard_complex") == 2);
    check_schema(r.out);
}

TEST_CASE("catalog subcommand") {
    auto r = run_cli({"catalog", "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("entries").size() >= 10);
    check_schema(r.out);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::vector<std::string>> invocations = {
        {"analyze", "-p", "<a,b | a^2, b^2, [a,b]>", "--group", "abelian:2,2", "--json"},
        {"snf", "--matrix", "[[2,4,4],[-6,6,12],[10,-4,-16]]", "--json"},
        {"simulate-kp", "--m", "2", "--n", "3", "--grid", "64", "--json"},
        {"simulate-x", "--l", "2", "--m", "3", "--n", "4", "--resolution", "128",
         "--json"},
    };
    for (const auto& args : invocations) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"snf"}).exit_code == 2);
    CHECK(run_cli({"snf", "--matrix", "not json", "--json"}).exit_code == 2);
    CHECK(run_cli({"snf", "--matrix", "@/no/such/file.json"}).exit_code == 2);
}

TEST_CASE("file indirection") {
    const std::string path = "/tmp/bing_cli_test_presentation.txt";
    {
        std::ofstream f(path);
        f << "<a,b | a^2, b^3>\n";
    }
    auto r = run_cli({"homology", "-p", "@" + path, "--json"});
    CHECK(r.exit_code == 0);
    auto report = json::parse(r.out);
    CHECK(report.at("result").at("homology").at("h1_torsion") == json::array({6}));
}

TEST_CASE("the group flag accepts the three declared forms") {
    CHECK(cli::group_spec_from_string("unknown").kind == GroupSpec::Kind::Unknown);
    auto ab = cli::group_spec_from_string("abelian:4,6");
    CHECK(ab.kind == GroupSpec::Kind::Abelian);
    CHECK(ab.abelian.factors == std::vector<std::int64_t>{2, 12});
    CHECK(cli::group_spec_from_string("catalog:A4").catalog_name == "A4");
    CHECK_THROWS_AS(cli::group_spec_from_string("dihedral"), std::invalid_argument);
}
