#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "z2k/cli.hpp"

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = z2k::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(Z2K_DATA_DIR) + "/" + name; }

struct GoldenCase {
    const char* name;
    std::vector<std::string> args;
    int status;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"e4_terms5", {"e4", "--terms", "5"}, 0},
        {"e4_terms12_json", {"e4", "--terms", "12", "--format", "json"}, 0},
        {"extremal_n8_k1_json", {"extremal", "--n", "8", "--k", "1", "--format", "json"}, 0},
        {"extremal_n24_k1", {"extremal", "--n", "24", "--k", "1"}, 0},
        {"extremal_n96_k4_json", {"extremal", "--n", "96", "--k", "4", "--format", "json"}, 0},
        {"crossover_k1_8_96", {"crossover", "--k", "1", "--from", "8", "--to", "96"}, 0},
        {"crossover_k2_8_200_csv", {"crossover", "--k", "2", "--from", "8", "--to", "200", "--format", "csv"}, 0},
        {"crossover_k3_200_240_json",
         {"crossover", "--k", "3", "--from", "200", "--to", "240", "--format", "json"}, 0},
        {"theorem1_nmax240_k2", {"theorem1", "--nmax", "240", "--k", "2"}, 0},
        {"theorem1_nmax96_k6_json", {"theorem1", "--nmax", "96", "--k", "6", "--format", "json"}, 0},
        {"asymptotics_digits30", {"asymptotics", "--digits", "30"}, 0},
        {"asymptotics_digits20_json", {"asymptotics", "--digits", "20", "--format", "json"}, 0},
        {"ratio_k1", {"ratio", "--k", "1", "--n-list", "8,24,48,96,480"}, 0},
        {"ratio_k2_csv", {"ratio", "--k", "2", "--n-list", "8,16,240", "--format", "csv"}, 0},
        {"ratio_k1_json", {"ratio", "--k", "1", "--n-list", "24,48", "--format", "json"}, 0},
        {"code_verify_octacode", {"code", "verify", "--file", data("octacode.zcode")}, 0},
        {"code_verify_octacode_json", {"code", "verify", "--file", data("octacode.zcode"), "--format", "json"}, 0},
        {"code_verify_identity", {"code", "verify", "--file", data("identity_k2.zcode")}, 1},
        {"code_search_k1", {"code", "search", "--k", "1"}, 0},
        {"code_search_k3_seed7", {"code", "search", "--k", "3", "--seed", "7"}, 0},
        {"code_search_k6_json", {"code", "search", "--k", "6", "--format", "json"}, 0},
    };
    return cases;
}

}  // namespace

TEST_CASE("golden outputs") {
    const bool regenerate = std::getenv("Z2K_UPDATE_GOLDEN") != nullptr;
    for (const auto& gc : golden_cases()) {
        CAPTURE(gc.name);
        const auto got = invoke(gc.args);
        CHECK(got.status == gc.status);
        const std::string path = std::string(Z2K_GOLDEN_DIR) + "/cli/" + gc.name + ".out";
        if (regenerate) {
            std::ofstream(path, std::ios::binary) << got.out;
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
        std::stringstream expect;
        expect << in.rdbuf();
        CHECK(got.out == expect.str());
    }
}

TEST_CASE("identical invocations give identical bytes") {
    for (const auto& gc : golden_cases()) CHECK(invoke(gc.args).out == invoke(gc.args).out);
    const auto one = invoke({"crossover", "--k", "5", "--from", "8", "--to", "320", "--workers", "1"});
    const auto four = invoke({"crossover", "--k", "5", "--from", "8", "--to", "320", "--workers", "4"});
    CHECK(one.out == four.out);
}

TEST_CASE("e4 prints the expansion") {
    const auto r = invoke({"e4", "--terms", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == "1 240 2160 6720 17520\n");
}

TEST_CASE("extremal json keeps big integers as strings") {
    const auto r = invoke({"extremal", "--n", "8", "--k", "1", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 8);
    CHECK(j["k"] == 1);
    CHECK(j["mu"] == 0);
    CHECK(j["nu"] == 1);
    CHECK(j["beta1"] == "224");
    CHECK(j["beta1"].is_string());

    const auto big = nlohmann::json::parse(invoke({"extremal", "--n", "480", "--k", "1", "--format", "json"}).out);
    for (const auto& b : big["b"]) CHECK(b.is_string());
}

TEST_CASE("csv ratio schema") {
    const auto r = invoke({"ratio", "--k", "1", "--n-list", "8", "--format", "csv"});
    CHECK(r.out.rfind("n,ratio,threshold,margin\n", 0) == 0);
}

TEST_CASE("usage errors exit with status 2") {
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"frobnicate"},
        {"e4"},
        {"e4", "--terms", "0"},
        {"e4", "--terms", "many"},
        {"extremal", "--n", "12", "--k", "1"},
        {"extremal", "--n", "8", "--k", "0"},
        {"crossover", "--k", "1", "--from", "96", "--to", "8"},
        {"asymptotics", "--digits", "5"},
        {"ratio", "--k", "1", "--n-list", "8,13"},
        {"code", "search", "--k", "7"},
        {"code", "verify", "--file", "/nonexistent/code.zcode"},
        {"e4", "--terms", "5", "--format", "xml"},
    };
    for (const auto& args : bad) {
        const auto r = invoke(args);
        CAPTURE(args.empty() ? std::string("<none>") : args[0]);
        CHECK(r.status == z2k::cli::kExitUsage);
        CHECK_FALSE(r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);  // single-line diagnostic
    }
}

TEST_CASE("computation errors exit with status 1") {
    const auto r = invoke({"code", "verify", "--file", data("identity_k2.zcode")});
    CHECK(r.status == z2k::cli::kExitFailure);
}
