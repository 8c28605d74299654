#include "bwf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bwf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("closure member counts") {
    CHECK(contains(run({"closure", "w"}).out, "members: 1"));
    CHECK(contains(run({"closure", "2+3w"}).out, "members: 2"));
    const auto r = run({"closure", "[2)", "w"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "members: 3"));
    CHECK(contains(r.out, "F2 = [2)"));
    CHECK(contains(run({"--family", "[2),w", "closure"}).out, "members: 3"));
}

TEST_CASE("classify") {
    CHECK(contains(run({"classify", "--family", "{0}"}).out, "iso_type: MatrixUnits"));
    CHECK(contains(run({"classify", "--family", "2+3w"}).out, "iso_type: Progression(3)"));
    const auto r = run({"classify", "--family", "[2),w"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "identity: (0,0,w)"));
    CHECK(contains(r.out, "simple: true"));
    CHECK(contains(r.out, "bisimple: false"));
}

TEST_CASE("json output") {
    const auto r = run({"classify", "--family", "{0}", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["iso_type"] == "MatrixUnits");
    CHECK(j["simple"].is_null());
    CHECK(j["zero_simple"] == true);
    CHECK(j["identity"].is_null());

    const auto c = nlohmann::json::parse(run({"closure", "2+3w", "--format", "json"}).out);
    CHECK(c["count"] == 2);
    CHECK(c["has_empty"] == true);
}

TEST_CASE("element operations") {
    CHECK(run({"mul", "(1,3,w)", "(2,2,w)", "--family", "w"}).out == "(1,3,w)\n");
    CHECK(run({"mul", "(0,1,{0})", "(0,2,{0})", "--family", "{0}"}).out == "0\n");
    CHECK(run({"inv", "(2,5,w)", "--family", "w"}).out == "(5,2,w)\n");
    CHECK(run({"leq", "(3,4,[2))", "(1,2,[1))", "--family", "[2),w"}).out == "true\n");
    CHECK(run({"green", "J", "(0,0,w)", "(0,0,[2))", "--family", "[2),w"}).out == "true\n");
    CHECK(run({"green", "D", "(0,0,w)", "(0,0,[2))", "--family", "[2),w"}).out == "false\n");
    CHECK(run({"sigma", "(3,1,w)", "--family", "w"}).out == "2\n");
    CHECK(run({"sigma", "(3,1,w)", "(4,2,w)", "--family", "w"}).out == "true\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--family", "{0"}).code == 2);
    CHECK(run({"green", "X", "(0,0,w)", "(0,0,w)", "--family", "w"}).code == 2);
    CHECK(run({"classify", "--family", "{0}", "--no-close"}).code == 3);
    CHECK(run({"mul", "(0,0,[1))", "(0,0,w)", "--family", "w"}).code == 3);
    CHECK(run({"sigma", "0", "--family", "{0}"}).code == 3);
    CHECK(run({"--help"}).code == 0);
    const auto bad = run({"classify", "--family", "{0"});
    CHECK(contains(bad.err, "position"));
}

TEST_CASE("eggbox with a DOT file") {
    const std::string path = "test_cli_eggbox.dot";
    const auto r = run({"eggbox", "--family", "{0}", "--max", "1", "--dot", path});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "D-class F1 = {0} (2 x 2)"));
    std::ifstream file(path);
    const std::string dot((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(contains(dot, "digraph eggbox"));
    CHECK(contains(dot, "cluster_zero"));
    std::remove(path.c_str());

    CHECK(contains(run({"eggbox", "--family", "w", "--max", "0", "--dot", "-"}).out, "digraph"));
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--family", "[2),w", "--max", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS associativity"));
    CHECK(contains(r.out, "PASS star_lemma"));
    CHECK(contains(r.out, "all checks passed"));

    const auto j = nlohmann::json::parse(run({"verify", "--family", "{0}", "--max", "1", "--format", "json"}).out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 11);
}
