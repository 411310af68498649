#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/cli.hpp"
#include "cremona/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace cremona;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const fs::path& fixture_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cremona-cli-fixtures";
        fs::remove_all(d);
        fs::create_directories(d);
        auto write = [&d](const char* name, const char* text) {
            std::ofstream f(d / name);
            f << text;
        };
        write("hexagon.json",
              R"({"dimension":2,"vertices":[["1","0"],["0","1"],["-1","0"],["0","-1"],["1","-1"],["-1","1"]]})");
        write("simplex2.json",
              R"({"dimension":2,"vertices":[["0","0"],["1","0"],["0","1"]]})");
        write("negsimplex2.json",
              R"({"dimension":2,"vertices":[["0","0"],["-1","0"],["0","-1"]]})");
        write("std2.json",
              R"({"n":2,"rows":[[[1,0,0],[0,0,0]],[[0,0,0],[0,1,0]],[[0,0,-1],[0,0,-1]]]})");
        write("broken.json", "{\n  \"dimension\": 2,\n");
        return d;
    }();
    return dir;
}

std::string fixture(const char* name) { return (fixture_dir() / name).string(); }

// Scalar leaves of a JSON document in document order, rendered the way the
// CSV writer renders them.
void collect_leaves(const Json& j, std::vector<std::string>& out) {
    if (j.is_object() || j.is_array()) {
        for (const auto& child : j) collect_leaves(child, out);
    } else if (j.is_string()) {
        out.push_back(j.get<std::string>());
    } else {
        out.push_back(j.dump());
    }
}

std::vector<std::string> csv_values(const std::string& text) {
    std::vector<std::string> values;
    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (header) {
            header = false;
            continue;
        }
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        values.push_back(line.substr(comma + 1));
    }
    return values;
}

}  // namespace

TEST_CASE("multidegrees all-paths payload is exact") {
    const RunResult r = run({"multidegrees", "--n", "4", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "{\n"
          "  \"n\": 4,\n"
          "  \"degrees\": [\n"
          "    1,\n"
          "    4,\n"
          "    6,\n"
          "    4,\n"
          "    1\n"
          "  ],\n"
          "  \"paths_agree\": true\n"
          "}\n");
}

TEST_CASE("multidegrees single-method payloads") {
    for (const char* method : {"formula", "mixed-volume", "extraction"}) {
        const RunResult r = run({"multidegrees", "--n", "3", "--method", method});
        REQUIRE(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("n") == 3);
        CHECK(j.at("method") == method);
        CHECK(j.at("degrees") == Json::array({1, 3, 3, 1}));
    }
}

TEST_CASE("segre payloads") {
    const RunResult r = run({"segre", "--n", "3"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("n") == 3);
    CHECK(j.at("segre") == Json::array({-28, 6}));
    CHECK_FALSE(j.contains("hypergeometric_agrees"));

    const RunResult h = run({"segre", "--n", "3", "--check-hypergeometric"});
    REQUIRE(h.code == 0);
    j = Json::parse(h.out);
    CHECK(j.at("hypergeometric_agrees") == true);
}

TEST_CASE("integers beyond 64 bits serialize as strings") {
    const RunResult r = run({"segre", "--n", "20", "--check-hypergeometric"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    const Json& s = j.at("segre");
    REQUIRE(s.size() == 19);
    CHECK(s.at(0).is_string());
    CHECK(s.at(0) == "26952807334867876989567999");
    CHECK(s.at(18).is_number_integer());
    CHECK(s.at(18) == 210);
    CHECK(j.at("hypergeometric_agrees") == true);
}

TEST_CASE("convert in both directions") {
    RunResult r = run({"convert", "--degrees", "1,3,3,1", "--deg", "3"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"segre", {-28, 6}}});

    r = run({"convert", "--degrees", "1,3,2,1", "--deg", "3"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"segre", {-37, 7}}});

    r = run({"convert", "--segre", "-37,7", "--n", "3", "--deg", "3"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"degrees", {1, 3, 2, 1}}});
}

TEST_CASE("convert flag validation") {
    CHECK(run({"convert", "--degrees", "1,2,1", "--segre", "3", "--deg", "2"}).code == 2);
    CHECK(run({"convert", "--deg", "3"}).code == 2);
    CHECK(run({"convert", "--segre", "3", "--deg", "2"}).code == 2);

    const RunResult mismatch =
        run({"convert", "--degrees", "1,3,2,1", "--deg", "3", "--n", "5"});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("expected n+1 entries") != std::string::npos);

    const RunResult garbage = run({"convert", "--degrees", "1,x,2,1", "--deg", "3"});
    CHECK(garbage.code == 2);
    CHECK(garbage.err.find("not an integer") != std::string::npos);
}

TEST_CASE("volume and mixed-volume plain output") {
    RunResult r = run({"volume", "--polytope", fixture("hexagon.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run({"volume", "--polytope", fixture("hexagon.json"), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"volume", "3"}});

    r = run({"mixed-volume", "--polytopes",
             fixture("simplex2.json") + "," + fixture("negsimplex2.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("minors payload") {
    const RunResult r = run({"minors", "--matrix", fixture("std2.json")});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("n") == 2);
    CHECK(j.at("minors") == Json::array({"X1*X2", "-X0*X2", "X0*X1"}));
}

TEST_CASE("fan actions") {
    RunResult r = run({"fan", "--n", "2", "--action", "count"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"n", 2}, {"cells", 6}});

    r = run({"fan", "--n", "2", "--action", "list"});
    REQUIRE(r.code == 0);
    const Json list = Json::parse(r.out);
    REQUIRE(list.at("cells").size() == 6);
    CHECK(list.at("cells").at(0).at("pair") == Json::array({0, 1}));
    const Json& ineqs = list.at("cells").at(0).at("inequalities");
    CHECK(ineqs.size() == 4);
    for (const auto& ineq : ineqs) {
        CHECK(ineq.at("normal").size() == 2);
        CHECK(ineq.at("offset") == "0");
    }

    r = run({"fan", "--n", "2", "--action", "cover-check"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) ==
          Json{{"n", 2}, {"cell_volume_sum", "4"}, {"box_volume", "4"}, {"covers", true}});
}

TEST_CASE("report payload fields") {
    const RunResult r = run({"report", "--n", "3"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("n") == 3);
    CHECK(j.at("degrees").at("formula") == Json::array({1, 3, 3, 1}));
    CHECK(j.at("degrees").at("agree") == true);
    CHECK(j.at("segre").at("formula") == Json::array({-28, 6}));
    CHECK(j.at("segre").at("agree") == true);
    CHECK(j.at("base_components").at("count") == 6);
    CHECK(j.at("base_components").at("matches_segre") == true);
    CHECK(j.at("chow").at("applicable") == true);
    CHECK(j.at("chow").at("ranks") == Json::array({Json::array({0, 1}), Json::array({1, 6})}));

    const RunResult two = run({"report", "--n", "2"});
    REQUIRE(two.code == 0);
    const Json j2 = Json::parse(two.out);
    CHECK(j2.at("chow").at("applicable") == false);
    CHECK(j2.at("chow").at("ranks").empty());
}

TEST_CASE("report golden files") {
    const fs::path golden_dir = fs::path(CREMONA_SOURCE_DIR) / "tests" / "golden";
    fs::create_directories(golden_dir);
    const char* update = std::getenv("CREMONA_UPDATE_GOLDEN");
    for (int n = 2; n <= 5; ++n) {
        const RunResult r = run({"report", "--n", std::to_string(n)});
        REQUIRE(r.code == 0);
        const fs::path p = golden_dir / ("report_n" + std::to_string(n) + ".json");
        if (update && std::string(update) == "1") {
            std::ofstream f(p, std::ios::binary);
            f << r.out;
        }
        REQUIRE(fs::exists(p));
        std::ifstream f(p, std::ios::binary);
        std::stringstream contents;
        contents << f.rdbuf();
        CHECK(r.out == contents.str());
    }
}

TEST_CASE("json output is byte-stable across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"report", "--n", "3"},
          std::vector<std::string>{"fan", "--n", "3", "--action", "list"},
          std::vector<std::string>{"verify", "--max-n", "2"}}) {
        const RunResult first = run(args);
        const RunResult second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("csv carries the same values as json") {
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"report", "--n", "2"},
          std::vector<std::string>{"segre", "--n", "6"},
          std::vector<std::string>{"fan", "--n", "2", "--action", "cover-check"}}) {
        const RunResult json_run = run(base);
        REQUIRE(json_run.code == 0);
        auto csv_args = base;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        const RunResult csv_run = run(csv_args);
        REQUIRE(csv_run.code == 0);
        std::vector<std::string> leaves;
        collect_leaves(Json::parse(json_run.out), leaves);
        CHECK(csv_values(csv_run.out) == leaves);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"multidegrees"}).code == 2);
    CHECK(run({"multidegrees", "--n", "1"}).code == 2);
    CHECK(run({"segre", "--n", "3", "--format", "yaml"}).code == 2);
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("file errors exit 2 with path context") {
    const RunResult missing = run({"volume", "--polytope", fixture("missing.json")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("missing.json") != std::string::npos);
    CHECK(missing.err.find("cannot open file") != std::string::npos);

    const RunResult malformed = run({"volume", "--polytope", fixture("broken.json")});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("broken.json:3") != std::string::npos);
}

TEST_CASE("guard violations exit 2 and name the guard") {
    const RunResult r = run({"fan", "--n", "5", "--action", "count"});
    CHECK(r.code == 2);
    CHECK(r.err.find("refinement guard") != std::string::npos);
}

TEST_CASE("verify passes at small ranges and fails under fault injection") {
    const RunResult ok = run({"verify", "--max-n", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("11 checks, 11 passed, 0 failed") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const RunResult json_report = run({"verify", "--max-n", "2", "--format", "json"});
    CHECK(json_report.code == 0);
    const Json j = Json::parse(json_report.out);
    CHECK(j.at("max_n") == 2);
    CHECK(j.at("all_passed") == true);
    REQUIRE(j.at("checks").size() == 11);
    for (const auto& check : j.at("checks")) {
        CHECK(check.at("passed") == true);
        CHECK_FALSE(check.contains("counterexample"));
    }

    const RunResult bad = run({"verify", "--max-n", "2", "--inject-volume-fault"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL volume-path-agreement") != std::string::npos);
    CHECK(bad.out.find("a=1 b=1 n=2") != std::string::npos);
    CHECK(bad.out.find("10 passed, 1 failed") != std::string::npos);

    CHECK(run({"verify", "--max-n", "1"}).code == 2);
}
