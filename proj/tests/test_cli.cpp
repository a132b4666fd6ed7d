#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "singwords/cli.hpp"

using namespace singwords;
using nlohmann::json;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    RunResult r = run(std::move(args));
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("schema_version") == 1);
    return j;
}

} // namespace

TEST_CASE("continuant command") {
    RunResult r = run({"continuant", "--kind", "semi", "--digits", "4,5,6,4,6,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "6827\n");
    json j = run_json({"continuant", "--kind", "semi", "--digits", "4,5,6,4,6,3"});
    CHECK(j.at("value") == "6827");
    json t = run_json({"continuant", "--digits", "1,1,1,1,1", "--tridiagonal"});
    CHECK(t.at("value") == "8");
    CHECK(t.at("tridiagonal").at("permanent") == "8");
}

TEST_CASE("classify command") {
    json j = run_json({"classify", "--alphabet", "a<b<c<d", "--word", "bcdbda"});
    CHECK(j.at("verdict") == "singular");
    CHECK_FALSE(j.contains("witness"));

    RunResult plain = run({"classify", "--alphabet", "ab", "--word", "aabb"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "reversible u=a v=ab w=b\n");
    json jr = run_json({"classify", "--alphabet", "ab", "--word", "aabb", "--fast"});
    CHECK(jr.at("verdict") == "reversible");
    CHECK(jr.at("witness").at("v") == "ab");
}

TEST_CASE("construct command") {
    RunResult r = run({"construct", "--parikh", "a=3,b=5,c=7"});
    CHECK(r.code == 0);
    CHECK(r.out == "acbcbcbcacbcbca\n");
    json j = run_json({"construct", "--parikh", "a=7,b=14"});
    CHECK(j.at("word") == "abbabbbabbabbbabbabba");
    CHECK(j.at("parikh").at("a") == 7);
}

TEST_CASE("christoffel command") {
    RunResult r = run({"christoffel", "--p", "2", "--q", "5"});
    CHECK(r.out == "abbabbb\n");
    json j = run_json({"christoffel", "--p", "2", "--q", "5", "--power", "3"});
    CHECK(j.at("word") == "abbabbbabbabbbabbabbb");
}

TEST_CASE("search command matches its plain and json outputs") {
    json j = run_json({"search", "--multiset", "3,4,4,5,6,6", "--objective", "semi-max"});
    CHECK(j.at("value") == "6827");
    CHECK(j.at("unique") == true);
    CHECK(j.at("arrangements") == json::array({{3, 6, 4, 6, 5, 4}}));

    RunResult plain = run({"search", "--multiset", "3,4,4,5,6,6", "--objective", "semi-max"});
    CHECK(plain.out == "value 6827\narrangement 3,6,4,6,5,4\nunique yes\n");

    json tie = run_json({"search", "--multiset", "3,4,4,7,8,8", "--objective", "semi-max",
                         "--threads", "2"});
    CHECK(tie.at("unique") == false);
}

TEST_CASE("verify command") {
    json j = run_json({"verify", "--max-total", "6", "--assignment", "2,3,4"});
    CHECK(j.at("violations") == json::array());
    CHECK(j.at("vectors_checked").get<long long>() > 0);
}

TEST_CASE("markoff command") {
    RunResult holds = run({"markoff", "--left", "ab", "--center", "", "--right", "ab"});
    CHECK(holds.out == "holds\n");
    json j = run_json({"markoff", "--left", "ab", "--center", "aabb", "--right", "ab"});
    CHECK(j.at("verdict") == "violation");
    CHECK(j.at("witness").contains("occurrence"));
}

TEST_CASE("window command in both modes") {
    json biword = run_json({"window", "--left", "ab", "--center", "aabb", "--right", "ab",
                            "--radius", "20"});
    CHECK(biword.at("verdict") == "definite-violation");
    json stream = run_json({"window", "--pre", "acabc", "--period", "acabcabc", "--radius",
                            "30", "--alphabet", "a<b<c"});
    CHECK(stream.at("verdict") == "no-violation-within");
    CHECK(stream.at("radius") == 30);
}

TEST_CASE("iet code and check") {
    RunResult code = run({"iet", "code", "--lengths", "1/3,2/3", "--point", "0", "--window",
                          "0:5"});
    CHECK(code.out == "122122\n");
    json j = run_json({"iet", "check", "--lengths", "5/17,12/17", "--window", "600",
                       "--max-factor-len", "8", "--span", "120"});
    CHECK(j.at("soc") == true);
    CHECK(j.at("symmetric") == true);
    CHECK(j.at("report").at("h5").at("verdict") == "pass");
}

TEST_CASE("iet morphic reproduces the ternary example prefix") {
    RunResult r = run({"iet", "morphic", "--rule", "0=1213", "--rule", "1=12213", "--prefix",
                       "0", "--seed-fibonacci", "40", "--length", "20"});
    CHECK(r.out == "12131213122131213121\n");
}

TEST_CASE("exit codes: usage errors versus domain errors") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"classify", "--word", "ab"}).code == 2);            // missing --alphabet
    CHECK(run({"continuant", "--digits", "3,1,3", "--kind", "semi"}).code == 1);
    CHECK(run({"christoffel", "--p", "2", "--q", "4"}).code == 1); // gcd != 1
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("empty words and centers are accepted") {
    json j = run_json({"classify", "--alphabet", "ab", "--word", ""});
    CHECK(j.at("verdict") == "singular");
    RunResult r = run({"markoff", "--left", "ab", "--right", "ba"});
    CHECK(r.code == 0);
}

TEST_CASE("plain and json outputs carry the same content") {
    RunResult plain = run({"construct", "--parikh", "a=3,b=7,c=5"});
    json j = run_json({"construct", "--parikh", "a=3,b=7,c=5"});
    CHECK(plain.out == j.at("word").get<std::string>() + "\n");
    RunResult chr = run({"christoffel", "--p", "3", "--q", "7"});
    json jc = run_json({"christoffel", "--p", "3", "--q", "7"});
    CHECK(chr.out == jc.at("word").get<std::string>() + "\n");
    RunResult cont = run({"continuant", "--digits", "2,3,4,5"});
    json jn = run_json({"continuant", "--digits", "2,3,4,5"});
    CHECK(cont.out == jn.at("value").get<std::string>() + "\n");
}

TEST_CASE("config file supplies defaults") {
    std::string path = "singwords_cli_test.conf";
    {
        std::ofstream conf(path);
        conf << "[search]\n";
        conf << "objective=semi-max\n";
        conf << "cap=8\n";
    }
    RunResult r = run({"--config", path, "search", "--multiset", "3,4,4,5,6,6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value 6827") == 0);
    RunResult capped = run({"--config", path, "search", "--multiset", "2,2,2,2,2,3,3,3,3"});
    CHECK(capped.code == 1); // cap=8 rejects a size-9 multiset
    std::remove(path.c_str());
}

TEST_CASE("identical invocations produce identical bytes") {
    RunResult a = run({"search", "--multiset", "2,2,3,3,4", "--objective", "semi-max"});
    RunResult b = run({"search", "--multiset", "2,2,3,3,4", "--objective", "semi-max"});
    RunResult c =
        run({"search", "--multiset", "2,2,3,3,4", "--objective", "semi-max", "--threads", "3"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_SUITE_END();
