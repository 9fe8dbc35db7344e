#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "zieschang/gens.hpp"

using namespace zieschang;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kData = ZIESCHANG_TEST_DATA;

}  // namespace

TEST_CASE("is-zieschang") {
    const auto r = run({"is-zieschang", "--sig", "1,0", "--word", "x1' y1' x1 y1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "true\n");
    const auto f = run({"is-zieschang", "--sig", "1,1", "--word", "x1 y1 t1 y1' x1'"});
    CHECK(f.code == cli::kFalse);
    CHECK(f.out == "false\n");
    const auto j = run({"is-zieschang", "--sig", "1,0", "--word", "x1 y1", "--json"});
    CHECK(j.code == cli::kFalse);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["candidate"] == false);
    CHECK(doc["zieschang"] == false);
}

TEST_CASE("eval and apply") {
    const auto r = run({"eval", "--sig", "3,0", "--genword", "b1 a1", "--apply", "x1' y1' x1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "x1'\n");
    const auto m = run({"eval", "--sig", "1,0", "--genword", "a1"});
    CHECK(m.out == "sig g=1 p=0\nx1 -> y1' x1\n");
}

TEST_CASE("factorize from a file") {
    const auto r = run({"factorize", "--sig", "0,2", "--aut", kData + "/sigma2.txt"});
    REQUIRE(r.code == cli::kOk);
    std::string word = r.out;
    word.pop_back();
    const auto s2 = generator(parse_gen_name("s2"), {0, 2});
    CHECK(eval_gen_word(parse_gen_word(word), {0, 2}) == s2);

    const auto j = run({"factorize", "--sig", "3,0", "--genword", "a3", "--adlh", "--json"});
    REQUIRE(j.code == cli::kOk);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["variant"] == "ADLH");
    CHECK(eval_gen_word(parse_gen_word(doc["genword"].get<std::string>()), {3, 0}) ==
          generator(parse_gen_name("a3"), {3, 0}));
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--sig", "1,0", "--map", "x1 -> y1' x1"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("in_A: true") != std::string::npos);
    const auto bad = run({"verify", "--sig", "1,0", "--map", "x1 -> x1 y1", "--json"});
    CHECK(bad.code == cli::kFalse);
    CHECK(nlohmann::json::parse(bad.out)["fixes_relator"] == false);
}

TEST_CASE("certify") {
    const auto ok = run({"certify", "--sig", "1,0", "--map", "y1 -> x1 y1"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("y1 -> x1' y1") != std::string::npos);
    const auto bad = run({"certify", "--sig", "1,0", "--map", "x1 -> x1 y1"});
    CHECK(bad.code == cli::kFalse);
    CHECK(bad.err.find("HypothesisViolated") != std::string::npos);
}

TEST_CASE("canon and nielsen-reduce") {
    const auto c = run({"canon", "--sig", "1,1", "--word", "t1 x1 y1 x1' y1'", "--json"});
    REQUIRE(c.code == cli::kOk);
    const auto doc = nlohmann::json::parse(c.out);
    CHECK(doc["steps"].size() == 2);
    CHECK(doc["steps"].back()["after"] == "t1 x1' y1' x1 y1");

    const auto n = run({"nielsen-reduce", "--sig", "1,0", "--genword", "a1 b1"});
    CHECK(n.code == cli::kOk);
    CHECK(n.out.find("(N1)") != std::string::npos);
}

TEST_CASE("whitehead DOT output") {
    const std::string path = "whitehead_test.dot";
    const auto r = run({"whitehead", "--sig", "1,0", "--word", "x1' y1' x1 y1", "--dot", path});
    CHECK(r.code == cli::kOk);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("digraph", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("outer-equal") {
    const auto same = run({"outer-equal", "--sig", "1,0", "--genword", "a1", "--genword2", "a1"});
    CHECK(same.code == cli::kOk);
    const auto diff = run({"outer-equal", "--sig", "1,0", "--genword", "b1", "--map2", "x1 -> x1"});
    CHECK(diff.code == cli::kFalse);
}

TEST_CASE("malformed input") {
    CHECK(run({"is-zieschang", "--sig", "1", "--word", "x1"}).code == cli::kMalformed);
    CHECK(run({"eval", "--sig", "1,0", "--genword", "a2"}).code == cli::kMalformed);
    CHECK(run({"eval", "--sig", "1,0", "--genword", "zz"}).code == cli::kMalformed);
    CHECK(run({"frobnicate"}).code == cli::kMalformed);
    CHECK(run({"factorize", "--sig", "0,2", "--aut", kData + "/missing.txt"}).code == cli::kMalformed);
    CHECK(run({"verify", "--sig", "0,2", "--aut", kData + "/sigma2.txt", "--map", "t1 -> t1"}).code ==
          cli::kMalformed);
    CHECK(run({"verify", "--sig", "1,0", "--aut", kData + "/sigma2.txt"}).code == cli::kMalformed);
    CHECK(run({"factorize", "--sig", "1,0", "--map", "x1 -> x1 y1"}).code == cli::kFalse);
}

TEST_CASE("selftest single criterion is deterministic") {
    const auto a = run({"selftest", "--criterion", "9", "--samples", "2", "--seed", "42", "--json"});
    const auto b = run({"selftest", "--criterion", "9", "--samples", "2", "--seed", "42", "--json"});
    CHECK(a.code == cli::kOk);
    auto da = nlohmann::json::parse(a.out), db = nlohmann::json::parse(b.out);
    CHECK(da["criteria"][0]["detail"] == db["criteria"][0]["detail"]);
    CHECK(da["pass"] == true);
}
