#include "kronjord/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace kronjord;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string out_file = std::string(KRONJORD_TEST_DIR) + "/cli_out.txt";
    const std::string cmd = std::string(KRONJORD_CLI) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string path(const std::string& name) {
    return std::string(KRONJORD_TEST_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("classify exit codes and JSON") {
    CHECK(run("classify --r 3 --jordan 3,2").code == 0);
    const auto rej = run("classify --r 3 --jordan 1,1 --json");
    CHECK(rej.code == 2);
    const auto j = Json::parse(rej.out);
    CHECK(j["failed_clause"] == "c >= r-1");
    CHECK(j["in_ijt"] == false);
    CHECK(run("classify --r 2 --jordan 0,2").code == 2);
    const auto simple = Json::parse(run("classify --r 3 --jordan 1,0 --json").out);
    CHECK(simple["realizable"] == true);
    CHECK(simple["in_ijt"] == false);
    CHECK(run("classify --r 3 --jordan x").code == 1);
    CHECK(run("classify --r 1 --jordan 1,1").code == 1);
    CHECK(run("classify --jordan 1,1").code == 1);
}

TEST_CASE("realize then verify") {
    CHECK(run("realize --r 3 --jordan 3,2 --seed 7 --out " + path("w.json")).code == 0);
    const auto w = read_json_file(path("w.json"));
    CHECK(w["route"] == "cover");
    CHECK(w["rep"]["dim"] == Json::array({2, 5}));
    const auto v = run("verify " + path("w.json") + " --checks ekp,cjt,indec,restriction --json");
    CHECK(v.code == 0);
    const auto report = Json::parse(v.out);
    CHECK(report["samples"] == 200);
    for (const auto& c : report["checks"]) CHECK(c["verdict"] == true);

    CHECK(run("realize --r 3 --jordan 1,1").code == 2);
    CHECK(run("realize --r 4 --jordan 5,3 --mode eip --out " + path("e.json")).code == 0);
    CHECK(run("verify " + path("e.json") + " --checks eip,cjt,indec,restriction").code == 0);
    CHECK(run("verify " + path("e.json") + " --checks ekp").code == 1);
}

TEST_CASE("verify plain representations") {
    Json bad = {{"r", 3}, {"dim", {1, 1}}, {"field", {{"type", "Q"}}}, {"mats", {{{"1"}}, {{"0"}}, {{"0"}}}}};
    write_json_file(path("bad.json"), bad);
    const auto v = run("verify " + path("bad.json") + " --checks ekp,cjt --samples 20 --json");
    CHECK(v.code == 1);
    const auto report = Json::parse(v.out);
    CHECK(report["checks"][0]["verdict"] == false);
    CHECK(report["samples"] == 20);

    Json gf = {{"r", 2}, {"dim", {1, 2}}, {"field", {{"type", "GF"}, {"p", 5}}}, {"mats", {{{1}, {0}}, {{0}, {1}}}}};
    write_json_file(path("gf.json"), gf);
    CHECK(run("verify " + path("gf.json") + " --checks ekp,cjt,indec").code == 0);
    CHECK(run("verify " + path("missing.json")).code == 1);
    CHECK(run("verify " + path("gf.json") + " --checks bogus").code == 1);
}

TEST_CASE("coxeter, roots and pushdown") {
    const auto c = run("coxeter --r 3 --dim 2,5 --power 1 --json");
    CHECK(c.code == 0);
    CHECK(Json::parse(c.out)["result"] == Json::array({1, 1}));
    CHECK(Json::parse(run("coxeter --r 3 --dim 1,2 --power -1 --json").out)["result"] == Json::array({5, 13}));

    const auto roots = Json::parse(run("roots --r 3 --max 5 --json").out);
    bool seen = false;
    for (const auto& row : roots["roots"]) {
        if (row["dim"] == Json::array({2, 5})) {
            seen = true;
            CHECK(row["kind"] == "imaginary");
            CHECK(row["in_ijt"] == true);
        }
    }
    CHECK(seen);

    const auto w = read_json_file(path("w.json"));
    write_json_file(path("tree.json"), w["cover"]);
    CHECK(run("pushdown " + path("tree.json") + " --out " + path("down.json")).code == 0);
    CHECK(read_json_file(path("down.json")) == w["rep"]);
}
