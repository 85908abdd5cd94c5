#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" ECHCOMB_PATH "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void round_trips(const std::string& out) {
    nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.dump(2) + "\n" == out);
}

}  // namespace

TEST_CASE("stheta example") {
    Run r = run("stheta --theta '(0+1*sqrt(2))/1-1' --max 12 --json");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "stheta");
    CHECK(j.at("result").at("members") == nlohmann::json::array({1, 2, 7, 12}));
    round_trips(r.out);
    Run t = run("stheta --theta 'sqrt(2)-1' --max 12");
    CHECK(t.status == 0);
    CHECK(t.out.find("1, 2, 7, 12") != std::string::npos);
}

TEST_CASE("verify cases for one fixture") {
    Run r = run("verify cases --fixture restA1");
    CHECK(r.status == 0);
    CHECK(r.out.find("(1,1,2), (2,2,3)") != std::string::npos);
    Run j = run("verify cases --fixture restA1 --json");
    CHECK(j.status == 0);
    round_trips(j.out);
}

TEST_CASE("j0-types example") {
    Run r = run("j0-types --j0 1 --json");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    size_t ok = 0, bad = 0;
    for (const auto& t : j.at("result").at("types")) (t.at("flag") == "realizable" ? ok : bad)++;
    CHECK(ok == 3);
    CHECK(bad == 1);
}

TEST_CASE("usage and runtime errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("nosuch").status == 2);
    CHECK(run("stheta --theta 1/3 --max 5").status == 2);
    CHECK(run("stheta --theta 'sqrt(2)-1' --max 5 --bogus").status == 2);
    CHECK(run("j0-types --j0 -2").status == 2);
    CHECK(run("verify cases --fixture nope").status == 2);
}

TEST_CASE("environment selects the output mode") {
    Run r = run("j0-types --j0 0", "ECHCOMB_OUTPUT=json");
    CHECK(r.status == 0);
    round_trips(r.out);
    Run t = run("j0-types --j0 0 --output table", "ECHCOMB_OUTPUT=json");
    CHECK(t.status == 0);
    CHECK_FALSE(nlohmann::json::accept(t.out));
    CHECK(run("j0-types --j0 0", "ECHCOMB_OUTPUT=xml").status == 2);
}

TEST_CASE("JSON round trip across commands") {
    for (const char* a : {"partition --theta 'sqrt(2)-1' --m 10 --dir in --json", "cz --kind elliptic --theta 'sqrt(2)-1' --k 3 --json",
                          "ellipsoid caps --a 1 --b 'sqrt(2)' --k 10 --json", "ellipsoid volume --a 1 --b 'sqrt(2)' --k 1000 --json",
                          "transitions pairs --json"}) {
        Run r = run(a);
        CHECK_MESSAGE(r.status == 0, a);
        round_trips(r.out);
    }
}

TEST_CASE("verify all is deterministic across job counts") {
    Run one = run("verify all --json --jobs 1");
    Run four = run("verify all --json --jobs 4");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    round_trips(one.out);
}
