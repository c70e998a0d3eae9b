#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tsibc/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(TSIBC_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string thermo = std::string(TSIBC_DATA_DIR) + "/thermoregulation.txt";

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("tsibc_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("decide reports a fork witness as json") {
    Run r = run("decide " + thermo + " --do K@-1 --do L@-1 --effect O@0 --consistency");
    CHECK(r.code == 3);
    auto j = tsibc::Json::parse(r.out);
    CHECK(j["identifiable"] == false);
    CHECK(j["witness"]["kind"] == "fork");
}

TEST_CASE("blocking the instantaneous parent makes it identifiable") {
    Run r = run("decide " + thermo + " --do K@-1 --do L@-1 --do L@0 --effect O@0 --consistency");
    CHECK(r.code == 0);
    CHECK(tsibc::Json::parse(r.out)["identifiable"] == true);
    Run f = run("adjust " + thermo + " --do K@-1 --do L@-1 --do L@0 --effect O@0 --consistency --output text");
    CHECK(f.code == 0);
    CHECK(f.out.find("P(o_0 | k_-1, l_-1, l_0, z)") != std::string::npos);
}

TEST_CASE("adjust refuses a non-identifiable query") {
    CHECK(run("adjust " + thermo + " --do K@-1 --do L@-1 --effect O@0").code == 3);
}

TEST_CASE("input errors exit 1") {
    fs::path dir = scratch("bad");
    std::ofstream(dir / "bad.txt") << "A -> B\nA ->\n";
    Run r = run("decide " + (dir / "bad.txt").string() + " --do A@-1 --effect B@0");
    CHECK(r.code == 1);
    auto j = tsibc::Json::parse(r.out);
    CHECK(j.contains("error"));
    CHECK(run("decide " + thermo + " --do Q@-1 --effect O@0").code == 1);
    CHECK(run("decide " + thermo + " --do K@x --effect O@0").code == 1);
    CHECK(run("decide " + thermo + " --do O@0 --effect O@0").code == 1);
    CHECK(run("decide " + (dir / "missing.txt").string() + " --do A@-1 --effect B@0").code == 1);
    CHECK(run("frobnicate").code == 1);
    fs::remove_all(dir);
}

TEST_CASE("query files and stdin") {
    fs::path dir = scratch("query");
    std::ofstream(dir / "q.json") << R"({"interventions": ["K@-1", {"series": "L", "time": -1}], "effects": ["O@0"]})";
    Run r = run("decide " + thermo + " --query " + (dir / "q.json").string());
    CHECK(r.code == 3);
    Run s = run("decide - --format edgelist --do K@-1 --do L@-1 --effect O@0 < " + thermo);
    CHECK(s.code == 3);
    CHECK(s.out == r.out);
    fs::remove_all(dir);
}

TEST_CASE("oracle check agrees and honours the budget") {
    for (const char* regime : {"", " --consistency"}) {
        Run r = run("oracle-check " + thermo + " --do K@-1 --do L@-1 --effect O@0" + regime);
        CHECK(r.code == 0);
        CHECK(tsibc::Json::parse(r.out)["result"] == "AGREE");
    }
    Run b = run("oracle-check " + thermo + " --do K@-1 --do L@-1 --effect O@0 --budget 1");
    CHECK(b.code == 1);
}

TEST_CASE("explain dumps thresholds") {
    Run r = run("explain " + thermo + " --do K@-1 --do L@-1 --effect O@0 --show-nc --show-access L@-1");
    CHECK(r.code == 3);  // same code as decide
    auto j = tsibc::Json::parse(r.out);
    CHECK(r.out.find("\"B\"") != std::string::npos);
    CHECK(j.dump().find("inf") != std::string::npos);
}

TEST_CASE("random corpora are reproducible") {
    fs::path a = scratch("rand_a"), b = scratch("rand_b");
    CHECK(run("random --seed 5 --count 4 --out " + a.string()).code == 0);
    CHECK(run("random --seed 5 --count 4 --out " + b.string()).code == 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
        ++files;
    }
    CHECK(files == 8);
    fs::remove_all(a);
    fs::remove_all(b);
}
