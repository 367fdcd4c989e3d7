#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> body_lines(const std::string& out) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : out) {
        if (c == '\n') {
            if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return lines;
}

}  // namespace

TEST_CASE("series output matches the reference coefficients") {
    RunResult r = run("series --class pp2 --order 10");
    CHECK(r.code == 0);
    std::vector<std::string> want{"0",   "0",   "4",    "6",    "12",  "28",
                                  "72",  "196", "552",  "1590", "4656"};
    CHECK(body_lines(r.out) == want);

    RunResult r3 = run("series --class pp3 --order 5 --format csv");
    CHECK(r3.code == 0);
    std::vector<std::string> want3{"m,coefficient", "0,0", "1,0", "2,6",
                                   "3,10",          "4,24", "5,66"};
    CHECK(body_lines(r3.out) == want3);

    RunResult r1 = run("series --class one-sided --order 5");
    CHECK(body_lines(r1.out) == std::vector<std::string>{"0", "0", "1", "1", "1", "1"});

    RunResult rj = run("series --class bargraph --order 8 --format json");
    CHECK(rj.code == 0);
    nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j["metadata"]["tool"] == "pp");
    CHECK(j["coefficients"].size() == 9);
    CHECK(j["coefficients"][2] == "1");
    CHECK(j["coefficients"][8] == "275");
}

TEST_CASE("series order caps honor PP_MAX_ORDER") {
    CHECK(run("series --class pp-all --order 26").code == 2);
    // the env override must precede the binary, so build this command by hand
    std::string cmd = "PP_MAX_ORDER=26 " + std::string(PP_CLI_PATH) +
                      " series --class pp-all --order 26 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string outp;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) outp.append(buf, n);
    int st = pclose(p);
    CHECK(WEXITSTATUS(st) == 0);
    std::vector<std::string> lines = body_lines(outp);
    REQUIRE(lines.size() == 27);
    CHECK(lines[2] == "8");     // 8 F_2
    CHECK(lines[8] == "6152");  // 8 F_8
}

TEST_CASE("asym constants print with residuals") {
    RunResult r = run("asym --which rho");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.2955977") != std::string::npos);
    RunResult s = run("asym --which sigma --format csv");
    CHECK(s.out.find("0.2441312") != std::string::npos);
    RunResult g = run("asym --which growth --class pp2 --order 120 --format json");
    CHECK(g.code == 0);
    nlohmann::json j = nlohmann::json::parse(g.out);
    double rate = j["rate"].get<double>();
    CHECK(rate == doctest::Approx(1.0 / 0.29559774252208482).epsilon(1e-3));
    CHECK(j["coefficients"] == 121);
}

TEST_CASE("identical commands give byte-identical output") {
    for (const char* cmd :
         {"series --class R --order 12 --format json",
          "sample --class three -m 60 -c 3 --seed 5 --format json",
          "sample --class all -m 40 -c 2 --seed 9 --format svg",
          "asym --which A --format csv"}) {
        RunResult a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    RunResult x = run("sample --class three -m 60 -c 3 --seed 5 --format json");
    RunResult y = run("sample --class three -m 60 -c 3 --seed 6 --format json");
    CHECK(x.out != y.out);
}

TEST_CASE("sample json carries the documented schema") {
    RunResult r = run("sample --class all -m 30 -c 3 --seed 11 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["metadata"]["generator"] == "mt19937_64/splitmix64-v1");
    CHECK(j["metadata"]["seed"] == 11);
    REQUIRE(j["polygons"].size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        const nlohmann::json& p = j["polygons"][i];
        CHECK(p["class"] == "all");
        CHECK(p["half_perimeter"] == 30);
        CHECK(p["endpoint"] == nlohmann::json({1, 0}));
        CHECK(p["seed"] == 11);
        CHECK(p["index"] == i);
        auto cells = p["cells"].get<std::vector<std::vector<int>>>();
        CHECK(std::is_sorted(cells.begin(), cells.end()));
    }
}

TEST_CASE("sample --out writes one file per polygon") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "pp_cli_test_out";
    std::filesystem::remove_all(dir);
    RunResult r = run("sample --class two -m 25 -c 3 --seed 2 --format svg --out " +
                      dir.string());
    CHECK(r.code == 0);
    size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        ++files;
        CHECK(e.path().extension() == ".svg");
        CHECK(std::filesystem::file_size(e.path()) > 100);
    }
    CHECK(files == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("validate cross-checks the backends") {
    RunResult r = run("validate --max-m 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    RunResult v = run("validate --max-m 1");
    CHECK(v.code == 0);
    CHECK(v.out.find("vacuous") != std::string::npos);

    CHECK(run("validate --max-m 12 --classes all").code == 2);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run("sample --class two -m 500 -c 1").code == 2);
    CHECK(run("sample --class all -m 81 -c 1").code == 2);
    CHECK(run("sample --class two -m 10 -c 1 --seed banana").code == 2);
    CHECK(run("series --class nosuch").code != 0);
    CHECK(run("").code != 0);  // a subcommand is required
}
