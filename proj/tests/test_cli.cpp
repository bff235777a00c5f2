#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KNESER_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.code = WEXITSTATUS(status);
    return res;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << body;
}

}  // namespace

TEST_CASE("gen output is accepted unchanged by consuming subcommands") {
    RunResult gen = run("gen --family k-subsets --n 5 --k 2");
    CHECK(gen.code == 0);
    write_file("cli_sys.json", gen.out);
    RunResult defect = run("defect --input cli_sys.json --r 2 --s 1");
    CHECK(defect.code == 0);
    CHECK(defect.out.find("\"exact\": 3") != std::string::npos);
    RunResult chi = run("chi --input cli_sys.json --r 2 --s 1");
    CHECK(chi.code == 0);
    CHECK(chi.out.find("\"chi\": 3") != std::string::npos);
    write_file("cli_allone.json", "{\"colors\": [1,1,1,1,1,1,1,1,1,1]}");
    RunResult val = run("color --validate cli_allone.json --input cli_sys.json --r 2 --s 1");
    CHECK(val.code == 1);
    RunResult ref = run("refute dolnikov --input cli_sys.json --coloring cli_allone.json");
    CHECK(ref.code == 1);
    RunResult mn = run("refute main --input cli_sys.json --coloring cli_allone.json --p 2 --s 1");
    CHECK(mn.code == 1);
}

TEST_CASE("identical invocations produce byte-identical JSON") {
    RunResult a = run("bounds --n 5 --k 2 --r 4 --s 2");
    RunResult b = run("bounds --n 5 --k 2 --r 4 --s 2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"lower\": 2") != std::string::npos);
    CHECK(a.out.find("\"upper\": 3") != std::string::npos);
    CHECK(a.out.find("\"exact\": 3") != std::string::npos);
}

TEST_CASE("defect reports formula and exact together") {
    RunResult r = run("defect --family t-stable --n 6 --k 2 --t 2 --r 2 --s 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"exact\": 2") != std::string::npos);
    CHECK(r.out.find("\"formula\": 2") != std::string::npos);
}

TEST_CASE("refute schrijver on a constant coloring exits 1 with a witness") {
    write_file("cli_flat.json", "{\"colors\": [1,1,1,1,1,1,1,1,1]}");
    RunResult r = run("refute schrijver --n 6 --k 2 --coloring cli_flat.json");
    CHECK(r.code == 1);
    CHECK(r.out.find("\"sets\"") != std::string::npos);
    CHECK(r.out.find("\"color\": 1") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
    write_file("cli_bad.json", "{\"colors\": [1,");
    RunResult r = run("refute schrijver --n 6 --k 2 --coloring cli_bad.json");
    CHECK(r.code == 2);
    write_file("cli_badfield.json", "{\"n\": 4, \"edges\": [[1]]}");
    RunResult r2 = run("defect --input cli_badfield.json --r 2 --s 1");
    CHECK(r2.code == 2);
    RunResult r3 = run("gen --family k-subsets --n 4 --k 1");
    CHECK(r3.code == 2);
}

TEST_CASE("tucker octa searches a supplied labeling file") {
    // the worked n=2 labeling: everything positive on representatives
    write_file("cli_lab.json", "{\"n\": 2, \"labels\": [1,-1,1,1,-1,-1,1,-1]}");
    RunResult r = run("tucker octa --labeling cli_lab.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"a\": \"0+\"") != std::string::npos);
    CHECK(r.out.find("\"b\": \"-+\"") != std::string::npos);
    // breaking antipodality exits 1
    write_file("cli_lab_bad.json", "{\"n\": 2, \"labels\": [1,1,1,1,-1,1,1,-1]}");
    RunResult r2 = run("tucker octa --labeling cli_lab_bad.json");
    CHECK(r2.code == 1);
}

TEST_CASE("color emits validated colorings and validates supplied ones") {
    RunResult r = run("color --n 5 --k 2 --r 2 --s 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"m\": 3") != std::string::npos);
    RunResult star = run("color --star-r4s2 --n 6");
    CHECK(star.code == 0);
    CHECK(star.out.find("\"m\": 3") != std::string::npos);
    write_file("cli_col.json", "{\"colors\": [1,1,1,1,1,1,1,1,1,1]}");
    RunResult bad = run(
        "color --validate cli_col.json --family k-subsets --n 5 --k 2 --r 2 --s 1");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"proper\": false") != std::string::npos);
}

TEST_CASE("scan emits the exploration report") {
    RunResult r = run("scan --n 6 --k 2 --r 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"chi\": 4") != std::string::npos);
    CHECK(r.out.find("\"vertex_critical\": true") != std::string::npos);
}

TEST_CASE("refute dolnikov and main run from coloring files") {
    write_file("cli_two.json", "{\"colors\": [1,2,1,2,1,2,1,2,1,2]}");
    RunResult dol = run(
        "refute dolnikov --family k-subsets --n 5 --k 2 --coloring cli_two.json");
    CHECK(dol.code == 1);
    CHECK(dol.out.find("\"sets\"") != std::string::npos);
    RunResult mn = run(
        "refute main --family k-subsets --n 5 --k 2 --coloring cli_two.json --p 2 --s 1");
    CHECK(mn.code == 1);
    CHECK(mn.out.find("\"color\"") != std::string::npos);
}

TEST_CASE("tucker zp searches a supplied labeling file") {
    // 2x2 board with row caps 1: faces in code order are
    // 1,2,3,4,6,8,9,12 and the rotation pairs them as (1,4),(2,8),(3,12),(6,9)
    write_file("cli_zp.json",
               "{\"n\": 2, \"p\": 2, \"s\": [1, 1], \"labels\": "
               "[[0,1],[0,1],[0,1],[1,1],[0,1],[1,1],[1,1],[1,1]]}");
    RunResult r = run("tucker zp --labeling cli_zp.json --m 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\": 1") != std::string::npos);
    CHECK(r.out.find("\"signs\"") != std::string::npos);
    // breaking equivariance exits 1
    write_file("cli_zp_bad.json",
               "{\"n\": 2, \"p\": 2, \"s\": [1, 1], \"labels\": "
               "[[0,1],[0,1],[0,1],[0,1],[0,1],[1,1],[1,1],[1,1]]}");
    RunResult r2 = run("tucker zp --labeling cli_zp_bad.json --m 1");
    CHECK(r2.code == 1);
}

TEST_CASE("verify-chains reports a fully green battery") {
    RunResult r = run("verify-chains --n 5 --k 2 --seed 0 --trials 10");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_ok\": true") != std::string::npos);
}
