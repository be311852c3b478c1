#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "subprocess.hpp"

using subprocess::run_cli;
using subprocess::run_shell;

TEST_CASE("count") {
    auto r = run_cli("count --n 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1430\n");

    // past 64-bit range, must still be exact decimal
    r = run_cli("count --n 40");
    CHECK(r.output == "2622127042276492108820\n");
}

TEST_CASE("tables") {
    auto r = run_cli("table --kind ballot --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4: 0 5 5 3 1") != std::string::npos);

    r = run_cli("table --kind subdiagonal --n 5");
    CHECK(r.output.find("5: 1 4 9 14 14 0") != std::string::npos);
}

TEST_CASE("enumerate") {
    auto r = run_cli("enumerate --n 2 --family dyck");
    CHECK(r.output == "abab\naabb\n");

    r = run_cli("enumerate --n 4 --family code --limit 2");
    CHECK(r.output == "1111\n1112\n");
}

TEST_CASE("convert") {
    auto r = run_cli("convert --from code --to dyck", "1122\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "abaababb\n");

    r = run_cli("convert --from dyck --to tableau", "aababb\n");
    CHECK(r.output == "1 2 4 / 3 5 6\n");
}

TEST_CASE("malformed input exits with code 2 and names the error") {
    auto r = run_cli("convert --from dyck --to code", "ba\n");
    CHECK(r.exit_code == 2);

    const std::string command = "printf 'ba\\n' | " + subprocess::cli_path() +
                                " convert --from dyck --to code 2>&1 >/dev/null";
    CHECK(run_shell(command).output.find("PrefixViolation") != std::string::npos);

    CHECK(run_cli("convert --from code --to dyck", "1x").exit_code == 2);
    CHECK(run_cli("unrank --n 4 --r 99").exit_code == 2);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("no-such-verb").exit_code == 1);
    CHECK(run_cli("enumerate --n 4 --family nope").exit_code == 1);
    CHECK(run_cli("count").exit_code == 1);  // --n missing
    CHECK(run_cli("simulate --n 4").exit_code == 1);  // neither --exact nor --samples
}

TEST_CASE("resource limits exit with code 3") {
    CHECK(run_cli("simulate --n 40 --exact").exit_code == 3);
}

TEST_CASE("rank and unrank") {
    auto r = run_cli("rank", "1111\n1211\n1234\n");
    CHECK(r.output == "0\n5\n13\n");
    CHECK(run_cli("unrank --n 4 --r 4").output == "1123\n");
    CHECK(run_cli("unrank --n 4 --r 0x5").output == "1211\n");  // hex rank
}

TEST_CASE("sampling is reproducible and respects --count") {
    auto first = run_cli("sample --n 5 --seed 42 --count 8");
    auto second = run_cli("sample --n 5 --seed 42 --count 8");
    CHECK(first.output == second.output);
    CHECK(std::count(first.output.begin(), first.output.end(), '\n') == 8);
    CHECK(run_cli("sample --n 5 --seed 0x2a --count 8").output == first.output);
}

TEST_CASE("simulate") {
    auto r = run_cli("simulate --n 4 --exact");
    CHECK(r.output.find("p_final_0 5/14") != std::string::npos);
    CHECK(r.output.find("expected_final 1\n") != std::string::npos);

    r = run_cli("simulate --n 4 --samples 1000 --seed 7");
    CHECK(r.output.find("source monte-carlo") != std::string::npos);
    CHECK(r.output.find("seed 7") != std::string::npos);
}

TEST_CASE("verify") {
    auto r = run_cli("verify --family perm --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all pass") != std::string::npos);
}

TEST_CASE("render") {
    CHECK(run_cli("render --format ascii", "1234\n").output == "   #\n  #\n #\n#\n");
    CHECK(run_cli("render --format ascii", "0120\n").output == "  #\n #\n#  #\n");
    auto svg = run_cli("render --format svg", "1231\n");
    CHECK(svg.output.find("<svg") != std::string::npos);
}

TEST_CASE("structured output is one self-describing json record per line") {
    auto r = run_cli("--format structured enumerate --n 2 --family tableau");
    std::istringstream lines(r.output);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        const auto record = nlohmann::json::parse(line);
        CHECK(record["type"] == "tableau");
        CHECK(record["n"] == 2);
        CHECK(record.contains("payload"));
        ++rows;
    }
    CHECK(rows == 2);

    r = run_cli("--format structured simulate --n 4 --exact");
    CHECK(r.output.find("\"5/14\"") != std::string::npos);

    r = run_cli("--format structured count --n 40");
    CHECK(r.output.find("\"2622127042276492108820\"") != std::string::npos);
}

TEST_CASE("pipe composition reproduces the enumeration byte for byte") {
    for (const std::string family : {"dyck", "perm", "tableau"}) {
        const std::string base = subprocess::cli_path();
        const auto direct = run_shell(base + " enumerate --n 6 --family code");
        const auto round = run_shell(base + " enumerate --n 6 --family code | " + base +
                                     " convert --from code --to " + family + " | " + base +
                                     " convert --from " + family + " --to code");
        CHECK(direct.exit_code == 0);
        CHECK(direct.output == round.output);
    }
}
