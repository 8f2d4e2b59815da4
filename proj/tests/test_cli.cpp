#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::string &args) {
    const char *bin = std::getenv("WG_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "WG_CLI must point at the wg binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("eval golden outputs") {
    auto closed = run_cli("eval --group U --n 2 --class \"2\" --N 3 --method closed");
    CHECK(closed.code == 0);
    CHECK(closed.out == "-1/24\n");

    auto level1 = run_cli("eval --group U --n 1 --N 7");
    CHECK(level1.code == 0);
    CHECK(level1.out == "1/7\n");

    auto gram = run_cli("eval --group U --n 3 --class \"3\" --N 10 --method gram");
    auto rec = run_cli("eval --group U --n 3 --class \"3\" --N 10 --method recursion");
    CHECK(gram.code == 0);
    CHECK(gram.out == rec.out);

    auto sp = run_cli("eval --group SP --n 1 --N 5");
    CHECK(sp.code == 0);
    CHECK(sp.out == "±1/10\n");

    auto sp2 = run_cli("eval --group SP --n 2 --N 10");
    CHECK(sp2.code == 0);
    CHECK(sp2.out.find("±") != std::string::npos);
    CHECK(std::count(sp2.out.begin(), sp2.out.end(), '\n') == 2);

    auto series = run_cli("eval --group U --n 2 --class \"1,1\" --N 10 --method series --g-max 3");
    CHECK(series.code == 0);
    CHECK(series.out.find("partial 1010101/1000000\n") == 0);
}

TEST_CASE("paths golden outputs") {
    auto c3 = run_cli("paths --group U --class \"3\" --n 3 --g 0");
    CHECK(c3.code == 0);
    CHECK(c3.out == "2\n");

    auto id2 = run_cli("paths --group U --class \"1,1\" --n 2 --g 1");
    CHECK(id2.code == 0);
    CHECK(id2.out == "1\n");

    auto e2 = run_cli("paths --group O --pairing \"{1-2,3-4}\" --g1 0 --g2 0");
    CHECK(e2.code == 0);
    CHECK(e2.out == "1\n");

    auto all = run_cli("paths --group U --n 3 --g 1 --all");
    CHECK(all.code == 0);
    CHECK(all.out.find("class,g,count\n") == 0);
}

TEST_CASE("sample determinism and reports") {
    auto t1 = run_cli("sample --group U --lambda \"1,1,1\" --seed 1");
    CHECK(t1.code == 0);
    auto t2 = run_cli("sample --group U --lambda \"1,1,1\" --seed 1");
    CHECK(t1.out == t2.out);
    // 3 dashed steps: 4 state lines, no solid transitions
    CHECK(std::count(t1.out.begin(), t1.out.end(), '\n') == 4);

    auto rep = run_cli("sample --group U --lambda \"4\" --stat Lsum --samples 500 --seed 7");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("\"std_error\":") != std::string::npos);
    CHECK(rep.out.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify --claim main --n 2 --N 100000").code == 0);
    CHECK(run_cli("verify --claim paths --n 1 --samples 100 --seed 3").code == 0);
    CHECK(run_cli("verify --claim log --n 5 --N 10000").code == 0);
    CHECK(run_cli("verify --claim orth --n 2 --N 10000000").code == 0);
    CHECK(run_cli("verify --claim small --n 6 --N 1000").code == 0);
    CHECK(run_cli("verify --claim process --lambda \"8\" --samples 150 --seed 7").code == 0);

    auto csv = run_cli("verify --claim main --n 2 --N 100000 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("claim,n,N,label,") == 0);
}

TEST_CASE("sample statistics via the cli") {
    auto tail = run_cli("sample --group U --lambda \"6,6\" --stat Titail --i 0 --t 2 "
                        "--samples 100 --seed 13");
    CHECK(tail.code == 0);
    CHECK(tail.out.find("\"estimate\":") != std::string::npos);

    auto tth = run_cli("sample --group U --lambda \"8\" --stat T --samples 100 --seed 13");
    CHECK(tth.code == 0);
    CHECK(tth.out.find("\"hypotheses_met\": true") != std::string::npos);

    auto orth = run_cli("sample --group O --lambda \"3,1\" --seed 5");
    CHECK(orth.code == 0);
    CHECK(orth.out.find("\"state\":") != std::string::npos);
}

TEST_CASE("table json via the cli") {
    auto json = run_cli("eval --group U --n 2 --N 10 --format json");
    CHECK(json.code == 0);
    CHECK(json.out.front() == '[');
    CHECK(json.out.find("\"1/99\"") != std::string::npos);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli("eval --group U --n 2 --class \"1,3\" --N 10").code == 2); // bad partition
    CHECK(run_cli("eval --group U --n 3 --class \"3\" --sigma \"(1 2 3)\" --N 10").code == 2);
    CHECK(run_cli("eval --group Q --n 2 --N 10").code == 2);
    CHECK(run_cli("paths --group U --class \"9\" --n 9 --g 0").code == 3);  // cap
    CHECK(run_cli("eval --group U --n 2 --N 1 --method recursion").code == 4); // singular
    CHECK(run_cli("eval --group U --n 2 --N 0.5").code == 2); // floats rejected
    CHECK(run_cli("eval --group O --n 2 --N 10 --method recursion").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
}
