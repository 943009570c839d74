#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pmatch/cli.hpp"
#include "pmatch/io.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = pmatch::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::size_t> parse_occurrences(const std::string& stdout_text) {
    std::vector<std::size_t> out;
    std::istringstream in(stdout_text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(std::stoull(line));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate then search finds every planted occurrence") {
    tst::TempDir dir;
    auto gen = run_cli({"gen", "random", "--n", "4000", "--sigma", "4", "--m", "16",
                        "--plants", "10", "--seed", "7", "--out", dir.file("inst")});
    REQUIRE(gen.code == 0);

    auto meta = pmatch::read_instance_meta(dir.file("inst.meta.json"));
    REQUIRE(meta.planted.size() == 10);
    CHECK(std::is_sorted(meta.planted.begin(), meta.planted.end()));

    for (const char* algo : {"exact-naive", "exact-kmp", "pm-naive", "pm-auto"}) {
        auto search = run_cli({"search", "--algo", algo, "--text", dir.file("inst.text.pmtx"),
                               "--pattern", dir.file("inst.pattern.pmtx"), "--stats",
                               dir.file("stats.txt")});
        REQUIRE(search.code == 0);
        auto occ = parse_occurrences(search.out);
        CHECK(std::is_sorted(occ.begin(), occ.end()));
        for (auto pos : meta.planted) {
            CHECK(std::binary_search(occ.begin(), occ.end(), pos));
        }
        const std::string stats = slurp(dir.file("stats.txt"));
        CHECK(stats.find("algorithm=" + std::string(algo)) != std::string::npos);
        CHECK(stats.find("symbol_comparisons=") != std::string::npos);
        CHECK(stats.find("elapsed_ns=") != std::string::npos);
    }
}

TEST_CASE("generation is reproducible byte for byte") {
    tst::TempDir dir;
    const std::vector<std::string> common{"gen",      "random", "--n",   "3000", "--sigma",
                                          "6",        "--m",    "12",    "--plants", "5",
                                          "--dist",   "skewed", "--seed", "99"};
    auto first = common;
    first.insert(first.end(), {"--out", dir.file("a")});
    auto second = common;
    second.insert(second.end(), {"--out", dir.file("b")});
    REQUIRE(run_cli(first).code == 0);
    REQUIRE(run_cli(second).code == 0);

    CHECK(slurp(dir.file("a.text.pmtx")) == slurp(dir.file("b.text.pmtx")));
    CHECK(slurp(dir.file("a.pattern.pmtx")) == slurp(dir.file("b.pattern.pmtx")));
    auto ma = pmatch::read_instance_meta(dir.file("a.meta.json"));
    auto mb = pmatch::read_instance_meta(dir.file("b.meta.json"));
    CHECK(ma.planted == mb.planted);
    CHECK(ma.distribution == "skewed");
}

TEST_CASE("periodic instances drive the naive scan to its analytical cost") {
    tst::TempDir dir;
    REQUIRE(run_cli({"gen", "periodic", "--n", "2000", "--m", "16", "--out",
                     dir.file("per")}).code == 0);
    auto search = run_cli({"search", "--algo", "exact-naive", "--text",
                           dir.file("per.text.pmtx"), "--pattern", dir.file("per.pattern.pmtx"),
                           "--stats", dir.file("s.txt")});
    REQUIRE(search.code == 0);
    CHECK(parse_occurrences(search.out).empty());
    const std::string stats = slurp(dir.file("s.txt"));
    // (2000 - 16 + 1) * 16
    CHECK(stats.find("symbol_comparisons=31760") != std::string::npos);
    CHECK(stats.find("occurrences=0") != std::string::npos);
}

TEST_CASE("stats go to stderr when no file is given") {
    tst::TempDir dir;
    REQUIRE(run_cli({"gen", "periodic", "--n", "100", "--m", "4", "--out",
                     dir.file("p")}).code == 0);
    auto search = run_cli({"search", "--algo", "exact-kmp", "--text", dir.file("p.text.pmtx"),
                           "--pattern", dir.file("p.pattern.pmtx")});
    REQUIRE(search.code == 0);
    CHECK(search.err.find("symbol_comparisons=") != std::string::npos);
    CHECK(search.out.empty());  // no occurrences on the periodic instance
}

TEST_CASE("bench runs a config and report re-renders its manifest") {
    tst::TempDir dir;
    std::ofstream cfg(dir.file("cfg.json"));
    cfg << R"({
        "mode": "exact",
        "family": "random",
        "sigmas": [4],
        "pattern_lengths": [8, 16],
        "n": 2000,
        "plant_count": 3,
        "distributions": ["uniform"],
        "repeats": 1,
        "warmup": 0,
        "seed": 5
    })";
    cfg.close();

    auto bench = run_cli({"bench", "--config", dir.file("cfg.json"), "--csv",
                          dir.file("out.csv"), "--manifest", dir.file("run.json")});
    REQUIRE(bench.code == 0);

    const std::string csv = slurp(dir.file("out.csv"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 cells
    CHECK(csv.rfind("sigma,m,", 0) == 0);

    auto report = run_cli({"report", "--manifest", dir.file("run.json"), "--format",
                           "markdown"});
    REQUIRE(report.code == 0);
    CHECK(report.out.find("sigma = 4") != std::string::npos);

    // --scale shrinks n; the run still succeeds and produces the same cells
    auto scaled = run_cli({"bench", "--config", dir.file("cfg.json"), "--scale", "2",
                           "--csv", dir.file("scaled.csv")});
    REQUIRE(scaled.code == 0);
    const std::string scaled_csv = slurp(dir.file("scaled.csv"));
    CHECK(std::count(scaled_csv.begin(), scaled_csv.end(), '\n') == 3);

    // with no output flags the CSV lands on stdout
    auto piped = run_cli({"bench", "--config", dir.file("cfg.json")});
    REQUIRE(piped.code == 0);
    CHECK(piped.out.rfind("sigma,m,", 0) == 0);
}

TEST_CASE("ingest slices a FASTA file into window files") {
    tst::TempDir dir;
    std::ofstream fasta(dir.file("seq.fa"));
    fasta << ">rec one\n";
    for (int i = 0; i < 10; ++i) fasta << "ACGTACGTACGTACGTACGT\n";  // 200 bases
    fasta.close();

    auto ingest = run_cli({"ingest", "fasta", "--in", dir.file("seq.fa"), "--window", "50",
                           "--count", "3", "--out", dir.file("win")});
    REQUIRE(ingest.code == 0);
    auto t0 = pmatch::read_pmtx_text(dir.file("win.w000.pmtx"));
    auto t1 = pmatch::read_pmtx_text(dir.file("win.w001.pmtx"));
    auto t2 = pmatch::read_pmtx_text(dir.file("win.w002.pmtx"));
    CHECK(t0.size() == 50);
    CHECK(t1.size() == 50);
    CHECK(t2.size() == 50);
    CHECK(t0.alphabet().size() == 4);
    CHECK(ingest.out.find("win.meta.json") != std::string::npos);
}

TEST_CASE("failures exit with the documented codes") {
    tst::TempDir dir;
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"search", "--bogus-flag", "x"}).code == 1);
    CHECK(run_cli({"search", "--algo", "boyer-moore", "--text", "t", "--pattern", "p"}).code ==
          1);
    CHECK(run_cli({"search", "--text", dir.file("no.pmtx"), "--pattern",
                   dir.file("no2.pmtx")}).code == 1);
    CHECK(run_cli({"gen", "periodic", "--n", "10", "--m", "99", "--out",
                   dir.file("x")}).code == 1);
    CHECK(run_cli({"bench", "--config", dir.file("missing.json")}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"gen", "--help"}).code == 0);
}

}  // TEST_SUITE
