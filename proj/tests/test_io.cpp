#include <doctest.h>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pmatch/errors.hpp"
#include "pmatch/io.hpp"
#include "pmatch/types.hpp"

using pmatch::Symbol;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out.write(bytes.data(), std::streamsize(bytes.size()));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("sequence files round-trip at both symbol widths") {
    tst::TempDir dir;

    // narrow: sigma fits one byte per symbol
    std::vector<Symbol> narrow{0, 3, 5, 5, 1};
    pmatch::write_pmtx(dir.file("narrow.pmtx"), 6, narrow);
    auto r = pmatch::read_pmtx(dir.file("narrow.pmtx"));
    CHECK(r.sigma == 6);
    CHECK(r.symbols == narrow);

    // wide: sigma over 256 forces two bytes per symbol
    std::vector<Symbol> wide{0, 300, 319, 7};
    pmatch::write_pmtx(dir.file("wide.pmtx"), 320, wide);
    r = pmatch::read_pmtx(dir.file("wide.pmtx"));
    CHECK(r.sigma == 320);
    CHECK(r.symbols == wide);

    // empty payload is a valid text
    pmatch::write_pmtx(dir.file("empty.pmtx"), 4, std::vector<Symbol>{});
    auto t = pmatch::read_pmtx_text(dir.file("empty.pmtx"));
    CHECK(t.empty());
    CHECK(t.alphabet().size() == 4);
}

TEST_CASE("typed readers return Text and Pattern") {
    tst::TempDir dir;
    auto text = tst::text_of("ABAB", 4);
    auto pattern = tst::pattern_of("AB", 4);
    pmatch::write_pmtx(dir.file("t.pmtx"), text);
    pmatch::write_pmtx(dir.file("p.pmtx"), pattern);

    auto t = pmatch::read_pmtx_text(dir.file("t.pmtx"));
    CHECK(t.symbols() == text.symbols());
    CHECK(t.alphabet().size() == 4);

    auto p = pmatch::read_pmtx_pattern(dir.file("p.pmtx"));
    CHECK(p.symbols() == pattern.symbols());

    // a pattern must not be empty
    pmatch::write_pmtx(dir.file("e.pmtx"), 4, std::vector<Symbol>{});
    CHECK_THROWS_AS(pmatch::read_pmtx_pattern(dir.file("e.pmtx")), pmatch::format_error);
}

TEST_CASE("the on-disk layout is exactly as documented") {
    tst::TempDir dir;
    pmatch::write_pmtx(dir.file("x.pmtx"), 4, std::vector<Symbol>{0, 3});
    const std::string bytes = slurp(dir.file("x.pmtx"));

    const std::string expected{
        'P', 'M', 'T', 'X',            // magic
        0x01,                          // version
        0x04, 0x00, 0x00, 0x00,        // sigma = 4, little-endian
        0x01,                          // one byte per symbol
        0x02, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,  // count = 2
        0x00, 0x03};                   // payload
    CHECK(bytes == expected);
}

TEST_CASE("corrupt sequence files are rejected") {
    tst::TempDir dir;
    pmatch::write_pmtx(dir.file("good.pmtx"), 4, std::vector<Symbol>{0, 1, 2});
    const std::string good = slurp(dir.file("good.pmtx"));

    auto expect_reject = [&](std::string bytes, const char* label) {
        INFO(label);
        spit(dir.file("bad.pmtx"), bytes);
        CHECK_THROWS_AS(pmatch::read_pmtx(dir.file("bad.pmtx")), pmatch::format_error);
    };

    expect_reject(good.substr(0, 10), "truncated header");
    expect_reject(good.substr(0, good.size() - 1), "truncated payload");
    expect_reject(good + std::string(1, '\0'), "oversized payload");

    std::string wrong_magic = good;
    wrong_magic[0] = 'Q';
    expect_reject(wrong_magic, "wrong magic");

    std::string wrong_version = good;
    wrong_version[4] = 0x02;
    expect_reject(wrong_version, "unknown version");

    std::string wrong_width = good;
    wrong_width[9] = 0x02;
    expect_reject(wrong_width, "width inconsistent with sigma");

    std::string bad_code = good;
    bad_code[18] = 0x07;  // first symbol, sigma is 4
    expect_reject(bad_code, "symbol code out of range");

    std::string zero_sigma = good;
    zero_sigma[5] = 0x00;
    expect_reject(zero_sigma, "sigma zero");

    CHECK_THROWS_AS(pmatch::read_pmtx(dir.file("missing.pmtx")), pmatch::format_error);
}

TEST_CASE("instance metadata round-trips") {
    tst::TempDir dir;
    pmatch::InstanceMeta meta;
    meta.family = "random";
    meta.distribution = "skewed";
    meta.sigma = 8;
    meta.n = 100000;
    meta.m = 64;
    meta.seed = 424242;
    meta.planted = {5, 900, 99000};
    meta.text_file = "x.text.pmtx";
    meta.pattern_file = "x.pattern.pmtx";
    pmatch::write_instance_meta(dir.file("x.meta.json"), meta);

    auto back = pmatch::read_instance_meta(dir.file("x.meta.json"));
    CHECK(back.family == meta.family);
    CHECK(back.distribution == meta.distribution);
    CHECK(back.sigma == meta.sigma);
    CHECK(back.n == meta.n);
    CHECK(back.m == meta.m);
    CHECK(back.seed == meta.seed);
    CHECK(back.planted == meta.planted);
    CHECK(back.text_file == meta.text_file);
    CHECK(back.pattern_file == meta.pattern_file);

    spit(dir.file("broken.json"), "{not json");
    CHECK_THROWS_AS(pmatch::read_instance_meta(dir.file("broken.json")), pmatch::format_error);
    spit(dir.file("wrong.json"), "{\"schema\":\"other\"}");
    CHECK_THROWS_AS(pmatch::read_instance_meta(dir.file("wrong.json")), pmatch::format_error);
}

}  // TEST_SUITE
