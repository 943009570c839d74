#include "pmatch/io.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

namespace pmatch {

namespace {

void put_u32_le(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u64_le(std::string& out, std::uint64_t v) {
    for (int shift = 0; shift < 64; shift += 8) {
        out.push_back(static_cast<char>((v >> shift) & 0xff));
    }
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw format_error("read failed on " + path.string());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw format_error("write failed on " + path.string());
}

}  // namespace

void write_pmtx(const std::filesystem::path& path, std::uint32_t sigma,
                std::span<const Symbol> symbols) {
    const Alphabet alphabet(sigma);  // validates the range
    detail::check_codes(symbols, alphabet, "write_pmtx");
    const std::size_t width = sigma <= 256 ? 1 : 2;

    std::string bytes;
    bytes.reserve(18 + symbols.size() * width);
    bytes.append(kPmtxMagic, 4);
    bytes.push_back(static_cast<char>(kPmtxVersion));
    put_u32_le(bytes, sigma);
    bytes.push_back(static_cast<char>(width));
    put_u64_le(bytes, symbols.size());
    for (const Symbol s : symbols) {
        bytes.push_back(static_cast<char>(s & 0xff));
        if (width == 2) bytes.push_back(static_cast<char>((s >> 8) & 0xff));
    }
    write_file_bytes(path, bytes);
}

void write_pmtx(const std::filesystem::path& path, const Text& text) {
    write_pmtx(path, text.alphabet().size(), text.view());
}

void write_pmtx(const std::filesystem::path& path, const Pattern& pattern) {
    write_pmtx(path, pattern.alphabet().size(), pattern.view());
}

RawSequence read_pmtx(const std::filesystem::path& path) {
    const std::string bytes = read_file_bytes(path);
    const auto fail = [&](const std::string& why) -> void {
        throw format_error(path.string() + ": " + why);
    };

    if (bytes.size() < 18) fail("truncated header");
    if (std::memcmp(bytes.data(), kPmtxMagic, 4) != 0) fail("bad magic");
    if (static_cast<std::uint8_t>(bytes[4]) != kPmtxVersion) {
        fail("unsupported version " + std::to_string(static_cast<std::uint8_t>(bytes[4])));
    }

    const auto u8 = [&](std::size_t off) { return static_cast<std::uint8_t>(bytes[off]); };
    const std::uint32_t sigma = static_cast<std::uint32_t>(u8(5)) |
                                (static_cast<std::uint32_t>(u8(6)) << 8) |
                                (static_cast<std::uint32_t>(u8(7)) << 16) |
                                (static_cast<std::uint32_t>(u8(8)) << 24);
    if (sigma == 0 || sigma > Alphabet::kMaxSize) fail("alphabet size out of range");
    const std::size_t width = u8(9);
    const std::size_t expected_width = sigma <= 256 ? 1 : 2;
    if (width != expected_width) fail("symbol width inconsistent with alphabet size");

    std::uint64_t count = 0;
    for (int b = 7; b >= 0; --b) count = (count << 8) | u8(10 + static_cast<std::size_t>(b));
    if (bytes.size() != 18 + count * width) fail("payload length mismatch");

    RawSequence raw;
    raw.sigma = sigma;
    raw.symbols.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t off = 18 + i * width;
        Symbol s = u8(off);
        if (width == 2) s |= static_cast<Symbol>(u8(off + 1)) << 8;
        if (s >= sigma) fail("symbol code " + std::to_string(s) + " exceeds alphabet");
        raw.symbols[i] = s;
    }
    return raw;
}

Text read_pmtx_text(const std::filesystem::path& path) {
    RawSequence raw = read_pmtx(path);
    return Text(Alphabet(raw.sigma), std::move(raw.symbols));
}

Pattern read_pmtx_pattern(const std::filesystem::path& path) {
    RawSequence raw = read_pmtx(path);
    if (raw.symbols.empty()) throw format_error(path.string() + ": empty pattern");
    return Pattern(Alphabet(raw.sigma), std::move(raw.symbols));
}

void write_instance_meta(const std::filesystem::path& path, const InstanceMeta& meta) {
    nlohmann::json j;
    j["schema"] = "pmatch-instance";
    j["version"] = 1;
    j["family"] = meta.family;
    j["distribution"] = meta.distribution;
    j["sigma"] = meta.sigma;
    j["n"] = meta.n;
    j["m"] = meta.m;
    j["seed"] = meta.seed;
    j["planted"] = meta.planted;
    j["text_file"] = meta.text_file;
    j["pattern_file"] = meta.pattern_file;
    write_file_bytes(path, j.dump(2) + "\n");
}

InstanceMeta read_instance_meta(const std::filesystem::path& path) {
    const std::string bytes = read_file_bytes(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(path.string() + ": " + e.what());
    }
    try {
        InstanceMeta meta;
        meta.family = j.at("family").get<std::string>();
        meta.distribution = j.value("distribution", std::string{});
        meta.sigma = j.at("sigma").get<std::uint32_t>();
        meta.n = j.at("n").get<std::size_t>();
        meta.m = j.at("m").get<std::size_t>();
        meta.seed = j.value("seed", std::uint64_t{0});
        meta.planted = j.value("planted", std::vector<std::size_t>{});
        meta.text_file = j.value("text_file", std::string{});
        meta.pattern_file = j.value("pattern_file", std::string{});
        return meta;
    } catch (const nlohmann::json::exception& e) {
        throw format_error(path.string() + ": " + e.what());
    }
}

}  // namespace pmatch
