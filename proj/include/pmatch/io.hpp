#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pmatch/errors.hpp"
#include "pmatch/types.hpp"

namespace pmatch {

/// Binary sequence file, magic "PMTX":
///
///   offset  size  field
///   0       4     magic "PMTX"
///   4       1     format version, 0x01
///   5       4     alphabet size sigma, little-endian uint32
///   9       1     symbol width in bytes: 1 if sigma <= 256, else 2
///   10      8     symbol count, little-endian uint64
///   18      ...   symbols, fixed width, little-endian
///
/// Readers reject wrong magic/version, a width byte inconsistent with
/// sigma, truncated or oversized payloads, and symbol codes >= sigma, all
/// as format_error.
inline constexpr char kPmtxMagic[4] = {'P', 'M', 'T', 'X'};
inline constexpr std::uint8_t kPmtxVersion = 0x01;

void write_pmtx(const std::filesystem::path& path, std::uint32_t sigma,
                std::span<const Symbol> symbols);
void write_pmtx(const std::filesystem::path& path, const Text& text);
void write_pmtx(const std::filesystem::path& path, const Pattern& pattern);

struct RawSequence {
    std::uint32_t sigma = 0;
    std::vector<Symbol> symbols;
};

RawSequence read_pmtx(const std::filesystem::path& path);
Text read_pmtx_text(const std::filesystem::path& path);
Pattern read_pmtx_pattern(const std::filesystem::path& path);

/// Sidecar metadata written next to generated instances.
struct InstanceMeta {
    std::string family;        // "random" | "periodic"
    std::string distribution;  // "uniform" | "skewed" | "" for periodic
    std::uint32_t sigma = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> planted;  // sorted plant start indices
    std::string text_file;
    std::string pattern_file;
};

void write_instance_meta(const std::filesystem::path& path, const InstanceMeta& meta);
InstanceMeta read_instance_meta(const std::filesystem::path& path);

}  // namespace pmatch
