#pragma once

// Shared conveniences for the test suites: building typed inputs from short
// ASCII strings, enumerating small code sequences, and temp-dir management.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/types.hpp"

namespace tst {

inline std::vector<pmatch::Symbol> codes_of(std::string_view s) {
    std::vector<pmatch::Symbol> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<pmatch::Symbol>(c - 'A'));
    return out;
}

inline pmatch::Text text_of(std::string_view s, std::uint32_t sigma = 26) {
    return pmatch::Text(pmatch::Alphabet(sigma), codes_of(s));
}

inline pmatch::Pattern pattern_of(std::string_view s, std::uint32_t sigma = 26) {
    return pmatch::Pattern(pmatch::Alphabet(sigma), codes_of(s));
}

// advances a code vector through all sigma^len strings; returns false after
// the last one
inline bool next_word(std::vector<pmatch::Symbol>& w, std::uint32_t sigma) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (++w[i] < sigma) return true;
        w[i] = 0;
    }
    return false;
}

inline std::vector<pmatch::Symbol> random_codes(std::mt19937_64& rng, std::size_t len,
                                                std::uint32_t sigma) {
    std::vector<pmatch::Symbol> out(len);
    for (auto& s : out) s = static_cast<pmatch::Symbol>(rng() % sigma);
    return out;
}

// a uniformly random permutation of {0, ..., sigma-1}
inline std::vector<pmatch::Symbol> random_bijection(std::mt19937_64& rng, std::uint32_t sigma) {
    std::vector<pmatch::Symbol> pi(sigma);
    for (std::uint32_t i = 0; i < sigma; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

inline std::vector<pmatch::Symbol> apply_bijection(const std::vector<pmatch::Symbol>& codes,
                                                   const std::vector<pmatch::Symbol>& pi) {
    std::vector<pmatch::Symbol> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(pi[c]);
    return out;
}

// unique per-test scratch directory, removed on destruction
class TempDir {
public:
    TempDir() {
        static std::atomic<std::uint64_t> counter{0};
        const auto id = counter.fetch_add(1);
        path_ = std::filesystem::temp_directory_path() /
                ("pmatch_test_" + std::to_string(::getpid()) + "_" + std::to_string(id));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace tst
