#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmatch/types.hpp"

namespace pmatch {

/// Prev-encoding of a sequence: for each position i (1-based), the largest
/// k < i holding the same symbol, or i itself when the symbol has not
/// appeared before. Two sequences are p-equivalent (equal up to a one-to-one
/// renaming of symbols) exactly when their prev-encodings agree, which is
/// what makes this the workhorse of parameterized matching.
///
/// Link values are 1-based to keep the self-link convention (a[i] == i means
/// "first occurrence") unambiguous; every other index in this library is
/// 0-based.
class PrevEncoding {
public:
    explicit PrevEncoding(std::vector<std::uint32_t> links) : links_(std::move(links)) {}

    std::size_t size() const noexcept { return links_.size(); }

    /// A[i] for 1-based i in [1, size()].
    std::uint32_t link(std::size_t i) const noexcept {
        return links_[i - 1];
    }

    /// True when position i (1-based) is the first occurrence of its symbol.
    bool first_occurrence(std::size_t i) const noexcept {
        return links_[i - 1] == i;
    }

    std::span<const std::uint32_t> values() const noexcept { return links_; }

    friend bool operator==(const PrevEncoding&, const PrevEncoding&) = default;

private:
    std::vector<std::uint32_t> links_;
};

/// Builds the prev-encoding in one left-to-right pass.
PrevEncoding prev_encode(std::span<const Symbol> sequence);
PrevEncoding prev_encode(const Pattern& pattern);

/// True when the two sequences match up to some bijection on symbols,
/// decided by comparing prev-encodings. Throws std::invalid_argument on a
/// length mismatch.
bool p_equivalent(const Text& s1, const Text& s2);
bool p_equivalent(std::span<const Symbol> s1, std::span<const Symbol> s2);

/// Ground-truth check for the same relation, implemented independently of
/// prev-encodings: grows a forward and a backward symbol map and rejects on
/// the first conflict. Quadratic-free but structurally unrelated to
/// prev_encode, so the two can vouch for each other in tests.
bool bijection_oracle(const Text& s1, const Text& s2);
bool bijection_oracle(std::span<const Symbol> s1, std::span<const Symbol> s2);

}  // namespace pmatch
