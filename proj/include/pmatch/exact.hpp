#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmatch/stats.hpp"
#include "pmatch/types.hpp"

namespace pmatch {

/// Classic KMP failure function. Entry for prefix length L (1-based) is the
/// length of the longest proper prefix of P[0..L) that is also its suffix.
class FailureTable {
public:
    explicit FailureTable(std::vector<std::uint32_t> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    /// f[L] for prefix length L in [1, size()].
    std::uint32_t at(std::size_t length) const noexcept { return values_[length - 1]; }

    std::span<const std::uint32_t> values() const noexcept { return values_; }

private:
    std::vector<std::uint32_t> values_;
};

FailureTable build_failure(const Pattern& pattern);

/// Naive scan core: slides the pattern one position at a time, comparing
/// left to right until the first mismatch. Returns the number of symbol
/// comparisons; every test is counted, the failing one included. Invokes
/// on_match(start) for each occurrence, in increasing order.
///
/// The leading-symbol test of consecutive alignments is a linear search for
/// pattern[0], so it runs through std::find; an alignment rejected there
/// costs exactly one comparison, the same as the textbook double loop, and
/// the verify loop charges the remaining positions of a candidate alignment
/// identically (mismatch at i costs i+1, a full match costs m). The count
/// is therefore equal alignment by alignment to the plain formulation.
template <typename OnMatch>
std::uint64_t naive_exact_scan(std::span<const Symbol> text, std::span<const Symbol> pattern,
                               OnMatch&& on_match) {
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    std::uint64_t comparisons = 0;
    if (m == 0 || m > n) return comparisons;
    const Symbol* const t = text.data();
    const Symbol first = pattern[0];
    const Symbol* const scan_end = t + (n - m + 1);
    const Symbol* cur = t;
    while (cur != scan_end) {
        const Symbol* hit = std::find(cur, scan_end, first);
        comparisons += static_cast<std::uint64_t>(hit - cur);
        if (hit == scan_end) break;
        const std::size_t j = static_cast<std::size_t>(hit - t);
        std::size_t i = 1;
        while (i < m && t[j + i] == pattern[i]) ++i;
        comparisons += (i < m) ? i + 1 : i;
        if (i == m) on_match(j);
        cur = hit + 1;
    }
    return comparisons;
}

/// KMP scan core. State q is the length of the matched prefix; a mismatch at
/// q == 0 consumes the text symbol, otherwise the failure link is followed
/// without consuming. Reaching q == m reports and continues from f[m].
/// Returns the comparison count, which never exceeds 2n: each comparison
/// either consumes a text symbol (at most n) or strictly shrinks q, and q
/// only ever grows by consuming.
template <typename OnMatch>
std::uint64_t kmp_scan(std::span<const Symbol> text, std::span<const Symbol> pattern,
                       const FailureTable& failure, OnMatch&& on_match) {
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    std::uint64_t comparisons = 0;
    if (m == 0 || m > n) return comparisons;
    const std::uint32_t* f = failure.values().data();
    std::size_t q = 0;
    std::size_t tp = 0;
    while (tp < n) {
        ++comparisons;
        if (text[tp] == pattern[q]) {
            ++tp;
            ++q;
            if (q == m) {
                on_match(tp - m);
                q = f[m - 1];
            }
        } else if (q == 0) {
            ++tp;
        } else {
            q = f[q - 1];
        }
    }
    return comparisons;
}

/// Naive exact search. m > n yields an empty outcome with zero comparisons.
/// Throws std::invalid_argument when the alphabets differ.
SearchOutcome naive_exact_search(const Text& text, const Pattern& pattern);

/// KMP automaton search; the table build is part of the call (and of its
/// elapsed time). Same preconditions and edge behavior as the naive search,
/// and always the same occurrence set.
SearchOutcome kmp_search(const Text& text, const Pattern& pattern);

namespace detail {

inline std::int64_t ns_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace detail

}  // namespace pmatch
