#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pmatch {

/// Exact work counters for one search call.
///
/// symbol_comparisons counts every symbol equality test the algorithm makes,
/// including the final failing one of a run. aux_lookups counts queries into
/// the last-occurrence window structure used by the parameterized algorithms
/// (always 0 for exact matching). elapsed_ns is wall time for the whole call,
/// preprocessing included, on a monotonic clock.
struct ComparisonStats {
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t aux_lookups = 0;
    std::int64_t elapsed_ns = 0;
};

/// Result of one search: 0-based start indices in increasing order, plus the
/// work counters for the call.
struct SearchOutcome {
    std::vector<std::size_t> occurrences;
    ComparisonStats stats;
};

}  // namespace pmatch
