#include "pmatch/exact.hpp"

#include <chrono>

namespace pmatch {

FailureTable build_failure(const Pattern& pattern) {
    const auto p = pattern.view();
    const std::size_t m = p.size();
    std::vector<std::uint32_t> f(m, 0);
    std::size_t q = 0;
    for (std::size_t i = 1; i < m; ++i) {
        while (q > 0 && p[i] != p[q]) q = f[q - 1];
        if (p[i] == p[q]) ++q;
        f[i] = static_cast<std::uint32_t>(q);
    }
    return FailureTable(std::move(f));
}

SearchOutcome naive_exact_search(const Text& text, const Pattern& pattern) {
    require_same_alphabet(text, pattern);
    SearchOutcome out;
    const auto start = std::chrono::steady_clock::now();
    out.stats.symbol_comparisons = naive_exact_scan(
        text.view(), pattern.view(), [&](std::size_t j) { out.occurrences.push_back(j); });
    out.stats.elapsed_ns = detail::ns_since(start);
    return out;
}

SearchOutcome kmp_search(const Text& text, const Pattern& pattern) {
    require_same_alphabet(text, pattern);
    SearchOutcome out;
    const auto start = std::chrono::steady_clock::now();
    const FailureTable failure = build_failure(pattern);
    out.stats.symbol_comparisons = kmp_scan(
        text.view(), pattern.view(), failure, [&](std::size_t j) { out.occurrences.push_back(j); });
    out.stats.elapsed_ns = detail::ns_since(start);
    return out;
}

}  // namespace pmatch
