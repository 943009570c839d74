#include "pmatch/param.hpp"

#include <chrono>

#include "pmatch/exact.hpp"

namespace pmatch {

PFailureTable build_p_failure(const Pattern& pattern) {
    const auto p = pattern.view();
    const std::size_t m = p.size();
    const PrevEncoding prev = prev_encode(p);
    std::vector<std::uint32_t> pf(m, 0);
    std::size_t q = 0;  // pf value for the previous prefix length
    for (std::size_t i = 2; i <= m; ++i) {
        while (q > 0 && !compare_pp(i, q + 1, p, prev)) q = pf[q - 1];
        if (compare_pp(i, q + 1, p, prev)) ++q;  // q == 0 always extends: single symbols p-match
        pf[i - 1] = static_cast<std::uint32_t>(q);
    }
    return PFailureTable(std::move(pf));
}

SearchOutcome pkmp_search(const Text& text, const Pattern& pattern) {
    require_same_alphabet(text, pattern);
    SearchOutcome out;
    const auto start = std::chrono::steady_clock::now();
    const PrevEncoding prev = prev_encode(pattern);
    const PFailureTable pfailure = build_p_failure(pattern);
    out.stats = pkmp_scan(text.view(), prev, pfailure,
                          [&](std::size_t j) { out.occurrences.push_back(j); });
    out.stats.elapsed_ns = detail::ns_since(start);
    return out;
}

SearchOutcome naive_p_search(const Text& text, const Pattern& pattern) {
    require_same_alphabet(text, pattern);
    SearchOutcome out;
    const auto start = std::chrono::steady_clock::now();
    const PrevEncoding prev = prev_encode(pattern);
    out.stats = naive_p_scan(text.view(), prev,
                             [&](std::size_t j) { out.occurrences.push_back(j); });
    out.stats.elapsed_ns = detail::ns_since(start);
    return out;
}

}  // namespace pmatch
