#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmatch/prev.hpp"
#include "pmatch/stats.hpp"
#include "pmatch/types.hpp"

namespace pmatch {

/// Failure function for parameterized matching: entry for prefix length L is
/// the largest l < L such that P[0..l) p-matches P[L-l..L). For L >= 2 the
/// value is at least 1, because any two single symbols p-match.
class PFailureTable {
public:
    explicit PFailureTable(std::vector<std::uint32_t> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    /// pf[L] for prefix length L in [1, size()].
    std::uint32_t at(std::size_t length) const noexcept { return values_[length - 1]; }

    std::span<const std::uint32_t> values() const noexcept { return values_; }

private:
    std::vector<std::uint32_t> values_;
};

/// Most recent position of each symbol over a scanned prefix of the text,
/// kept in an ordered map (one lookup or update is O(log sigma)).
///
/// Recording is strictly sequential: record() must be fed index
/// next_index(), next_index() + 1, ... so the structure always reflects
/// exactly the text positions in [start, next_index()). Queries that must
/// ignore occurrences older than a window bound do so by comparing the
/// returned position against the bound; stale entries are never physically
/// evicted (the map holds at most one entry per distinct symbol, so laziness
/// costs nothing).
class LastOccurrenceWindow {
public:
    LastOccurrenceWindow() = default;

    /// Forgets everything and restarts recording at text index `start`.
    void reset(std::size_t start) {
        last_.clear();
        next_ = start;
    }

    /// Registers text[index] == s. index must equal next_index().
    void record(Symbol s, std::size_t index) {
        if (index != next_) {
            throw std::logic_error("LastOccurrenceWindow: record at index " +
                                   std::to_string(index) + ", expected " +
                                   std::to_string(next_));
        }
        last_[s] = index;
        ++next_;
    }

    std::size_t next_index() const noexcept { return next_; }

    /// Most recent recorded position of s, if any.
    std::optional<std::size_t> last_occurrence(Symbol s) const {
        const auto it = last_.find(s);
        if (it == last_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::map<Symbol, std::size_t> last_;
    std::size_t next_ = 0;
};

/// Decides whether pattern position i (1-based) extends the current
/// alignment at text index j (0-based), assuming positions 1..i-1 already
/// p-match the i-1 text symbols before j.
///
/// Two cases, driven entirely by the pattern's prev-encoding:
///  - a[i] == i: the pattern symbol is new, so text[j] must not occur among
///    the previous i-1 text symbols. One window lookup answers that: equal
///    exactly when the last occurrence of text[j] is older than j-i+1.
///  - a[i] != i: the pattern symbol repeats at distance i - a[i], so the
///    text must repeat at the same distance: text[j] == text[j - (i - a[i])].
///
/// The window must reflect exactly the text positions before j (its
/// next_index() must equal j); anything else throws std::logic_error.
/// Increments stats.symbol_comparisons once per call and stats.aux_lookups
/// once per window query.
inline bool compare_pt(std::size_t i, std::size_t j, std::span<const Symbol> text,
                       const PrevEncoding& prev, const LastOccurrenceWindow& window,
                       ComparisonStats& stats) {
    if (window.next_index() != j) {
        throw std::logic_error("compare_pt: window is at index " +
                               std::to_string(window.next_index()) + ", text index is " +
                               std::to_string(j));
    }
    ++stats.symbol_comparisons;
    const std::uint32_t link = prev.link(i);
    if (link == i) {
        ++stats.aux_lookups;
        const auto occ = window.last_occurrence(text[j]);
        return !occ || *occ + i <= j;  // *occ < j - i + 1, underflow-safe
    }
    return text[j] == text[j - (i - link)];
}

/// Pattern-against-itself variant used while building the p-failure table:
/// does prefix position j (1-based) extend an alignment whose last i-1
/// pattern positions play the text role, ending at pattern position i
/// (1-based, j <= i)? The prev-encoding answers both sides: position i is
/// effectively new inside its window of j-1 symbols when a[i] == i or
/// i - a[i] >= j, and position j is new in the prefix exactly when
/// a[j] == j. Throws std::invalid_argument when j > i.
inline bool compare_pp(std::size_t i, std::size_t j, std::span<const Symbol> pattern,
                       const PrevEncoding& prev) {
    if (j > i) {
        throw std::invalid_argument("compare_pp: prefix position " + std::to_string(j) +
                                    " exceeds text-role position " + std::to_string(i));
    }
    const std::uint32_t link = prev.link(i);
    if (link == i || i - link >= j) {
        return prev.link(j) == j;
    }
    return pattern[j - 1] == pattern[j - 1 - (i - link)];
}

PFailureTable build_p_failure(const Pattern& pattern);

/// Automaton scan core for parameterized matching: the KMP loop with
/// compare_pt as the relation and the p-failure table for fallbacks. After a
/// full match the state continues from pf[m]. The 2n comparison bound holds
/// by the same argument as exact KMP.
template <typename OnMatch>
ComparisonStats pkmp_scan(std::span<const Symbol> text, const PrevEncoding& prev,
                          const PFailureTable& pfailure, OnMatch&& on_match) {
    const std::size_t n = text.size();
    const std::size_t m = prev.size();
    ComparisonStats stats;
    if (m == 0 || m > n) return stats;
    const std::uint32_t* pf = pfailure.values().data();
    LastOccurrenceWindow window;
    std::size_t q = 0;
    std::size_t tp = 0;
    while (tp < n) {
        if (compare_pt(q + 1, tp, text, prev, window, stats)) {
            window.record(text[tp], tp);
            ++tp;
            ++q;
            if (q == m) {
                on_match(tp - m);
                q = pf[m - 1];
            }
        } else if (q == 0) {
            window.record(text[tp], tp);
            ++tp;
        } else {
            q = pf[q - 1];
        }
    }
    return stats;
}

/// Naive scan core for parameterized matching: the naive loop with the same
/// compare_pt relation. The window state is rebuilt from scratch at every
/// alignment start; nothing carries over between alignments.
template <typename OnMatch>
ComparisonStats naive_p_scan(std::span<const Symbol> text, const PrevEncoding& prev,
                             OnMatch&& on_match) {
    const std::size_t n = text.size();
    const std::size_t m = prev.size();
    ComparisonStats stats;
    if (m == 0 || m > n) return stats;
    LastOccurrenceWindow window;
    for (std::size_t j = 0; j + m <= n; ++j) {
        window.reset(j);
        std::size_t i = 1;
        while (i <= m) {
            const std::size_t t = j + i - 1;
            if (!compare_pt(i, t, text, prev, window, stats)) break;
            window.record(text[t], t);
            ++i;
        }
        if (i > m) on_match(j);
    }
    return stats;
}

/// Automaton-based parameterized search. Preprocessing (prev-encoding and
/// p-failure table) happens inside the call. m > n yields an empty outcome;
/// alphabet mismatch throws std::invalid_argument.
SearchOutcome pkmp_search(const Text& text, const Pattern& pattern);

/// Naive parameterized search; always the same occurrence set as
/// pkmp_search.
SearchOutcome naive_p_search(const Text& text, const Pattern& pattern);

}  // namespace pmatch
