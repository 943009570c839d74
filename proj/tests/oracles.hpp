#pragma once

// Reference implementations, kept deliberately dumb and written straight
// from the definitions. The fast library code is tested against these; none
// of them share machinery with the library.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace oracle {

using Sym = std::uint32_t;

// every alignment, left to right, full rescan
inline std::vector<std::size_t> exact_occurrences(std::span<const Sym> text,
                                                  std::span<const Sym> pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    for (std::size_t j = 0; j + pattern.size() <= text.size(); ++j) {
        bool all = true;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            if (text[j + i] != pattern[i]) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(j);
    }
    return out;
}

// one-to-one renaming check: grow forward and backward maps, reject on conflict
inline bool bijection_match(std::span<const Sym> a, std::span<const Sym> b) {
    if (a.size() != b.size()) return false;
    std::unordered_map<Sym, Sym> fwd;
    std::unordered_map<Sym, Sym> bwd;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto f = fwd.find(a[i]);
        if (f == fwd.end()) {
            fwd.emplace(a[i], b[i]);
        } else if (f->second != b[i]) {
            return false;
        }
        const auto g = bwd.find(b[i]);
        if (g == bwd.end()) {
            bwd.emplace(b[i], a[i]);
        } else if (g->second != a[i]) {
            return false;
        }
    }
    return true;
}

// slide a window and apply the bijection check at every alignment
inline std::vector<std::size_t> p_occurrences(std::span<const Sym> text,
                                              std::span<const Sym> pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    for (std::size_t j = 0; j + pattern.size() <= text.size(); ++j) {
        if (bijection_match(text.subspan(j, pattern.size()), pattern)) out.push_back(j);
    }
    return out;
}

// longest proper prefix of P[0..L) that is also its suffix, by definition
inline std::vector<std::uint32_t> failure_table(std::span<const Sym> pattern) {
    const std::size_t m = pattern.size();
    std::vector<std::uint32_t> f(m, 0);
    for (std::size_t len = 1; len <= m; ++len) {
        for (std::size_t l = len - 1; l >= 1; --l) {
            bool eq = true;
            for (std::size_t i = 0; i < l; ++i) {
                if (pattern[i] != pattern[len - l + i]) {
                    eq = false;
                    break;
                }
            }
            if (eq) {
                f[len - 1] = static_cast<std::uint32_t>(l);
                break;
            }
        }
    }
    return f;
}

// longest proper prefix that p-matches the suffix, decided by the
// bijection check (not by prev-encodings)
inline std::vector<std::uint32_t> p_failure_table(std::span<const Sym> pattern) {
    const std::size_t m = pattern.size();
    std::vector<std::uint32_t> pf(m, 0);
    for (std::size_t len = 1; len <= m; ++len) {
        for (std::size_t l = len - 1; l >= 1; --l) {
            if (bijection_match(pattern.first(l), pattern.subspan(len - l, l))) {
                pf[len - 1] = static_cast<std::uint32_t>(l);
                break;
            }
        }
    }
    return pf;
}

// prev-occurrence links by quadratic backward scan; 1-based values,
// self-link for first occurrences
inline std::vector<std::uint32_t> prev_links(std::span<const Sym> pattern) {
    const std::size_t m = pattern.size();
    std::vector<std::uint32_t> a(m);
    for (std::size_t i = 1; i <= m; ++i) {
        a[i - 1] = static_cast<std::uint32_t>(i);
        for (std::size_t k = i - 1; k >= 1; --k) {
            if (pattern[k - 1] == pattern[i - 1]) {
                a[i - 1] = static_cast<std::uint32_t>(k);
                break;
            }
        }
    }
    return a;
}

}  // namespace oracle
