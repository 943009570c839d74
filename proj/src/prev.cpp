#include "pmatch/prev.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace pmatch {

PrevEncoding prev_encode(std::span<const Symbol> sequence) {
    const std::size_t m = sequence.size();
    if (m > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("prev_encode: sequence too long");
    }
    std::vector<std::uint32_t> links(m);
    std::map<Symbol, std::uint32_t> last;  // symbol -> last 1-based position
    for (std::size_t idx = 0; idx < m; ++idx) {
        const auto i = static_cast<std::uint32_t>(idx + 1);
        const auto it = last.find(sequence[idx]);
        links[idx] = (it == last.end()) ? i : it->second;
        last[sequence[idx]] = i;
    }
    return PrevEncoding(std::move(links));
}

PrevEncoding prev_encode(const Pattern& pattern) {
    return prev_encode(pattern.view());
}

bool p_equivalent(std::span<const Symbol> s1, std::span<const Symbol> s2) {
    if (s1.size() != s2.size()) {
        throw std::invalid_argument("p_equivalent: length mismatch (" +
                                    std::to_string(s1.size()) + " vs " +
                                    std::to_string(s2.size()) + ")");
    }
    return prev_encode(s1) == prev_encode(s2);
}

bool p_equivalent(const Text& s1, const Text& s2) {
    return p_equivalent(s1.view(), s2.view());
}

bool bijection_oracle(std::span<const Symbol> s1, std::span<const Symbol> s2) {
    if (s1.size() != s2.size()) {
        throw std::invalid_argument("bijection_oracle: length mismatch (" +
                                    std::to_string(s1.size()) + " vs " +
                                    std::to_string(s2.size()) + ")");
    }
    std::unordered_map<Symbol, Symbol> fwd;
    std::unordered_map<Symbol, Symbol> bwd;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        const Symbol a = s1[i];
        const Symbol b = s2[i];
        const auto [fit, finserted] = fwd.try_emplace(a, b);
        if (!finserted && fit->second != b) return false;
        const auto [bit, binserted] = bwd.try_emplace(b, a);
        if (!binserted && bit->second != a) return false;
    }
    return true;
}

bool bijection_oracle(const Text& s1, const Text& s2) {
    return bijection_oracle(s1.view(), s2.view());
}

}  // namespace pmatch
