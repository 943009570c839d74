#include "pmatch/textgen.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace pmatch {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = splitmix64(base ^ 0x9e3779b97f4a7c15ull);
    for (const std::uint64_t p : parts) {
        s = splitmix64(s ^ p);
    }
    return s;
}

std::uint64_t SeededRng::bounded(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded: bound must be at least 1");
    if (bound == 1) return 0;
    const int bits = std::bit_width(bound - 1);
    const std::uint64_t mask =
        (bits >= 64) ? ~0ull : ((std::uint64_t{1} << bits) - 1);
    for (;;) {
        const std::uint64_t v = engine_() & mask;
        if (v < bound) return v;
    }
}

Text gen_uniform_text(std::size_t n, std::uint32_t sigma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_uniform_text: n must be at least 1");
    if (sigma < 2) throw std::invalid_argument("gen_uniform_text: sigma must be at least 2");
    const Alphabet alphabet(sigma);
    SeededRng rng(seed);
    std::vector<Symbol> symbols(n);
    for (auto& s : symbols) s = static_cast<Symbol>(rng.bounded(sigma));
    return Text(alphabet, std::move(symbols));
}

Pattern gen_pattern(std::size_t m, std::uint32_t sigma, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("gen_pattern: m must be at least 1");
    if (sigma < 2) throw std::invalid_argument("gen_pattern: sigma must be at least 2");
    const Alphabet alphabet(sigma);
    SeededRng rng(seed);
    std::vector<Symbol> symbols(m);
    for (auto& s : symbols) s = static_cast<Symbol>(rng.bounded(sigma));
    return Pattern(alphabet, std::move(symbols));
}

namespace {

// Draws `want` non-overlapping start positions from [lo, hi] (inclusive),
// rejecting overlaps against everything in `taken`. Throws when the shared
// attempt budget runs out.
void draw_positions(SeededRng& rng, std::size_t want, std::size_t lo, std::size_t hi,
                    std::size_t m, std::set<std::size_t>& taken, std::size_t& attempts_left) {
    auto overlaps = [&](std::size_t pos) {
        const auto it = taken.lower_bound(pos);
        if (it != taken.end() && *it < pos + m) return true;
        if (it != taken.begin() && pos < *std::prev(it) + m) return true;
        return false;
    };
    std::size_t placed = 0;
    while (placed < want) {
        if (attempts_left == 0) {
            throw std::invalid_argument(
                "plant: retry budget exhausted; placement too dense to satisfy");
        }
        --attempts_left;
        const std::size_t pos = lo + static_cast<std::size_t>(rng.bounded(hi - lo + 1));
        if (overlaps(pos)) continue;
        taken.insert(pos);
        ++placed;
    }
}

}  // namespace

PlantResult plant(const Text& text, const Pattern& pattern, const PlantSpec& spec) {
    require_same_alphabet(text, pattern);
    if (spec.count == 0) return PlantResult{text, {}};

    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    if (m > n || spec.count > (n / m)) {
        throw std::invalid_argument("plant: " + std::to_string(spec.count) + " copies of length " +
                                    std::to_string(m) + " cannot fit in " + std::to_string(n) +
                                    " symbols");
    }

    SeededRng rng(spec.seed);
    std::set<std::size_t> taken;
    std::size_t attempts_left = 10'000 * spec.count;
    const std::size_t last_start = n - m;

    if (spec.distribution == PlantDistribution::uniform) {
        draw_positions(rng, spec.count, 0, last_start, m, taken, attempts_left);
    } else {
        if (!(spec.fraction > 0.0) || spec.fraction > 1.0 || !(spec.region > 0.0) ||
            spec.region > 1.0) {
            throw std::invalid_argument("plant: skew fraction and region must be in (0, 1]");
        }
        const auto region_len = static_cast<std::size_t>(spec.region * static_cast<double>(n));
        const std::size_t region_start = n - region_len;
        if (region_start > last_start) {
            throw std::invalid_argument("plant: skew region is shorter than the pattern");
        }
        const auto tail_count = static_cast<std::size_t>(
            std::ceil(spec.fraction * static_cast<double>(spec.count)));
        const std::size_t rest_count = spec.count - tail_count;
        draw_positions(rng, tail_count, region_start, last_start, m, taken, attempts_left);
        if (rest_count > 0) {
            if (region_start == 0) {
                throw std::invalid_argument("plant: no room before the skew region");
            }
            draw_positions(rng, rest_count, 0, region_start - 1, m, taken, attempts_left);
        }
    }

    std::vector<Symbol> symbols = text.symbols();
    std::vector<std::size_t> positions(taken.begin(), taken.end());
    for (const std::size_t pos : positions) {
        for (std::size_t i = 0; i < m; ++i) symbols[pos + i] = pattern[i];
    }
    return PlantResult{Text(text.alphabet(), std::move(symbols)), std::move(positions)};
}

PeriodicInstance gen_periodic(std::size_t n, std::size_t m) {
    if (m < 2 || m > n) {
        throw std::invalid_argument("gen_periodic: need 2 <= m <= n, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
    }
    const Alphabet binary(2);
    std::vector<Symbol> text(n, 0);
    std::vector<Symbol> pattern(m, 0);
    pattern[m - 1] = 1;
    return PeriodicInstance{Text(binary, std::move(text)), Pattern(binary, std::move(pattern))};
}

}  // namespace pmatch
