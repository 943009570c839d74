#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "pmatch/types.hpp"

namespace pmatch {

/// splitmix64 step; used for deriving independent seeds from a base seed.
std::uint64_t splitmix64(std::uint64_t x);

/// Folds a base seed with a list of coordinates (sigma, m, repetition
/// index, ...) into one well-mixed seed. Same inputs, same output, on any
/// platform.
std::uint64_t mix_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

/// mt19937_64 with an unbiased bounded draw. The bounded draw is masked
/// rejection sampling, implemented here rather than via
/// std::uniform_int_distribution so that streams are reproducible across
/// standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound); bound >= 1.
    std::uint64_t bounded(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

enum class PlantDistribution { uniform, skewed };

/// Where and how many pattern copies to plant. In skewed mode,
/// ceil(fraction * count) of the copies start inside the trailing
/// region * n indices of the text and the rest start before that region.
struct PlantSpec {
    std::size_t count = 0;
    PlantDistribution distribution = PlantDistribution::uniform;
    double fraction = 0.5;
    double region = 0.25;
    std::uint64_t seed = 0;
};

/// i.i.d. uniform text over [0, sigma). Requires n >= 1 and sigma >= 2.
Text gen_uniform_text(std::size_t n, std::uint32_t sigma, std::uint64_t seed);

/// i.i.d. uniform pattern over [0, sigma). Requires m >= 1 and sigma >= 2.
Pattern gen_pattern(std::size_t m, std::uint32_t sigma, std::uint64_t seed);

struct PlantResult {
    Text text;
    std::vector<std::size_t> positions;  // sorted, pairwise non-overlapping
};

/// Overwrites the text with `spec.count` non-overlapping copies of the
/// pattern at positions drawn by rejection sampling. Placement that cannot
/// be satisfied (count * m > n, a skew region shorter than the pattern, or
/// the retry cap of 10^4 * count attempts running out) throws
/// std::invalid_argument. count == 0 returns the text unchanged.
PlantResult plant(const Text& text, const Pattern& pattern, const PlantSpec& spec);

struct PeriodicInstance {
    Text text;
    Pattern pattern;
};

/// Worst case for the naive algorithm: text 0^n, pattern 0^(m-1) 1 over a
/// binary alphabet. Every alignment survives m-1 comparisons and fails on
/// the last, so the naive search spends exactly (n-m+1) * m comparisons and
/// finds nothing. Requires 2 <= m <= n.
PeriodicInstance gen_periodic(std::size_t n, std::size_t m);

}  // namespace pmatch
