#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/stats.hpp"
#include "pmatch/textgen.hpp"
#include "pmatch/types.hpp"

namespace pmatch::bench {

enum class Algo { exact_naive, exact_kmp, pm_naive, pm_auto };

std::string_view algo_name(Algo algo);
std::optional<Algo> parse_algo(std::string_view name);

/// Runs one algorithm once. Dispatch point shared by the CLI and the
/// harness.
SearchOutcome run_algorithm(Algo algo, const Text& text, const Pattern& pattern);

/// One algorithm, one input, `warmup` untimed runs then `repeats` timed
/// runs, strictly serial, on a monotonic clock. Verifies that every repeat
/// returns the identical occurrence set and comparison counts (they are
/// deterministic; divergence is an internal error).
struct TrialResult {
    std::vector<std::int64_t> samples_ns;
    std::int64_t mean_ns = 0;
    std::int64_t median_ns = 0;
    std::int64_t min_ns = 0;
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t aux_lookups = 0;
    std::vector<std::size_t> occurrences;
};

TrialResult run_trial(Algo algo, const Text& text, const Pattern& pattern, int repeats,
                      int warmup);

enum class Mode { exact, param };
enum class Family { random, periodic, dna };

/// Grid description for a suite run. In the random family each cell
/// (sigma, m, distribution) gets `repeats` independently seeded instances:
/// fresh text, fresh pattern, `plant_count` planted occurrences. The two
/// distributions of a cell share text and pattern per repetition and differ
/// only in plant placement. The periodic family ignores sigmas and plants
/// and benchmarks the deterministic worst-case instance per m. The dna
/// family slices windows of length n out of a FASTA file, samples the
/// pattern from the window (or generates one), and plants the rest.
struct BenchConfig {
    Mode mode = Mode::exact;
    Family family = Family::random;
    std::vector<std::uint32_t> sigmas;
    std::vector<std::size_t> pattern_lengths;
    std::size_t n = 1'000'000;
    std::size_t plant_count = 100;
    double skew_fraction = 0.5;
    double skew_region = 0.25;
    std::vector<PlantDistribution> distributions = {PlantDistribution::uniform};
    int repeats = 10;
    int warmup = 1;
    std::uint64_t seed = 1;
    std::string fasta;                         // dna family only
    std::string pattern_source = "substring";  // dna family: "substring" | "generated"
};

BenchConfig load_config(const std::filesystem::path& path);
BenchConfig config_from_json_text(std::string_view json_text);
std::string config_to_json_text(const BenchConfig& config);

/// One (sigma, m, distribution) cell, aggregated over its repetitions.
/// naive_* columns describe the naive algorithm of the configured mode,
/// auto_* the automaton one; ratio is mean naive time over mean automaton
/// time.
struct BenchRecord {
    std::uint32_t sigma = 0;
    std::size_t m = 0;
    std::string distribution;  // "uniform" | "skewed" | "periodic" | "dna"
    int repeats = 0;
    double naive_mean_ns = 0;
    double auto_mean_ns = 0;
    double ratio = 0;
    double naive_comparisons = 0;  // mean over repetitions
    double auto_comparisons = 0;
    double naive_aux_lookups = 0;
    double auto_aux_lookups = 0;
    std::int64_t naive_median_ns = 0;
    std::int64_t naive_min_ns = 0;
    std::int64_t auto_median_ns = 0;
    std::int64_t auto_min_ns = 0;
};

struct SuiteResult {
    std::vector<BenchRecord> records;
    std::vector<std::string> notes;  // skipped cells and similar
};

/// Runs the whole grid. Infeasible cells are reported in notes and skipped.
/// A cell where the two algorithms disagree on occurrences is abandoned and
/// noted; that should never happen. `progress`, when given, receives one
/// line per finished cell.
SuiteResult run_suite(const BenchConfig& config, std::ostream* progress = nullptr);

enum class ReportFormat { csv, markdown };

/// CSV columns: sigma, m, naive_mean_ns, auto_mean_ns, ratio,
/// naive_comparisons, auto_comparisons, distribution. Markdown groups the
/// m-rows of each sigma into one table per distribution. Ratio is printed
/// with four decimals. Empty input throws std::invalid_argument.
std::string emit_report(std::span<const BenchRecord> records, ReportFormat format);

/// Full machine-readable result of a run: config echo, records, notes.
void write_manifest(const std::filesystem::path& path, const BenchConfig& config,
                    const SuiteResult& result);
SuiteResult read_manifest_records(const std::filesystem::path& path);

}  // namespace pmatch::bench
