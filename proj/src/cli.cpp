#include "pmatch/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pmatch/bench.hpp"
#include "pmatch/errors.hpp"
#include "pmatch/fasta.hpp"
#include "pmatch/io.hpp"
#include "pmatch/textgen.hpp"

namespace pmatch::cli {

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw format_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw format_error("write failed on " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

struct GenRandomArgs {
    std::size_t n = 1'000'000;
    std::uint32_t sigma = 2;
    std::size_t m = 32;
    std::size_t plants = 100;
    std::string dist = "uniform";
    double skew_fraction = 0.5;
    double skew_region = 0.25;
    std::uint64_t seed = 1;
    std::string out_prefix;
};

void do_gen_random(const GenRandomArgs& a, std::ostream& out) {
    const Text base = gen_uniform_text(a.n, a.sigma, mix_seed(a.seed, {1}));
    const Pattern pattern = gen_pattern(a.m, a.sigma, mix_seed(a.seed, {2}));
    PlantSpec spec;
    spec.count = a.plants;
    spec.distribution =
        a.dist == "skewed" ? PlantDistribution::skewed : PlantDistribution::uniform;
    spec.fraction = a.skew_fraction;
    spec.region = a.skew_region;
    spec.seed = mix_seed(a.seed, {3});
    const PlantResult planted = plant(base, pattern, spec);

    const std::string text_file = a.out_prefix + ".text.pmtx";
    const std::string pattern_file = a.out_prefix + ".pattern.pmtx";
    const std::string meta_file = a.out_prefix + ".meta.json";
    write_pmtx(text_file, planted.text);
    write_pmtx(pattern_file, pattern);

    InstanceMeta meta;
    meta.family = "random";
    meta.distribution = a.dist;
    meta.sigma = a.sigma;
    meta.n = a.n;
    meta.m = a.m;
    meta.seed = a.seed;
    meta.planted = planted.positions;
    meta.text_file = text_file;
    meta.pattern_file = pattern_file;
    write_instance_meta(meta_file, meta);

    out << text_file << "\n" << pattern_file << "\n" << meta_file << "\n";
}

struct GenPeriodicArgs {
    std::size_t n = 1'000'000;
    std::size_t m = 256;
    std::string out_prefix;
};

void do_gen_periodic(const GenPeriodicArgs& a, std::ostream& out) {
    const PeriodicInstance inst = gen_periodic(a.n, a.m);
    const std::string text_file = a.out_prefix + ".text.pmtx";
    const std::string pattern_file = a.out_prefix + ".pattern.pmtx";
    const std::string meta_file = a.out_prefix + ".meta.json";
    write_pmtx(text_file, inst.text);
    write_pmtx(pattern_file, inst.pattern);

    InstanceMeta meta;
    meta.family = "periodic";
    meta.sigma = 2;
    meta.n = a.n;
    meta.m = a.m;
    meta.text_file = text_file;
    meta.pattern_file = pattern_file;
    write_instance_meta(meta_file, meta);

    out << text_file << "\n" << pattern_file << "\n" << meta_file << "\n";
}

struct IngestArgs {
    std::string in_file;
    std::size_t window = 1'000'000;
    std::size_t count = 60;
    std::string out_prefix;
};

void do_ingest_fasta(const IngestArgs& a, std::ostream& out) {
    const auto records = parse_fasta(read_text_file(a.in_file));
    nlohmann::json windows_meta = nlohmann::json::array();
    std::size_t written = 0;
    for (std::size_t r = 0; r < records.size() && written < a.count; ++r) {
        const DnaSequence dna = encode_dna(records[r]);
        const auto windows = extract_windows(dna, a.window, a.count - written);
        for (const Text& w : windows) {
            char suffix[32];
            std::snprintf(suffix, sizeof(suffix), ".w%03zu.pmtx", written);
            const std::string file = a.out_prefix + suffix;
            write_pmtx(file, w);
            windows_meta.push_back({{"file", file},
                                    {"record", r},
                                    {"header", records[r].header}});
            ++written;
            out << file << "\n";
        }
    }
    nlohmann::json j;
    j["schema"] = "pmatch-ingest";
    j["version"] = 1;
    j["source"] = a.in_file;
    j["window_len"] = a.window;
    j["window_count"] = written;
    j["windows"] = windows_meta;
    const std::string meta_file = a.out_prefix + ".meta.json";
    write_text_file(meta_file, j.dump(2) + "\n");
    out << meta_file << "\n";
}

struct SearchArgs {
    std::string algo = "exact-kmp";
    std::string text_file;
    std::string pattern_file;
    std::string stats_file;
};

void do_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    const auto algo = bench::parse_algo(a.algo);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
    const Text text = read_pmtx_text(a.text_file);
    const Pattern pattern = read_pmtx_pattern(a.pattern_file);
    const SearchOutcome outcome = bench::run_algorithm(*algo, text, pattern);
    for (const std::size_t pos : outcome.occurrences) out << pos << "\n";

    std::string stats;
    stats += "algorithm=" + a.algo + "\n";
    stats += "occurrences=" + std::to_string(outcome.occurrences.size()) + "\n";
    stats += "symbol_comparisons=" + std::to_string(outcome.stats.symbol_comparisons) + "\n";
    stats += "aux_lookups=" + std::to_string(outcome.stats.aux_lookups) + "\n";
    stats += "elapsed_ns=" + std::to_string(outcome.stats.elapsed_ns) + "\n";
    if (a.stats_file.empty()) {
        err << stats;
    } else {
        write_text_file(a.stats_file, stats);
    }
}

struct BenchArgs {
    std::string config_file;
    std::uint64_t scale = 1;
    std::string csv_file;
    std::string md_file;
    std::string manifest_file;
    bool progress = false;
};

void do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    bench::BenchConfig config = bench::load_config(a.config_file);
    if (a.scale > 1) {
        config.n = std::max<std::size_t>(1, config.n / a.scale);
    }
    const bench::SuiteResult result = bench::run_suite(config, a.progress ? &err : nullptr);
    for (const auto& note : result.notes) err << "note: " << note << "\n";

    const bool any_file = !a.csv_file.empty() || !a.md_file.empty() || !a.manifest_file.empty();
    if (!a.csv_file.empty()) {
        write_text_file(a.csv_file, bench::emit_report(result.records, bench::ReportFormat::csv));
    }
    if (!a.md_file.empty()) {
        write_text_file(a.md_file,
                        bench::emit_report(result.records, bench::ReportFormat::markdown));
    }
    if (!a.manifest_file.empty()) {
        bench::write_manifest(a.manifest_file, config, result);
    }
    if (!any_file) {
        out << bench::emit_report(result.records, bench::ReportFormat::csv);
    }
}

struct ReportArgs {
    std::string manifest_file;
    std::string format = "csv";
    std::string out_file;
};

void do_report(const ReportArgs& a, std::ostream& out) {
    const bench::SuiteResult result = bench::read_manifest_records(a.manifest_file);
    const auto format =
        a.format == "markdown" ? bench::ReportFormat::markdown : bench::ReportFormat::csv;
    const std::string report = bench::emit_report(result.records, format);
    if (a.out_file.empty()) {
        out << report;
    } else {
        write_text_file(a.out_file, report);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and parameterized string matching: generators, search, benchmarks"};
    app.name("pmatch");
    app.require_subcommand(1);

    GenRandomArgs gen_random_args;
    GenPeriodicArgs gen_periodic_args;
    IngestArgs ingest_args;
    SearchArgs search_args;
    BenchArgs bench_args;
    ReportArgs report_args;

    auto* gen = app.add_subcommand("gen", "generate texts and patterns");
    gen->require_subcommand(1);

    auto* gen_random = gen->add_subcommand("random", "uniform random text with planted pattern");
    gen_random->add_option("--n", gen_random_args.n, "text length")->capture_default_str();
    gen_random->add_option("--sigma", gen_random_args.sigma, "alphabet size")
        ->capture_default_str();
    gen_random->add_option("--m", gen_random_args.m, "pattern length")->capture_default_str();
    gen_random->add_option("--plants", gen_random_args.plants, "occurrences to plant")
        ->capture_default_str();
    gen_random->add_option("--dist", gen_random_args.dist, "plant distribution")
        ->check(CLI::IsMember({"uniform", "skewed"}))
        ->capture_default_str();
    gen_random->add_option("--skew-fraction", gen_random_args.skew_fraction,
                           "fraction of plants in the trailing region")
        ->capture_default_str();
    gen_random->add_option("--skew-region", gen_random_args.skew_region,
                           "trailing fraction of the text receiving skewed plants")
        ->capture_default_str();
    gen_random->add_option("--seed", gen_random_args.seed, "base seed")->capture_default_str();
    gen_random->add_option("--out", gen_random_args.out_prefix, "output path prefix")
        ->required();
    gen_random->callback([&] { do_gen_random(gen_random_args, out); });

    auto* gen_periodic =
        gen->add_subcommand("periodic", "worst-case periodic text and pattern");
    gen_periodic->add_option("--n", gen_periodic_args.n, "text length")->capture_default_str();
    gen_periodic->add_option("--m", gen_periodic_args.m, "pattern length")
        ->capture_default_str();
    gen_periodic->add_option("--out", gen_periodic_args.out_prefix, "output path prefix")
        ->required();
    gen_periodic->callback([&] { do_gen_periodic(gen_periodic_args, out); });

    auto* ingest = app.add_subcommand("ingest", "import external corpora");
    ingest->require_subcommand(1);
    auto* ingest_fasta = ingest->add_subcommand("fasta", "slice a FASTA file into windows");
    ingest_fasta->add_option("--in", ingest_args.in_file, "FASTA file")->required();
    ingest_fasta->add_option("--window", ingest_args.window, "window length")
        ->capture_default_str();
    ingest_fasta->add_option("--count", ingest_args.count, "maximum windows")
        ->capture_default_str();
    ingest_fasta->add_option("--out", ingest_args.out_prefix, "output path prefix")->required();
    ingest_fasta->callback([&] { do_ingest_fasta(ingest_args, out); });

    auto* search = app.add_subcommand("search", "run one algorithm on stored sequences");
    search->add_option("--algo", search_args.algo, "exact-naive|exact-kmp|pm-naive|pm-auto")
        ->check(CLI::IsMember({"exact-naive", "exact-kmp", "pm-naive", "pm-auto"}))
        ->capture_default_str();
    search->add_option("--text", search_args.text_file, "text file (pmtx)")->required();
    search->add_option("--pattern", search_args.pattern_file, "pattern file (pmtx)")->required();
    search->add_option("--stats", search_args.stats_file,
                       "write counters here instead of stderr");
    search->callback([&] { do_search(search_args, out, err); });

    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark grid from a config file");
    bench_cmd->add_option("--config", bench_args.config_file, "JSON config")->required();
    bench_cmd->add_option("--scale", bench_args.scale,
                          "divide the configured n by this factor")
        ->capture_default_str();
    bench_cmd->add_option("--csv", bench_args.csv_file, "write CSV report here");
    bench_cmd->add_option("--md", bench_args.md_file, "write markdown report here");
    bench_cmd->add_option("--manifest", bench_args.manifest_file,
                          "write machine-readable manifest here");
    bench_cmd->add_flag("--progress", bench_args.progress, "report cell completions on stderr");
    bench_cmd->callback([&] { do_bench(bench_args, out, err); });

    auto* report = app.add_subcommand("report", "re-render a manifest as CSV or markdown");
    report->add_option("--manifest", report_args.manifest_file, "manifest JSON")->required();
    report->add_option("--format", report_args.format, "csv|markdown")
        ->check(CLI::IsMember({"csv", "markdown"}))
        ->capture_default_str();
    report->add_option("--out", report_args.out_file, "write here instead of stdout");
    report->callback([&] { do_report(report_args, out); });

    std::vector<const char*> argv;
    argv.push_back("pmatch");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pmatch::cli
