#include "pmatch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pmatch/errors.hpp"
#include "pmatch/exact.hpp"
#include "pmatch/fasta.hpp"
#include "pmatch/param.hpp"

namespace pmatch::bench {

std::string_view algo_name(Algo algo) {
    switch (algo) {
        case Algo::exact_naive: return "exact-naive";
        case Algo::exact_kmp: return "exact-kmp";
        case Algo::pm_naive: return "pm-naive";
        case Algo::pm_auto: return "pm-auto";
    }
    return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
    if (name == "exact-naive") return Algo::exact_naive;
    if (name == "exact-kmp") return Algo::exact_kmp;
    if (name == "pm-naive") return Algo::pm_naive;
    if (name == "pm-auto") return Algo::pm_auto;
    return std::nullopt;
}

SearchOutcome run_algorithm(Algo algo, const Text& text, const Pattern& pattern) {
    switch (algo) {
        case Algo::exact_naive: return naive_exact_search(text, pattern);
        case Algo::exact_kmp: return kmp_search(text, pattern);
        case Algo::pm_naive: return naive_p_search(text, pattern);
        case Algo::pm_auto: return pkmp_search(text, pattern);
    }
    throw std::logic_error("run_algorithm: unknown algorithm");
}

namespace {

std::int64_t median_of(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    if (v.size() % 2 == 1) return v[h];
    return (v[h - 1] + v[h]) / 2;
}

double mean_of(const std::vector<std::int64_t>& v) {
    if (v.empty()) return 0.0;
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    return sum / static_cast<double>(v.size());
}

}  // namespace

TrialResult run_trial(Algo algo, const Text& text, const Pattern& pattern, int repeats,
                      int warmup) {
    if (repeats < 1) throw std::invalid_argument("run_trial: repeats must be at least 1");
    if (warmup < 0) throw std::invalid_argument("run_trial: warmup must be non-negative");

    for (int w = 0; w < warmup; ++w) {
        (void)run_algorithm(algo, text, pattern);
    }

    TrialResult result;
    for (int r = 0; r < repeats; ++r) {
        SearchOutcome outcome = run_algorithm(algo, text, pattern);
        if (r == 0) {
            result.occurrences = std::move(outcome.occurrences);
            result.symbol_comparisons = outcome.stats.symbol_comparisons;
            result.aux_lookups = outcome.stats.aux_lookups;
        } else if (outcome.occurrences != result.occurrences ||
                   outcome.stats.symbol_comparisons != result.symbol_comparisons) {
            throw std::logic_error("run_trial: nondeterministic results across repeats");
        }
        result.samples_ns.push_back(outcome.stats.elapsed_ns);
    }
    result.mean_ns = std::llround(mean_of(result.samples_ns));
    result.median_ns = median_of(result.samples_ns);
    result.min_ns = *std::min_element(result.samples_ns.begin(), result.samples_ns.end());
    return result;
}

namespace {

Mode mode_from_string(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "param") return Mode::param;
    throw format_error("config: unknown mode '" + s + "'");
}

Family family_from_string(const std::string& s) {
    if (s == "random") return Family::random;
    if (s == "periodic") return Family::periodic;
    if (s == "dna") return Family::dna;
    throw format_error("config: unknown family '" + s + "'");
}

PlantDistribution distribution_from_string(const std::string& s) {
    if (s == "uniform") return PlantDistribution::uniform;
    if (s == "skewed") return PlantDistribution::skewed;
    throw format_error("config: unknown distribution '" + s + "'");
}

std::string distribution_name(PlantDistribution d) {
    return d == PlantDistribution::uniform ? "uniform" : "skewed";
}

void validate_config(const BenchConfig& c) {
    if (c.repeats < 1) throw format_error("config: repeats must be at least 1");
    if (c.warmup < 0) throw format_error("config: warmup must be non-negative");
    if (c.n < 1) throw format_error("config: n must be at least 1");
    if (c.pattern_lengths.empty()) throw format_error("config: pattern_lengths is empty");
    for (const std::size_t m : c.pattern_lengths) {
        if (m < 1) throw format_error("config: pattern lengths must be at least 1");
    }
    if (c.family == Family::random) {
        if (c.sigmas.empty()) throw format_error("config: sigmas is empty");
        for (const std::uint32_t s : c.sigmas) {
            if (s < 2) throw format_error("config: sigma values must be at least 2");
        }
        if (c.distributions.empty()) throw format_error("config: distributions is empty");
    }
    if (c.family == Family::dna && c.fasta.empty()) {
        throw format_error("config: dna family needs a fasta path");
    }
    if (c.family == Family::dna && c.pattern_source != "substring" &&
        c.pattern_source != "generated") {
        throw format_error("config: pattern_source must be 'substring' or 'generated'");
    }
}

}  // namespace

BenchConfig config_from_json_text(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("config: ") + e.what());
    }
    BenchConfig c;
    try {
        c.mode = mode_from_string(j.value("mode", std::string("exact")));
        c.family = family_from_string(j.value("family", std::string("random")));
        c.sigmas = j.value("sigmas", std::vector<std::uint32_t>{});
        c.pattern_lengths = j.value("pattern_lengths", std::vector<std::size_t>{});
        c.n = j.value("n", std::size_t{1'000'000});
        c.plant_count = j.value("plant_count", std::size_t{100});
        c.skew_fraction = j.value("skew_fraction", 0.5);
        c.skew_region = j.value("skew_region", 0.25);
        c.distributions.clear();
        for (const auto& d :
             j.value("distributions", std::vector<std::string>{"uniform"})) {
            c.distributions.push_back(distribution_from_string(d));
        }
        c.repeats = j.value("repeats", 10);
        c.warmup = j.value("warmup", 1);
        c.seed = j.value("seed", std::uint64_t{1});
        c.fasta = j.value("fasta", std::string{});
        c.pattern_source = j.value("pattern_source", std::string("substring"));
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("config: ") + e.what());
    }
    validate_config(c);
    return c;
}

BenchConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(bytes);
}

namespace {

nlohmann::json config_to_json(const BenchConfig& c) {
    nlohmann::json j;
    j["mode"] = c.mode == Mode::exact ? "exact" : "param";
    j["family"] = c.family == Family::random   ? "random"
                  : c.family == Family::periodic ? "periodic"
                                                 : "dna";
    j["sigmas"] = c.sigmas;
    j["pattern_lengths"] = c.pattern_lengths;
    j["n"] = c.n;
    j["plant_count"] = c.plant_count;
    j["skew_fraction"] = c.skew_fraction;
    j["skew_region"] = c.skew_region;
    std::vector<std::string> dists;
    for (const auto d : c.distributions) dists.push_back(distribution_name(d));
    j["distributions"] = dists;
    j["repeats"] = c.repeats;
    j["warmup"] = c.warmup;
    j["seed"] = c.seed;
    if (!c.fasta.empty()) j["fasta"] = c.fasta;
    if (c.family == Family::dna) j["pattern_source"] = c.pattern_source;
    return j;
}

}  // namespace

std::string config_to_json_text(const BenchConfig& config) {
    return config_to_json(config).dump(2) + "\n";
}

namespace {

struct CellAggregate {
    std::vector<std::int64_t> naive_ns;
    std::vector<std::int64_t> auto_ns;
    double naive_cmp_sum = 0, auto_cmp_sum = 0;
    double naive_aux_sum = 0, auto_aux_sum = 0;
    int reps = 0;

    void add(const TrialResult& naive, const TrialResult& automaton) {
        naive_ns.insert(naive_ns.end(), naive.samples_ns.begin(), naive.samples_ns.end());
        auto_ns.insert(auto_ns.end(), automaton.samples_ns.begin(), automaton.samples_ns.end());
        naive_cmp_sum += static_cast<double>(naive.symbol_comparisons);
        auto_cmp_sum += static_cast<double>(automaton.symbol_comparisons);
        naive_aux_sum += static_cast<double>(naive.aux_lookups);
        auto_aux_sum += static_cast<double>(automaton.aux_lookups);
        ++reps;
    }

    BenchRecord finish(std::uint32_t sigma, std::size_t m, std::string distribution) const {
        BenchRecord rec;
        rec.sigma = sigma;
        rec.m = m;
        rec.distribution = std::move(distribution);
        rec.repeats = reps;
        rec.naive_mean_ns = mean_of(naive_ns);
        rec.auto_mean_ns = mean_of(auto_ns);
        rec.ratio = rec.auto_mean_ns > 0 ? rec.naive_mean_ns / rec.auto_mean_ns : 0.0;
        rec.naive_comparisons = naive_cmp_sum / reps;
        rec.auto_comparisons = auto_cmp_sum / reps;
        rec.naive_aux_lookups = naive_aux_sum / reps;
        rec.auto_aux_lookups = auto_aux_sum / reps;
        rec.naive_median_ns = median_of(naive_ns);
        rec.naive_min_ns = *std::min_element(naive_ns.begin(), naive_ns.end());
        rec.auto_median_ns = median_of(auto_ns);
        rec.auto_min_ns = *std::min_element(auto_ns.begin(), auto_ns.end());
        return rec;
    }
};

struct AlgoPair {
    Algo naive;
    Algo automaton;
};

AlgoPair algos_for(Mode mode) {
    if (mode == Mode::exact) return {Algo::exact_naive, Algo::exact_kmp};
    return {Algo::pm_naive, Algo::pm_auto};
}

void note_progress(std::ostream* progress, const std::string& line) {
    if (progress != nullptr) *progress << line << '\n' << std::flush;
}

void run_random_suite(const BenchConfig& c, SuiteResult& result, std::ostream* progress) {
    const AlgoPair pair = algos_for(c.mode);
    for (const std::uint32_t sigma : c.sigmas) {
        for (const std::size_t m : c.pattern_lengths) {
            // both distributions of a repetition share text and pattern
            const std::size_t ndist = c.distributions.size();
            std::vector<CellAggregate> cells(ndist);
            std::vector<std::string> failed(ndist);  // non-empty marks a dead cell
            for (int rep = 0; rep < c.repeats; ++rep) {
                const std::uint64_t inst =
                    mix_seed(c.seed, {sigma, static_cast<std::uint64_t>(m),
                                      static_cast<std::uint64_t>(rep)});
                const Text base = gen_uniform_text(c.n, sigma, mix_seed(inst, {1}));
                const Pattern pattern = gen_pattern(m, sigma, mix_seed(inst, {2}));
                for (std::size_t d = 0; d < ndist; ++d) {
                    if (!failed[d].empty()) continue;
                    PlantSpec spec;
                    spec.count = c.plant_count;
                    spec.distribution = c.distributions[d];
                    spec.fraction = c.skew_fraction;
                    spec.region = c.skew_region;
                    spec.seed = mix_seed(inst, {3, static_cast<std::uint64_t>(d)});
                    PlantResult planted{base, {}};
                    try {
                        planted = plant(base, pattern, spec);
                    } catch (const std::invalid_argument& e) {
                        failed[d] = e.what();
                        continue;
                    }
                    const TrialResult naive =
                        run_trial(pair.naive, planted.text, pattern, 1, c.warmup);
                    const TrialResult automaton =
                        run_trial(pair.automaton, planted.text, pattern, 1, c.warmup);
                    if (naive.occurrences != automaton.occurrences) {
                        failed[d] = "algorithms disagree on occurrences";
                        continue;
                    }
                    cells[d].add(naive, automaton);
                }
            }
            for (std::size_t d = 0; d < ndist; ++d) {
                const std::string dist = distribution_name(c.distributions[d]);
                if (!failed[d].empty()) {
                    result.notes.push_back("skipped sigma=" + std::to_string(sigma) +
                                           " m=" + std::to_string(m) + " " + dist + ": " +
                                           failed[d]);
                    continue;
                }
                result.records.push_back(cells[d].finish(sigma, m, dist));
                note_progress(progress, "cell sigma=" + std::to_string(sigma) +
                                            " m=" + std::to_string(m) + " " + dist + " done");
            }
        }
    }
}

void run_periodic_suite(const BenchConfig& c, SuiteResult& result, std::ostream* progress) {
    const AlgoPair pair = algos_for(c.mode);
    for (const std::size_t m : c.pattern_lengths) {
        if (m < 2 || m > c.n) {
            result.notes.push_back("skipped periodic m=" + std::to_string(m) +
                                   ": needs 2 <= m <= n");
            continue;
        }
        const PeriodicInstance inst = gen_periodic(c.n, m);
        const TrialResult naive = run_trial(pair.naive, inst.text, inst.pattern, c.repeats,
                                            c.warmup);
        const TrialResult automaton = run_trial(pair.automaton, inst.text, inst.pattern,
                                                c.repeats, c.warmup);
        if (naive.occurrences != automaton.occurrences) {
            result.notes.push_back("skipped periodic m=" + std::to_string(m) +
                                   ": algorithms disagree on occurrences");
            continue;
        }
        CellAggregate cell;
        cell.add(naive, automaton);
        result.records.push_back(cell.finish(2, m, "periodic"));
        note_progress(progress, "cell periodic m=" + std::to_string(m) + " done");
    }
}

void run_dna_suite(const BenchConfig& c, SuiteResult& result, std::ostream* progress) {
    const AlgoPair pair = algos_for(c.mode);
    std::ifstream in(c.fasta, std::ios::binary);
    if (!in) throw format_error("cannot open " + c.fasta);
    const std::string bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    const auto records = parse_fasta(bytes);
    std::vector<Text> windows;
    for (const auto& record : records) {
        const DnaSequence dna = encode_dna(record);
        auto more = extract_windows(dna, c.n, c.repeats > 0
                                                ? static_cast<std::size_t>(c.repeats)
                                                : std::size_t{1});
        for (auto& w : more) {
            if (windows.size() < static_cast<std::size_t>(c.repeats)) {
                windows.push_back(std::move(w));
            }
        }
        if (windows.size() >= static_cast<std::size_t>(c.repeats)) break;
    }
    if (windows.empty()) {
        throw format_error("dna: no clean window of length " + std::to_string(c.n) + " in " +
                           c.fasta);
    }

    for (const std::size_t m : c.pattern_lengths) {
        CellAggregate cell;
        bool cell_ok = true;
        std::string cell_note;
        for (int rep = 0; rep < c.repeats && cell_ok; ++rep) {
            const Text& window = windows[static_cast<std::size_t>(rep) % windows.size()];
            if (m > window.size()) {
                cell_ok = false;
                cell_note = "pattern longer than window";
                break;
            }
            const std::uint64_t inst =
                mix_seed(c.seed, {4, static_cast<std::uint64_t>(m),
                                  static_cast<std::uint64_t>(rep)});
            Pattern pattern = [&] {
                if (c.pattern_source == "generated") {
                    return gen_pattern(m, 4, mix_seed(inst, {2}));
                }
                SeededRng rng(mix_seed(inst, {2}));
                const auto off =
                    static_cast<std::size_t>(rng.bounded(window.size() - m + 1));
                const auto* base = window.view().data() + off;
                return Pattern(Alphabet(4), std::vector<Symbol>(base, base + m));
            }();
            PlantSpec spec;
            // a substring pattern already occurs once; plant the remainder
            spec.count = c.pattern_source == "generated"
                             ? c.plant_count
                             : (c.plant_count > 0 ? c.plant_count - 1 : 0);
            spec.distribution = PlantDistribution::uniform;
            spec.seed = mix_seed(inst, {3});
            PlantResult planted = [&]() -> PlantResult {
                try {
                    return plant(window, pattern, spec);
                } catch (const std::invalid_argument& e) {
                    cell_ok = false;
                    cell_note = e.what();
                    return PlantResult{window, {}};
                }
            }();
            if (!cell_ok) break;
            const TrialResult naive = run_trial(pair.naive, planted.text, pattern, 1, c.warmup);
            const TrialResult automaton =
                run_trial(pair.automaton, planted.text, pattern, 1, c.warmup);
            if (naive.occurrences != automaton.occurrences) {
                cell_ok = false;
                cell_note = "algorithms disagree on occurrences";
                break;
            }
            cell.add(naive, automaton);
        }
        if (!cell_ok) {
            result.notes.push_back("skipped dna m=" + std::to_string(m) + ": " + cell_note);
            continue;
        }
        result.records.push_back(cell.finish(4, m, "dna"));
        note_progress(progress, "cell dna m=" + std::to_string(m) + " done");
    }
}

}  // namespace

SuiteResult run_suite(const BenchConfig& config, std::ostream* progress) {
    validate_config(config);
    SuiteResult result;
    switch (config.family) {
        case Family::random: run_random_suite(config, result, progress); break;
        case Family::periodic: run_periodic_suite(config, result, progress); break;
        case Family::dna: run_dna_suite(config, result, progress); break;
    }
    return result;
}

namespace {

std::string format_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

}  // namespace

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format) {
    if (records.empty()) throw std::invalid_argument("emit_report: no records");

    std::string out;
    if (format == ReportFormat::csv) {
        out += "sigma,m,naive_mean_ns,auto_mean_ns,ratio,naive_comparisons,auto_comparisons,"
               "distribution\n";
        for (const auto& r : records) {
            out += std::to_string(r.sigma) + "," + std::to_string(r.m) + "," +
                   format_double(r.naive_mean_ns, 1) + "," + format_double(r.auto_mean_ns, 1) +
                   "," + format_double(r.ratio, 4) + "," + format_double(r.naive_comparisons, 1) +
                   "," + format_double(r.auto_comparisons, 1) + "," + r.distribution + "\n";
        }
        return out;
    }

    // markdown: one section per distribution, one table per sigma with its m rows
    std::vector<std::string> dist_order;
    for (const auto& r : records) {
        if (std::find(dist_order.begin(), dist_order.end(), r.distribution) == dist_order.end()) {
            dist_order.push_back(r.distribution);
        }
    }
    for (const auto& dist : dist_order) {
        out += "## distribution: " + dist + "\n";
        std::vector<std::uint32_t> sigma_order;
        for (const auto& r : records) {
            if (r.distribution == dist &&
                std::find(sigma_order.begin(), sigma_order.end(), r.sigma) == sigma_order.end()) {
                sigma_order.push_back(r.sigma);
            }
        }
        for (const std::uint32_t sigma : sigma_order) {
            out += "\n### sigma = " + std::to_string(sigma) + "\n\n";
            out += "| m | naive mean (ns) | automaton mean (ns) | ratio | naive comparisons | "
                   "automaton comparisons |\n";
            out += "|---|---|---|---|---|---|\n";
            for (const auto& r : records) {
                if (r.distribution != dist || r.sigma != sigma) continue;
                out += "| " + std::to_string(r.m) + " | " + format_double(r.naive_mean_ns, 1) +
                       " | " + format_double(r.auto_mean_ns, 1) + " | " +
                       format_double(r.ratio, 4) + " | " + format_double(r.naive_comparisons, 1) +
                       " | " + format_double(r.auto_comparisons, 1) + " |\n";
            }
        }
        out += "\n";
    }
    return out;
}

namespace {

nlohmann::json record_to_json(const BenchRecord& r) {
    nlohmann::json j;
    j["sigma"] = r.sigma;
    j["m"] = r.m;
    j["distribution"] = r.distribution;
    j["repeats"] = r.repeats;
    j["naive_mean_ns"] = r.naive_mean_ns;
    j["auto_mean_ns"] = r.auto_mean_ns;
    j["ratio"] = r.ratio;
    j["naive_comparisons"] = r.naive_comparisons;
    j["auto_comparisons"] = r.auto_comparisons;
    j["naive_aux_lookups"] = r.naive_aux_lookups;
    j["auto_aux_lookups"] = r.auto_aux_lookups;
    j["naive_median_ns"] = r.naive_median_ns;
    j["naive_min_ns"] = r.naive_min_ns;
    j["auto_median_ns"] = r.auto_median_ns;
    j["auto_min_ns"] = r.auto_min_ns;
    return j;
}

BenchRecord record_from_json(const nlohmann::json& j) {
    BenchRecord r;
    r.sigma = j.at("sigma").get<std::uint32_t>();
    r.m = j.at("m").get<std::size_t>();
    r.distribution = j.at("distribution").get<std::string>();
    r.repeats = j.value("repeats", 0);
    r.naive_mean_ns = j.at("naive_mean_ns").get<double>();
    r.auto_mean_ns = j.at("auto_mean_ns").get<double>();
    r.ratio = j.at("ratio").get<double>();
    r.naive_comparisons = j.at("naive_comparisons").get<double>();
    r.auto_comparisons = j.at("auto_comparisons").get<double>();
    r.naive_aux_lookups = j.value("naive_aux_lookups", 0.0);
    r.auto_aux_lookups = j.value("auto_aux_lookups", 0.0);
    r.naive_median_ns = j.value("naive_median_ns", std::int64_t{0});
    r.naive_min_ns = j.value("naive_min_ns", std::int64_t{0});
    r.auto_median_ns = j.value("auto_median_ns", std::int64_t{0});
    r.auto_min_ns = j.value("auto_min_ns", std::int64_t{0});
    return r;
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const BenchConfig& config,
                    const SuiteResult& result) {
    nlohmann::json j;
    j["schema"] = "pmatch-bench-manifest";
    j["version"] = 1;
    j["config"] = config_to_json(config);
    j["records"] = nlohmann::json::array();
    for (const auto& r : result.records) j["records"].push_back(record_to_json(r));
    j["notes"] = result.notes;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw format_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw format_error("write failed on " + path.string());
}

SuiteResult read_manifest_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
        SuiteResult result;
        for (const auto& rj : j.at("records")) result.records.push_back(record_from_json(rj));
        result.notes = j.value("notes", std::vector<std::string>{});
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw format_error(path.string() + ": " + e.what());
    }
}

}  // namespace pmatch::bench
