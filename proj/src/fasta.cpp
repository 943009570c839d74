#include "pmatch/fasta.hpp"

#include <cctype>
#include <stdexcept>

#include "pmatch/errors.hpp"

namespace pmatch {

std::vector<FastaRecord> parse_fasta(std::string_view bytes) {
    if (bytes.empty()) throw format_error("FASTA: empty input");

    std::vector<FastaRecord> records;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        if (eol == std::string_view::npos) eol = bytes.size();
        std::string_view line = bytes.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;

        if (!line.empty() && line.front() == '>') {
            records.push_back(FastaRecord{std::string(line.substr(1)), {}});
            continue;
        }
        for (const char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (records.empty()) {
                throw format_error("FASTA: sequence data before the first '>' header");
            }
            records.back().sequence.push_back(
                static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    if (records.empty()) throw format_error("FASTA: no records found");
    return records;
}

DnaSequence encode_dna(const FastaRecord& record) {
    const std::size_t len = record.sequence.size();
    std::vector<Symbol> codes(len, 0);
    std::vector<std::uint8_t> valid(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        switch (std::toupper(static_cast<unsigned char>(record.sequence[i]))) {
            case 'A': codes[i] = 0; valid[i] = 1; break;
            case 'C': codes[i] = 1; valid[i] = 1; break;
            case 'G': codes[i] = 2; valid[i] = 1; break;
            case 'T': codes[i] = 3; valid[i] = 1; break;
            default: break;  // ambiguity codes stay invalid
        }
    }
    return DnaSequence(std::move(codes), std::move(valid));
}

char dna_base_char(Symbol code) {
    static constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
    if (code >= 4) throw std::invalid_argument("dna_base_char: code out of range");
    return kBases[code];
}

std::vector<Text> extract_windows(const DnaSequence& dna, std::size_t window_len,
                                  std::size_t count, std::size_t stride) {
    if (window_len < 1) throw std::invalid_argument("extract_windows: window_len must be >= 1");
    if (stride == 0) stride = window_len;

    std::vector<Text> windows;
    const Alphabet dna_alphabet(4);
    const std::size_t len = dna.size();
    std::size_t next_bad = 0;  // first invalid position >= current start, found lazily
    std::size_t start = 0;
    while (count > 0 && windows.size() < count && start + window_len <= len) {
        if (next_bad < start) next_bad = start;
        while (next_bad < start + window_len && dna.valid(next_bad)) ++next_bad;
        if (next_bad < start + window_len) {
            start = next_bad + 1;  // window is dirty; restart past the bad base
            ++next_bad;
            continue;
        }
        const auto* base = dna.codes().data() + start;
        windows.emplace_back(dna_alphabet, std::vector<Symbol>(base, base + window_len));
        start += stride;
    }
    return windows;
}

}  // namespace pmatch
