#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pmatch/types.hpp"

namespace pmatch {

struct FastaRecord {
    std::string header;    // text after '>', without the newline
    std::string sequence;  // concatenated sequence lines, uppercased, no whitespace
};

/// Parses FASTA text. Throws format_error on empty input, on sequence data
/// before the first header, or when no records are present.
std::vector<FastaRecord> parse_fasta(std::string_view bytes);

/// A DNA sequence coded A,C,G,T -> 0..3. Positions holding any other base
/// letter (N and friends) get code 0 and valid() false, and are excluded
/// from window extraction.
class DnaSequence {
public:
    DnaSequence(std::vector<Symbol> codes, std::vector<std::uint8_t> valid)
        : codes_(std::move(codes)), valid_(std::move(valid)) {}

    std::size_t size() const noexcept { return codes_.size(); }
    Symbol code(std::size_t i) const noexcept { return codes_[i]; }
    bool valid(std::size_t i) const noexcept { return valid_[i] != 0; }
    const std::vector<Symbol>& codes() const noexcept { return codes_; }

private:
    std::vector<Symbol> codes_;
    std::vector<std::uint8_t> valid_;
};

DnaSequence encode_dna(const FastaRecord& record);

/// 'A','C','G','T' for codes 0..3.
char dna_base_char(Symbol code);

/// Cuts up to `count` windows of length `window_len` out of the valid parts
/// of the sequence, scanning left to right. A window containing an invalid
/// position is skipped by restarting just past it; otherwise the scan
/// advances by `stride` (0 means window_len, i.e. non-overlapping windows).
/// Returned texts are over the 4-letter alphabet and contain no invalid
/// positions. Requires window_len >= 1 and stride conditions per above.
std::vector<Text> extract_windows(const DnaSequence& dna, std::size_t window_len,
                                  std::size_t count, std::size_t stride = 0);

}  // namespace pmatch
