#pragma once

#include <stdexcept>

namespace pmatch {

/// Malformed external input: corrupt binary files, bad FASTA, bad config.
/// Distinct from std::invalid_argument (caller passed nonsense) and
/// std::logic_error (internal invariant broke).
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pmatch
