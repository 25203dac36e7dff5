#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "psf/numerics.hpp"

namespace psf::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInputError = 1, kFalsified = 2 };

/// Runs one command line (args[0] is the program name). Records go to `out`
/// or to --out; diagnostics, and the run manifest when there is no --out or
/// --manifest, go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re", "re+imi", "re-imi", "imi" (also "i", "-i").
Scalar parse_complex(std::string_view text);

/// One complex vector per line, entries separated by commas; blank lines and
/// lines starting with '#' are skipped. ParseError carries the line number.
std::vector<Vec> parse_vector_text(std::string_view text);

/// "random:count:sparsity[:seed]"; sparsity 0 means dense, otherwise the
/// number of nonzero entries. `default_seed` is used when the seed is omitted.
std::vector<Vec> generate_vectors(std::string_view generator, std::size_t d, std::uint64_t default_seed);

}  // namespace psf::cli
