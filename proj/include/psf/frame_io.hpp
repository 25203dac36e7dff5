#pragma once

// Frame document (version 1), a JSON object:
//
//   {
//     "version": 1,
//     "label": "fourier(d=4)",          (optional)
//     "p": 2,
//     "dim": 4,
//     "n": 4,
//     "F": [ n rows of dim [re, im] pairs ],
//     "T": [ dim rows of n [re, im] pairs ]
//   }
//
// Numbers carry 17 significant digits. Loading re-runs frame validation.

#include <filesystem>
#include <string>
#include <string_view>

#include "psf/frames.hpp"

namespace psf {

std::string serialize_frame(const PSchauderFrame& frame);

/// ParseError (with line for syntax problems, field path for schema
/// problems); NotReconstructing / NotIsometric if the content is not a frame.
PSchauderFrame deserialize_frame(std::string_view text);
PSchauderFrame deserialize_frame(std::string_view text, const ProbeSet& probes);

PSchauderFrame load_frame_file(const std::filesystem::path& path);
void save_frame_file(const std::filesystem::path& path, const PSchauderFrame& frame);

}  // namespace psf
