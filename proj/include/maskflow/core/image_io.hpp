#pragma once

#include <filesystem>
#include <stdexcept>

#include "maskflow/core/frame.hpp"

namespace maskflow {

/// I/O or file-format failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Read an 8-bit PNG as gray (1 channel) or RGB (3 channels). Palette images
/// are expanded to RGB and 16-bit depth is reduced to 8; alpha channels are
/// rejected.
Frame read_png(const std::filesystem::path& path);

/// Write a Frame as an 8-bit gray or RGB PNG (lossless).
void write_png(const Frame& frame, const std::filesystem::path& path);

} // namespace maskflow
