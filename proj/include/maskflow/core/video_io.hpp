#pragma once

#include <filesystem>
#include <vector>

#include "maskflow/core/mask.hpp"
#include "maskflow/core/video.hpp"

namespace maskflow {

/// Files named by a zero-padded decimal index plus ".png", sorted by index.
/// Throws IoError when the directory is missing or holds no such files.
std::vector<std::filesystem::path> list_numbered_pngs(const std::filesystem::path& dir);

/// Load a video from a directory of numbered PNG frames. fps is not stored
/// with the frames; callers supply it (default 16).
Video load_video(const std::filesystem::path& dir, double fps = 16.0);

/// Write one PNG per frame, named 000001.png upward. Creates the directory.
void save_video(const Video& video, const std::filesystem::path& dir);

/// Masks are stored as 8-bit single-channel PNGs, 0 <-> 0.0 and 255 <-> 1.0.
/// A loaded mask whose samples are all 0 or 255 is tagged Binary, else Soft.
MaskSequence load_mask_sequence(const std::filesystem::path& dir);
MaskFrame load_mask(const std::filesystem::path& file);

/// Soft values quantize to round(v*255) on save.
void save_mask_sequence(const MaskSequence& seq, const std::filesystem::path& dir);
void save_mask(const MaskFrame& mask, const std::filesystem::path& file);

} // namespace maskflow
