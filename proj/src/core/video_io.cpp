#include "maskflow/core/video_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "maskflow/core/image_io.hpp"

namespace fs = std::filesystem;

namespace maskflow {

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string frame_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06d.png", index);
    return buf;
}

} // namespace

std::vector<fs::path> list_numbered_pngs(const fs::path& dir) {
    if (!fs::is_directory(dir))
        throw IoError("not a directory: " + dir.string());
    std::vector<std::pair<long, fs::path>> indexed;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".png") continue;
        const std::string stem = entry.path().stem().string();
        if (!all_digits(stem)) continue;
        indexed.emplace_back(std::stol(stem), entry.path());
    }
    if (indexed.empty())
        throw IoError("no numbered .png files in: " + dir.string());
    std::sort(indexed.begin(), indexed.end());
    std::vector<fs::path> out;
    out.reserve(indexed.size());
    for (auto& [idx, p] : indexed) out.push_back(std::move(p));
    return out;
}

Video load_video(const fs::path& dir, double fps) {
    std::vector<Frame> frames;
    for (const fs::path& p : list_numbered_pngs(dir))
        frames.push_back(read_png(p));
    for (const Frame& f : frames)
        if (!f.same_shape(frames.front()))
            throw IoError("frame shape mismatch in: " + dir.string());
    return Video(std::move(frames), fps);
}

void save_video(const Video& video, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir))
        throw IoError("cannot create directory: " + dir.string());
    for (int i = 0; i < video.frame_count(); ++i)
        write_png(video.frames[i], dir / frame_name(i + 1));
}

MaskFrame load_mask(const fs::path& file) {
    const Frame f = read_png(file);
    if (f.channels != 1)
        throw IoError("mask must be single-channel grayscale: " + file.string());
    std::vector<double> values(f.data.size());
    bool binary = true;
    for (std::size_t i = 0; i < f.data.size(); ++i) {
        values[i] = f.data[i] / 255.0;
        if (f.data[i] != 0 && f.data[i] != 255) binary = false;
    }
    return MaskFrame(f.width, f.height, binary ? MaskKind::Binary : MaskKind::Soft,
                     std::move(values));
}

MaskSequence load_mask_sequence(const fs::path& dir) {
    std::vector<MaskFrame> masks;
    for (const fs::path& p : list_numbered_pngs(dir))
        masks.push_back(load_mask(p));
    return MaskSequence(std::move(masks));
}

void save_mask(const MaskFrame& mask, const fs::path& file) {
    Frame f(mask.width, mask.height, 1);
    for (std::size_t i = 0; i < mask.values.size(); ++i)
        f.data[i] = static_cast<std::uint8_t>(std::lround(mask.values[i] * 255.0));
    write_png(f, file);
}

void save_mask_sequence(const MaskSequence& seq, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir))
        throw IoError("cannot create directory: " + dir.string());
    for (int i = 0; i < seq.frame_count(); ++i)
        save_mask(seq.masks[i], dir / frame_name(i + 1));
}

} // namespace maskflow
