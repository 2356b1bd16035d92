#pragma once

#include <stdexcept>
#include <vector>

#include "maskflow/core/frame.hpp"

namespace maskflow {

/// Ordered frame sequence of homogeneous shape.
struct Video {
    std::vector<Frame> frames;
    double fps = 0.0;

    Video(std::vector<Frame> fr, double frames_per_second)
        : frames(std::move(fr)), fps(frames_per_second) {
        if (frames.empty())
            throw std::invalid_argument("Video: needs at least one frame");
        if (!(fps > 0.0))
            throw std::invalid_argument("Video: fps must be > 0");
        for (const Frame& f : frames)
            if (!f.same_shape(frames.front()))
                throw std::invalid_argument("Video: frames must share one shape");
    }

    int width() const { return frames.front().width; }
    int height() const { return frames.front().height; }
    int channels() const { return frames.front().channels; }
    int frame_count() const { return static_cast<int>(frames.size()); }
};

} // namespace maskflow
