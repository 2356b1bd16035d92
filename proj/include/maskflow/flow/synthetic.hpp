#pragma once

#include "maskflow/core/flow_field.hpp"

namespace maskflow::flow {

/// Analytic motion models for test scenes and oracles. Rotation and zoom are
/// about the pixel-center of the grid, ((w-1)/2, (h-1)/2).
struct SyntheticMotion {
    enum class Kind { Translation, Rotation, Zoom };
    Kind kind = Kind::Translation;
    double dx = 0.0, dy = 0.0;  // translation, px/frame
    double angle = 0.0;         // rotation, radians/frame
    double factor = 1.0;        // zoom, scale/frame

    static SyntheticMotion translation(double dx, double dy) {
        return {Kind::Translation, dx, dy, 0.0, 1.0};
    }
    static SyntheticMotion rotation(double radians) {
        return {Kind::Rotation, 0.0, 0.0, radians, 1.0};
    }
    static SyntheticMotion zoom(double factor) {
        return {Kind::Zoom, 0.0, 0.0, 0.0, factor};
    }

    /// The inverse step (frame t+1 back to t).
    SyntheticMotion inverse() const;
};

/// Field mapping each pixel to its displacement under one motion step.
FlowField synthetic_flow(const SyntheticMotion& motion, int width, int height);

} // namespace maskflow::flow
