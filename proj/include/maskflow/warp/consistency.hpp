#pragma once

#include <stdexcept>
#include <vector>

#include "maskflow/core/flow_field.hpp"

namespace maskflow::warp {

/// Thresholds for the forward-backward error test:
/// |F_fwd(x) + F_bwd(x + F_fwd(x))|^2 > tau_abs + tau_rel * (|F_fwd(x)|^2 + |F_bwd(...)|^2)
struct ConsistencyParams {
    double tau_abs = 0.5;   // px^2
    double tau_rel = 0.01;  // dimensionless

    void validate() const {
        if (tau_abs < 0.0 || tau_rel < 0.0)
            throw std::invalid_argument("ConsistencyParams: thresholds must be >= 0");
    }
};

/// Per-pixel occlusion/inconsistency flags on the grid of the forward field.
struct OcclusionMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> occluded;  // 1 = occluded/inconsistent

    OcclusionMask(int w, int h) : width(w), height(h), occluded(static_cast<std::size_t>(w) * h, 0) {}

    bool at(int x, int y) const {
        return occluded[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool value) {
        occluded[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
    }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto f : occluded) n += f;
        return n;
    }
};

/// Bidirectional flow-consistency check. The backward field is sampled
/// bilinearly at the forward-displaced position; displaced positions
/// outside the grid are flagged occluded outright.
OcclusionMask fb_consistency(const FlowField& fwd, const FlowField& bwd,
                             const ConsistencyParams& params);

} // namespace maskflow::warp
