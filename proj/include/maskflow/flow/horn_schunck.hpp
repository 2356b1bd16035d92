#pragma once

#include <stdexcept>
#include <vector>

#include "maskflow/core/flow_field.hpp"
#include "maskflow/core/frame.hpp"
#include "maskflow/core/video.hpp"

namespace maskflow::flow {

/// Variational estimator settings. smoothness_weight multiplies the
/// squared flow-gradient penalty against the unit-weight data term.
struct HSParams {
    double smoothness_weight = 0.1;
    int iterations = 200;
    int pyramid_levels = 3;
    double pyramid_scale = 0.5;

    void validate() const {
        if (!(smoothness_weight > 0.0))
            throw std::invalid_argument("HSParams: smoothness_weight must be > 0");
        if (iterations < 1)
            throw std::invalid_argument("HSParams: iterations must be >= 1");
        if (pyramid_levels < 1)
            throw std::invalid_argument("HSParams: pyramid_levels must be >= 1");
        if (!(pyramid_scale > 0.0 && pyramid_scale < 1.0))
            throw std::invalid_argument("HSParams: pyramid_scale must be in (0,1)");
    }
};

/// Per-linearization energy traces (one vector per warp step, coarsest level
/// first). Each trace starts with the energy before the first relaxation
/// iteration and appends one value per iteration.
struct HSDiagnostics {
    std::vector<std::vector<double>> energy_traces;
};

/// Discrete Horn-Schunck energy of a flow for a frame pair:
/// sum over pixels of (Ix*u + Iy*v + It)^2 plus smoothness_weight times the
/// squared forward differences of u and v over the 4-neighbor grid.
double hs_energy(const GrayImage& prev, const GrayImage& next, const FlowField& flow,
                 double smoothness_weight);

/// Coarse-to-fine Horn-Schunck with block-Jacobi relaxation. Inputs are
/// grayscale frames with values in [0,1].
FlowField estimate_flow_hs(const GrayImage& prev, const GrayImage& next, const HSParams& params,
                           HSDiagnostics* diagnostics = nullptr);

/// Forward flow for every (t, t+1) and backward flow for every (t+1, t).
/// Requires at least two frames.
FlowSequence estimate_flow_sequence(const Video& video, const HSParams& params);

} // namespace maskflow::flow
