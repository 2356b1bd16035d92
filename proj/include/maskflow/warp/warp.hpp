#pragma once

#include "maskflow/core/flow_field.hpp"
#include "maskflow/core/frame.hpp"
#include "maskflow/core/mask.hpp"

namespace maskflow::warp {

/// out(x,y) = bilinear sample of src at (x + u(x,y), y + v(x,y)).
/// Sample positions with no footprint overlap with the grid yield 0;
/// positions partially over the boundary are clamped onto it. The mask
/// overload always returns a Soft mask (bilinear output need not be 0/1).
MaskFrame backward_warp(const MaskFrame& src, const FlowField& sampling_flow);
GrayImage backward_warp(const GrayImage& src, const FlowField& sampling_flow);

/// Bilinear sample with the warp boundary policy above. Exposed for reuse
/// by tests and the consistency check.
double sample_zero_outside(const double* data, int width, int height, double x, double y);

} // namespace maskflow::warp
