#include "maskflow/warp/warp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maskflow::warp {

namespace {

void check_shapes(int w, int h, const FlowField& flow) {
    if (flow.width != w || flow.height != h)
        throw std::invalid_argument("backward_warp: flow shape does not match source");
    flow.check_finite();
}

std::vector<double> warp_values(const std::vector<double>& src, int w, int h,
                                const FlowField& flow) {
    std::vector<double> out(src.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out[static_cast<std::size_t>(y) * w + x] =
                sample_zero_outside(src.data(), w, h, x + flow.ux(x, y), y + flow.vy(x, y));
    return out;
}

} // namespace

double sample_zero_outside(const double* data, int width, int height, double x, double y) {
    // No footprint overlap at all: the whole 2x2 neighborhood is off-grid.
    if (x <= -1.0 || x >= static_cast<double>(width) || y <= -1.0 ||
        y >= static_cast<double>(height))
        return 0.0;
    x = std::clamp(x, 0.0, static_cast<double>(width - 1));
    y = std::clamp(y, 0.0, static_cast<double>(height - 1));
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = std::min(x0 + 1, width - 1);
    const int y1 = std::min(y0 + 1, height - 1);
    const double fx = x - x0, fy = y - y0;
    const auto at = [&](int xx, int yy) { return data[static_cast<std::size_t>(yy) * width + xx]; };
    return (1 - fy) * ((1 - fx) * at(x0, y0) + fx * at(x1, y0)) +
           fy * ((1 - fx) * at(x0, y1) + fx * at(x1, y1));
}

MaskFrame backward_warp(const MaskFrame& src, const FlowField& sampling_flow) {
    check_shapes(src.width, src.height, sampling_flow);
    return MaskFrame(src.width, src.height, MaskKind::Soft,
                     warp_values(src.values, src.width, src.height, sampling_flow));
}

GrayImage backward_warp(const GrayImage& src, const FlowField& sampling_flow) {
    check_shapes(src.width, src.height, sampling_flow);
    return GrayImage(src.width, src.height,
                     warp_values(src.data, src.width, src.height, sampling_flow));
}

} // namespace maskflow::warp
