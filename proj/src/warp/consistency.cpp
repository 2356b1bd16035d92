#include "maskflow/warp/consistency.hpp"

#include <algorithm>
#include <cmath>

namespace maskflow::warp {

namespace {

// Plain interior bilinear sample; caller guarantees (x,y) lies in
// [0, w-1] x [0, h-1].
double sample_interior(const std::vector<double>& data, int w, int h, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = std::min(x0 + 1, w - 1);
    const int y1 = std::min(y0 + 1, h - 1);
    const double fx = x - x0, fy = y - y0;
    const auto at = [&](int xx, int yy) { return data[static_cast<std::size_t>(yy) * w + xx]; };
    return (1 - fy) * ((1 - fx) * at(x0, y0) + fx * at(x1, y0)) +
           fy * ((1 - fx) * at(x0, y1) + fx * at(x1, y1));
}

} // namespace

OcclusionMask fb_consistency(const FlowField& fwd, const FlowField& bwd,
                             const ConsistencyParams& params) {
    params.validate();
    if (!fwd.same_shape(bwd))
        throw std::invalid_argument("fb_consistency: field shapes differ");
    const int w = fwd.width, h = fwd.height;
    OcclusionMask occ(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double fu = fwd.ux(x, y), fv = fwd.vy(x, y);
            const double px = x + fu, py = y + fv;
            if (px < 0.0 || px > w - 1.0 || py < 0.0 || py > h - 1.0) {
                occ.set(x, y, true);
                continue;
            }
            const double bu = sample_interior(bwd.u, w, h, px, py);
            const double bv = sample_interior(bwd.v, w, h, px, py);
            const double ex = fu + bu, ey = fv + bv;
            const double err2 = ex * ex + ey * ey;
            const double mag2 = fu * fu + fv * fv + bu * bu + bv * bv;
            occ.set(x, y, err2 > params.tau_abs + params.tau_rel * mag2);
        }
    return occ;
}

} // namespace maskflow::warp
