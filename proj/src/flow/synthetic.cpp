#include "maskflow/flow/synthetic.hpp"

#include <cmath>

namespace maskflow::flow {

SyntheticMotion SyntheticMotion::inverse() const {
    SyntheticMotion inv = *this;
    switch (kind) {
        case Kind::Translation:
            inv.dx = -dx;
            inv.dy = -dy;
            break;
        case Kind::Rotation:
            inv.angle = -angle;
            break;
        case Kind::Zoom:
            inv.factor = 1.0 / factor;
            break;
    }
    return inv;
}

FlowField synthetic_flow(const SyntheticMotion& motion, int width, int height) {
    FlowField f(width, height);
    const double cx = (width - 1) / 2.0;
    const double cy = (height - 1) / 2.0;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            double u = 0.0, v = 0.0;
            const double rx = x - cx, ry = y - cy;
            switch (motion.kind) {
                case SyntheticMotion::Kind::Translation:
                    u = motion.dx;
                    v = motion.dy;
                    break;
                case SyntheticMotion::Kind::Rotation: {
                    const double c = std::cos(motion.angle), s = std::sin(motion.angle);
                    u = (c * rx - s * ry) - rx;
                    v = (s * rx + c * ry) - ry;
                    break;
                }
                case SyntheticMotion::Kind::Zoom:
                    u = (motion.factor - 1.0) * rx;
                    v = (motion.factor - 1.0) * ry;
                    break;
            }
            f.ux(x, y) = u;
            f.vy(x, y) = v;
        }
    return f;
}

} // namespace maskflow::flow
