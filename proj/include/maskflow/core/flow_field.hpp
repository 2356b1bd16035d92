#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace maskflow {

/// Dense per-pixel displacement between two frames: u = +x rightward,
/// v = +y downward, in pixels. Values must be finite.
struct FlowField {
    int width = 0;
    int height = 0;
    std::vector<double> u;
    std::vector<double> v;

    FlowField() = default;
    FlowField(int w, int h)
        : width(w), height(h), u(check_dims(w, h), 0.0), v(check_dims(w, h), 0.0) {}
    FlowField(int w, int h, std::vector<double> uu, std::vector<double> vv)
        : width(w), height(h), u(std::move(uu)), v(std::move(vv)) {
        const std::size_t n = check_dims(w, h);
        if (u.size() != n || v.size() != n)
            throw std::invalid_argument("FlowField: component length does not match width*height");
        check_finite();
    }

    double& ux(int x, int y) { return u[static_cast<std::size_t>(y) * width + x]; }
    double& vy(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
    double ux(int x, int y) const { return u[static_cast<std::size_t>(y) * width + x]; }
    double vy(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }

    bool same_shape(const FlowField& o) const {
        return width == o.width && height == o.height;
    }

    void check_finite() const {
        for (double x : u)
            if (!std::isfinite(x)) throw std::invalid_argument("FlowField: non-finite u value");
        for (double x : v)
            if (!std::isfinite(x)) throw std::invalid_argument("FlowField: non-finite v value");
    }

private:
    static std::size_t check_dims(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("FlowField: width and height must be >= 1");
        return static_cast<std::size_t>(w) * h;
    }
};

/// Paired forward (t -> t+1) and backward (t+1 -> t) flows for a T-frame
/// video; both sequences hold T-1 fields of one shape. May be empty for a
/// single-frame video.
struct FlowSequence {
    std::vector<FlowField> forward;
    std::vector<FlowField> backward;

    FlowSequence() = default;
    FlowSequence(std::vector<FlowField> fwd, std::vector<FlowField> bwd)
        : forward(std::move(fwd)), backward(std::move(bwd)) {
        if (forward.size() != backward.size())
            throw std::invalid_argument("FlowSequence: forward/backward length mismatch");
        for (std::size_t i = 0; i < forward.size(); ++i) {
            if (!forward[i].same_shape(forward.front()) || !backward[i].same_shape(forward.front()))
                throw std::invalid_argument("FlowSequence: fields must share one shape");
        }
    }

    std::size_t size() const { return forward.size(); }
    bool empty() const { return forward.empty(); }
    int width() const { return forward.front().width; }
    int height() const { return forward.front().height; }
};

} // namespace maskflow
