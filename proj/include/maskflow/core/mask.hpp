#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace maskflow {

enum class MaskKind { Soft, Binary };

/// Per-pixel edit-region mask, values in [0,1]. Binary kind additionally
/// requires every value to be exactly 0 or 1. Convention: 1 = edit region.
struct MaskFrame {
    int width = 0;
    int height = 0;
    MaskKind kind = MaskKind::Soft;
    std::vector<double> values;

    MaskFrame() = default;
    MaskFrame(int w, int h, MaskKind k, double fill = 0.0)
        : width(w), height(h), kind(k), values(check_dims(w, h), fill) {
        check_values();
    }
    MaskFrame(int w, int h, MaskKind k, std::vector<double> v)
        : width(w), height(h), kind(k), values(std::move(v)) {
        if (values.size() != check_dims(w, h))
            throw std::invalid_argument("MaskFrame: value count does not match width*height");
        check_values();
    }

    double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }

    bool same_shape(const MaskFrame& o) const {
        return width == o.width && height == o.height;
    }

    /// Count of pixels with value >= 0.5 (exactly the 1-pixels for binary masks).
    std::size_t on_pixels() const {
        std::size_t n = 0;
        for (double v : values)
            if (v >= 0.5) ++n;
        return n;
    }

private:
    static std::size_t check_dims(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("MaskFrame: width and height must be >= 1");
        return static_cast<std::size_t>(w) * h;
    }
    void check_values() const {
        for (double v : values) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw std::invalid_argument("MaskFrame: values must be finite and in [0,1]");
            if (kind == MaskKind::Binary && v != 0.0 && v != 1.0)
                throw std::invalid_argument("MaskFrame: binary mask values must be 0 or 1");
        }
    }
};

/// T masks of homogeneous shape; length is validated against the owning
/// video where the two meet (propagation, overlay, metrics).
struct MaskSequence {
    std::vector<MaskFrame> masks;

    explicit MaskSequence(std::vector<MaskFrame> m) : masks(std::move(m)) {
        if (masks.empty())
            throw std::invalid_argument("MaskSequence: needs at least one mask");
        for (const MaskFrame& f : masks)
            if (!f.same_shape(masks.front()))
                throw std::invalid_argument("MaskSequence: masks must share one shape");
    }

    int width() const { return masks.front().width; }
    int height() const { return masks.front().height; }
    int frame_count() const { return static_cast<int>(masks.size()); }
};

} // namespace maskflow
