#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace maskflow {

/// 8-bit raster frame, row-major, origin top-left, x rightward, y downward.
/// channels is 1 (gray) or 3 (RGB). Immutable by convention after construction.
struct Frame {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    Frame() = default;
    Frame(int w, int h, int c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c),
          data(check_dims(w, h, c), fill) {}
    Frame(int w, int h, int c, std::vector<std::uint8_t> d)
        : width(w), height(h), channels(c), data(std::move(d)) {
        if (data.size() != check_dims(w, h, c))
            throw std::invalid_argument("Frame: data length does not match width*height*channels");
    }

    std::uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const Frame& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }

private:
    static std::size_t check_dims(int w, int h, int c) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Frame: width and height must be >= 1");
        if (c != 1 && c != 3)
            throw std::invalid_argument("Frame: channels must be 1 or 3");
        return static_cast<std::size_t>(w) * h * c;
    }
};

/// 64-bit float grayscale raster used by the numeric paths (flow, warping).
/// Values are nominally in [0,1] but the type does not force a range.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(check_dims(w, h), fill) {}
    GrayImage(int w, int h, std::vector<double> d)
        : width(w), height(h), data(std::move(d)) {
        if (data.size() != check_dims(w, h))
            throw std::invalid_argument("GrayImage: data length does not match width*height");
    }

    double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

    bool same_shape(const GrayImage& o) const {
        return width == o.width && height == o.height;
    }

private:
    static std::size_t check_dims(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("GrayImage: width and height must be >= 1");
        return static_cast<std::size_t>(w) * h;
    }
};

/// Rec.601 luma. Identity on single-channel frames.
GrayImage to_gray(const Frame& f);

/// Quantize back to an 8-bit grayscale frame, clamping to [0,1] first.
Frame to_frame(const GrayImage& g);

/// Axis-aligned box in pixel coordinates, max-exclusive not implied: the
/// invariant is simply x_min < x_max and y_min < y_max within the frame.
struct BBox {
    int x_min, y_min, x_max, y_max;

    BBox(int x0, int y0, int x1, int y1) : x_min(x0), y_min(y0), x_max(x1), y_max(y1) {
        if (!(x_min < x_max) || !(y_min < y_max))
            throw std::invalid_argument("BBox: requires x_min < x_max and y_min < y_max");
        if (x_min < 0 || y_min < 0)
            throw std::invalid_argument("BBox: negative origin");
    }

    void check_within(int width, int height) const {
        if (x_max > width || y_max > height)
            throw std::invalid_argument("BBox: exceeds frame bounds");
    }
};

} // namespace maskflow
