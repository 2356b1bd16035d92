#include "maskflow/core/frame.hpp"

#include <algorithm>
#include <cmath>

#include "maskflow/core/edit.hpp"

namespace maskflow {

GrayImage to_gray(const Frame& f) {
    GrayImage g(f.width, f.height);
    const std::size_t n = static_cast<std::size_t>(f.width) * f.height;
    if (f.channels == 1) {
        for (std::size_t i = 0; i < n; ++i)
            g.data[i] = f.data[i] / 255.0;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double r = f.data[3 * i + 0];
            const double gg = f.data[3 * i + 1];
            const double b = f.data[3 * i + 2];
            g.data[i] = (0.299 * r + 0.587 * gg + 0.114 * b) / 255.0;
        }
    }
    return g;
}

Frame to_frame(const GrayImage& g) {
    Frame f(g.width, g.height, 1);
    for (std::size_t i = 0; i < g.data.size(); ++i) {
        const double v = std::clamp(g.data[i], 0.0, 1.0);
        f.data[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
    return f;
}

std::string to_string(EditTask t) {
    switch (t) {
        case EditTask::Add: return "add";
        case EditTask::Remove: return "remove";
        case EditTask::Replace: return "replace";
    }
    throw std::invalid_argument("EditTask: unknown value");
}

EditTask edit_task_from_string(const std::string& s) {
    if (s == "add") return EditTask::Add;
    if (s == "remove") return EditTask::Remove;
    if (s == "replace") return EditTask::Replace;
    throw std::invalid_argument("EditTask: expected add|remove|replace, got '" + s + "'");
}

} // namespace maskflow
