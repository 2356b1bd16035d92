#include "maskflow/flow/horn_schunck.hpp"

#include <algorithm>
#include <cmath>

namespace maskflow::flow {

namespace {

constexpr int kWarpsPerLevel = 3;  // linearization rounds per pyramid level
constexpr int kMinLevelSize = 8;

struct LevelPair {
    GrayImage prev;
    GrayImage next;
};

double sample_clamped(const GrayImage& img, double x, double y) {
    x = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
    y = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int x1 = std::min(x0 + 1, img.width - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double fx = x - x0, fy = y - y0;
    return (1 - fy) * ((1 - fx) * img.at(x0, y0) + fx * img.at(x1, y0)) +
           fy * ((1 - fx) * img.at(x0, y1) + fx * img.at(x1, y1));
}

GrayImage gaussian_blur(const GrayImage& img, double sigma) {
    if (sigma <= 0.0) return img;
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& k : kernel) k /= sum;

    GrayImage tmp(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * img.at(std::clamp(x + i, 0, img.width - 1), y);
            tmp.at(x, y) = acc;
        }
    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += kernel[i + radius] * tmp.at(x, std::clamp(y + i, 0, img.height - 1));
            out.at(x, y) = acc;
        }
    return out;
}

GrayImage resize_bilinear(const GrayImage& img, int w, int h) {
    GrayImage out(w, h);
    const double sx = static_cast<double>(img.width) / w;
    const double sy = static_cast<double>(img.height) / h;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.at(x, y) = sample_clamped(img, (x + 0.5) * sx - 0.5, (y + 0.5) * sy - 0.5);
    return out;
}

GrayImage downsample(const GrayImage& img, double scale, int w, int h) {
    const double sigma = 0.8 * std::sqrt(1.0 / (scale * scale) - 1.0);
    return resize_bilinear(gaussian_blur(img, sigma), w, h);
}

/// Replicate-edge central differences of the frame-pair average; It is the
/// plain frame difference.
void derivatives(const GrayImage& prev, const GrayImage& warped_next, GrayImage& ix, GrayImage& iy,
                 GrayImage& it) {
    const int w = prev.width, h = prev.height;
    GrayImage avg(w, h);
    for (std::size_t i = 0; i < avg.data.size(); ++i)
        avg.data[i] = 0.5 * (prev.data[i] + warped_next.data[i]);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const int xm = std::max(x - 1, 0), xp = std::min(x + 1, w - 1);
            const int ym = std::max(y - 1, 0), yp = std::min(y + 1, h - 1);
            ix.at(x, y) = (avg.at(xp, y) - avg.at(xm, y)) / (xp - xm > 0 ? xp - xm : 1);
            iy.at(x, y) = (avg.at(x, yp) - avg.at(x, ym)) / (yp - ym > 0 ? yp - ym : 1);
            it.at(x, y) = warped_next.at(x, y) - prev.at(x, y);
        }
}

double linearized_energy(const GrayImage& ix, const GrayImage& iy, const GrayImage& it,
                         const std::vector<double>& tu, const std::vector<double>& tv, int w, int h,
                         double lambda) {
    double e = 0.0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            const double r = ix.at(x, y) * tu[i] + iy.at(x, y) * tv[i] + it.at(x, y);
            e += r * r;
            if (x + 1 < w) {
                const double du = tu[i] - tu[i + 1], dv = tv[i] - tv[i + 1];
                e += lambda * (du * du + dv * dv);
            }
            if (y + 1 < h) {
                const double du = tu[i] - tu[i + w], dv = tv[i] - tv[i + w];
                e += lambda * (du * du + dv * dv);
            }
        }
    return e;
}

/// One linearization round: block-Jacobi relaxation of the increments with
/// the smoothness applied to the total flow.
void relax(const GrayImage& ix, const GrayImage& iy, const GrayImage& it, std::vector<double>& u,
           std::vector<double>& v, const HSParams& params, HSDiagnostics* diagnostics) {
    const int w = ix.width, h = ix.height;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    const double lambda = params.smoothness_weight;

    std::vector<double> du(n, 0.0), dv(n, 0.0), du_next(n, 0.0), dv_next(n, 0.0);
    std::vector<double> tu(n), tv(n);  // scratch: total flow for energy traces

    std::vector<double>* trace = nullptr;
    if (diagnostics) {
        diagnostics->energy_traces.emplace_back();
        trace = &diagnostics->energy_traces.back();
        for (std::size_t i = 0; i < n; ++i) tu[i] = u[i], tv[i] = v[i];
        trace->push_back(linearized_energy(ix, iy, it, tu, tv, w, h, lambda));
    }

    for (int iter = 0; iter < params.iterations; ++iter) {
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                const std::size_t i = static_cast<std::size_t>(y) * w + x;
                double su = 0.0, sv = 0.0;
                int nb = 0;
                auto add = [&](std::size_t j) {
                    su += (u[j] + du[j]) - u[i];
                    sv += (v[j] + dv[j]) - v[i];
                    ++nb;
                };
                if (x > 0) add(i - 1);
                if (x + 1 < w) add(i + 1);
                if (y > 0) add(i - w);
                if (y + 1 < h) add(i + w);

                const double gx = ix.at(x, y), gy = iy.at(x, y), gt = it.at(x, y);
                const double a = gx * gx + lambda * nb;
                const double b = gx * gy;
                const double c = gy * gy + lambda * nb;
                const double r1 = -gx * gt + lambda * su;
                const double r2 = -gy * gt + lambda * sv;
                const double det = a * c - b * b;
                du_next[i] = (c * r1 - b * r2) / det;
                dv_next[i] = (a * r2 - b * r1) / det;
            }
        du.swap(du_next);
        dv.swap(dv_next);
        if (trace) {
            for (std::size_t i = 0; i < n; ++i) tu[i] = u[i] + du[i], tv[i] = v[i] + dv[i];
            trace->push_back(linearized_energy(ix, iy, it, tu, tv, w, h, lambda));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        u[i] += du[i];
        v[i] += dv[i];
    }
}

} // namespace

double hs_energy(const GrayImage& prev, const GrayImage& next, const FlowField& flow,
                 double smoothness_weight) {
    if (!prev.same_shape(next) || prev.width != flow.width || prev.height != flow.height)
        throw std::invalid_argument("hs_energy: shape mismatch");
    GrayImage ix(prev.width, prev.height), iy(prev.width, prev.height), it(prev.width, prev.height);
    derivatives(prev, next, ix, iy, it);
    return linearized_energy(ix, iy, it, flow.u, flow.v, prev.width, prev.height,
                             smoothness_weight);
}

FlowField estimate_flow_hs(const GrayImage& prev, const GrayImage& next, const HSParams& params,
                           HSDiagnostics* diagnostics) {
    params.validate();
    if (!prev.same_shape(next))
        throw std::invalid_argument("estimate_flow_hs: frames must share one shape");
    for (const GrayImage* img : {&prev, &next})
        for (double s : img->data)
            if (!std::isfinite(s) || s < 0.0 || s > 1.0)
                throw std::invalid_argument("estimate_flow_hs: samples must be in [0,1]");

    // Shrink until a level would fall below the minimum extent.
    std::vector<std::pair<int, int>> sizes{{prev.width, prev.height}};
    while (static_cast<int>(sizes.size()) < params.pyramid_levels) {
        const int w = std::max(1, static_cast<int>(std::lround(sizes.back().first * params.pyramid_scale)));
        const int h = std::max(1, static_cast<int>(std::lround(sizes.back().second * params.pyramid_scale)));
        if (std::min(w, h) < kMinLevelSize) break;
        sizes.emplace_back(w, h);
    }

    std::vector<LevelPair> pyramid;
    pyramid.push_back({prev, next});
    for (std::size_t k = 1; k < sizes.size(); ++k) {
        pyramid.push_back({downsample(pyramid[k - 1].prev, params.pyramid_scale, sizes[k].first,
                                      sizes[k].second),
                           downsample(pyramid[k - 1].next, params.pyramid_scale, sizes[k].first,
                                      sizes[k].second)});
    }

    std::vector<double> u, v;
    int cw = 0, ch = 0;
    for (int level = static_cast<int>(pyramid.size()) - 1; level >= 0; --level) {
        const GrayImage& lp = pyramid[level].prev;
        const GrayImage& ln = pyramid[level].next;
        const int w = lp.width, h = lp.height;

        if (u.empty()) {
            u.assign(static_cast<std::size_t>(w) * h, 0.0);
            v.assign(static_cast<std::size_t>(w) * h, 0.0);
        } else {
            GrayImage cu(cw, ch, std::move(u)), cv(cw, ch, std::move(v));
            GrayImage fu = resize_bilinear(cu, w, h), fv = resize_bilinear(cv, w, h);
            const double rx = static_cast<double>(w) / cw, ry = static_cast<double>(h) / ch;
            u = std::move(fu.data);
            v = std::move(fv.data);
            for (double& x : u) x *= rx;
            for (double& x : v) x *= ry;
        }
        cw = w;
        ch = h;

        GrayImage ix(w, h), iy(w, h), it(w, h), warped(w, h);
        for (int warp = 0; warp < kWarpsPerLevel; ++warp) {
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    const std::size_t i = static_cast<std::size_t>(y) * w + x;
                    warped.at(x, y) = sample_clamped(ln, x + u[i], y + v[i]);
                }
            derivatives(lp, warped, ix, iy, it);
            relax(ix, iy, it, u, v, params, diagnostics);
        }
    }

    return FlowField(prev.width, prev.height, std::move(u), std::move(v));
}

FlowSequence estimate_flow_sequence(const Video& video, const HSParams& params) {
    if (video.frame_count() < 2)
        throw std::invalid_argument("estimate_flow_sequence: needs at least two frames");
    std::vector<GrayImage> gray;
    gray.reserve(video.frames.size());
    for (const Frame& f : video.frames) gray.push_back(to_gray(f));

    std::vector<FlowField> fwd, bwd;
    for (std::size_t t = 0; t + 1 < gray.size(); ++t) {
        fwd.push_back(estimate_flow_hs(gray[t], gray[t + 1], params));
        bwd.push_back(estimate_flow_hs(gray[t + 1], gray[t], params));
    }
    return FlowSequence(std::move(fwd), std::move(bwd));
}

} // namespace maskflow::flow
