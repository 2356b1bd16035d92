#include "maskflow/flow/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace maskflow::flow {

FlowStats flow_magnitude_stats(const FlowSequence& flows) {
    if (flows.empty())
        throw std::invalid_argument("flow_magnitude_stats: empty forward sequence");
    FlowStats stats;
    double total = 0.0;
    std::size_t count = 0;
    for (const FlowField& f : flows.forward) {
        double frame_sum = 0.0;
        for (std::size_t i = 0; i < f.u.size(); ++i) {
            const double mag = std::hypot(f.u[i], f.v[i]);
            frame_sum += mag;
            stats.max_magnitude = std::max(stats.max_magnitude, mag);
        }
        stats.per_frame_means.push_back(frame_sum / f.u.size());
        total += frame_sum;
        count += f.u.size();
    }
    stats.mean_magnitude = total / count;
    return stats;
}

} // namespace maskflow::flow
