#pragma once

#include <vector>

#include "maskflow/core/flow_field.hpp"

namespace maskflow::flow {

/// Magnitude statistics over the forward fields of a sequence.
struct FlowStats {
    double mean_magnitude = 0.0;  // mean over all pixels of all forward fields
    double max_magnitude = 0.0;
    std::vector<double> per_frame_means;
};

FlowStats flow_magnitude_stats(const FlowSequence& flows);

} // namespace maskflow::flow
