#pragma once

#include <filesystem>

#include "maskflow/core/flow_field.hpp"

namespace maskflow::flow {

/// Middlebury ".flo": float magic 202021.25, int32 width, int32 height,
/// then row-major interleaved (u,v) float32 pairs, all little-endian.
FlowField read_flo(const std::filesystem::path& path);
void write_flo(const FlowField& field, const std::filesystem::path& path);

/// Directory convention: forward_000001.flo .. forward_%06d, plus matching
/// backward_%06d.flo files, one pair per consecutive frame pair.
FlowSequence load_flow_sequence(const std::filesystem::path& dir);
void save_flow_sequence(const FlowSequence& flows, const std::filesystem::path& dir);

} // namespace maskflow::flow
