#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace maskflow {

enum class EditTask { Add, Remove, Replace };

std::string to_string(EditTask t);
EditTask edit_task_from_string(const std::string& s);

/// The textual edit request driving one dataset pair.
struct EditInstruction {
    std::string text;
    std::optional<std::string> scene_text;
    EditTask task = EditTask::Add;

    EditInstruction() = default;
    EditInstruction(std::string txt, EditTask t, std::optional<std::string> scene = std::nullopt)
        : text(std::move(txt)), scene_text(std::move(scene)), task(t) {
        if (text.empty())
            throw std::invalid_argument("EditInstruction: text must be non-empty");
    }
};

enum class PairStatus { Complete, Failed };

/// Per-pair measured statistics persisted in the manifest and consumed by
/// the keep() filter.
struct PairStats {
    double area_ratio = 0.0;  // mean masked-area fraction across frames
    double flow_mag = 0.0;    // mean flow magnitude, px/frame

    bool finite() const { return std::isfinite(area_ratio) && std::isfinite(flow_mag); }
};

/// Shape/rate metadata of the source video, recorded so manifest-level
/// checks do not have to reload media.
struct VideoMeta {
    double fps = 0.0;
    int frames = 0;
    int width = 0;
    int height = 0;
};

/// One manifest record: a source/target/instruction/mask/flow bundle. Paths
/// are relative to the dataset root.
struct EditPair {
    std::string id;
    EditInstruction instruction;
    std::string source_image;
    std::string target_image;
    std::string source_video;
    std::string target_video;
    std::string masks;
    std::string flows;
    PairStats stats;
    VideoMeta video_meta;
    bool keep = false;
    PairStatus status = PairStatus::Failed;
    std::string error;  // empty unless status == Failed
};

} // namespace maskflow
