#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qvseg/circuit.hpp"
#include "qvseg/cost.hpp"
#include "qvseg/encoding.hpp"
#include "qvseg/layout.hpp"
#include "qvseg/measure.hpp"
#include "qvseg/video.hpp"

namespace qvseg {

enum class RunMode { sparse, dense_check };

inline constexpr uint64_t kDefaultShots = 1024;
inline constexpr uint64_t kDefaultTrajectories = 4096;
inline constexpr double kDenseCheckTolerance = 0.05;

struct DenseCheckReport {
    uint64_t trajectories = 0;
    double tv_distance = 0.0;
    bool pass = false;
};

struct SegmentationResult {
    Video result_video;  // binary, q = 1
    std::optional<Histogram> histogram;
    CostReport cost;
    RegisterLayout layout;
    std::optional<DenseCheckReport> dense_check;
};

// Video-independent processing skeleton: copy, frame shifts, the two
// absolute subtractions, the two binarizations against the threshold, the
// final AND, and the color-register reset groups. Its gate count depends on
// (m_exp, q) only — never on n_exp — which is the point of the construction.
std::pair<Circuit, RegisterLayout> build_segmentation_circuit(int m_exp, int n_exp, int q,
                                                              uint32_t threshold);

// Executable circuit for one video: the skeleton with the three
// label-conditioned color loads ("load" blocks) inserted at the shifted
// frame phases. Loads are state preparation and are priced separately.
Circuit build_video_pipeline_circuit(const Video& video, const RegisterLayout& layout,
                                     uint32_t threshold);

// Runs the full pipeline: encode, simulate, decode, and optionally sample a
// histogram (shots) and cross-check against the dense trajectory simulator
// (RunMode::dense_check).
SegmentationResult segment_video(const Video& video, uint32_t threshold,
                                 RunMode mode = RunMode::sparse,
                                 std::optional<uint64_t> shots = std::nullopt, uint64_t seed = 0,
                                 uint64_t trajectories = kDefaultTrajectories);

// Cost and width report for the processing skeleton at these parameters,
// including the compact width variant.
CostReport qubit_and_cost_summary(int m_exp, int n_exp, int q);

}  // namespace qvseg
