#pragma once

#include <filesystem>

#include <json.hpp>

#include "qvseg/cost.hpp"
#include "qvseg/layout.hpp"
#include "qvseg/measure.hpp"
#include "qvseg/pipeline.hpp"
#include "qvseg/video.hpp"

namespace qvseg {

// Video manifest: {"m_exp":..,"n_exp":..,"q":..,"frames":[[[..],..],..]}
// with frames[j][Y][X].
nlohmann::json video_to_json(const Video& video);
Video video_from_json(const nlohmann::json& j);
Video read_video_manifest(const std::filesystem::path& file);
void write_video_manifest(const Video& video, const std::filesystem::path& file);

// All emitted objects carry "bit_order": "lsb0" (wire 0 is the
// least-significant bit; bitstring keys render most-significant first).
nlohmann::json histogram_to_json(const Histogram& histogram, const std::vector<uint32_t>& qubits);
nlohmann::json cost_report_to_json(const CostReport& report);
nlohmann::json layout_to_json(const RegisterLayout& layout);
nlohmann::json segmentation_result_to_json(const SegmentationResult& result);

void write_json(const nlohmann::json& j, const std::filesystem::path& file);

}  // namespace qvseg
