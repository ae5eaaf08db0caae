#include "qvseg/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qvseg {

using nlohmann::json;

json video_to_json(const Video& video) {
    json frames = json::array();
    for (const auto& frame : video.frames) {
        json rows = json::array();
        for (const auto& row : frame) {
            rows.push_back(row);
        }
        frames.push_back(std::move(rows));
    }
    return json{{"m_exp", video.m_exp}, {"n_exp", video.n_exp}, {"q", video.q}, {"frames", frames}};
}

Video video_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m_exp") || !j.contains("n_exp") || !j.contains("q") ||
        !j.contains("frames")) {
        throw std::invalid_argument("video manifest needs m_exp, n_exp, q and frames");
    }
    Video video;
    video.m_exp = j.at("m_exp").get<int>();
    video.n_exp = j.at("n_exp").get<int>();
    video.q = j.at("q").get<int>();
    for (const auto& frame : j.at("frames")) {
        Frame f;
        for (const auto& row : frame) {
            std::vector<uint16_t> r;
            for (const auto& px : row) {
                const int64_t v = px.get<int64_t>();
                if (v < 0 || v > 65535) {
                    throw std::invalid_argument("pixel value " + std::to_string(v) + " out of range");
                }
                r.push_back(static_cast<uint16_t>(v));
            }
            f.push_back(std::move(r));
        }
        video.frames.push_back(std::move(f));
    }
    return video;
}

Video read_video_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(file.string() + ": " + e.what());
    }
    return video_from_json(j);
}

void write_video_manifest(const Video& video, const std::filesystem::path& file) {
    write_json(video_to_json(video), file);
}

json histogram_to_json(const Histogram& histogram, const std::vector<uint32_t>& qubits) {
    json counts = json::object();
    for (const auto& [key, n] : histogram.counts) {
        counts[histogram.key_string(key)] = n;
    }
    return json{{"bit_order", "lsb0"},
                {"shots", histogram.shots},
                {"measured_qubits", qubits},
                {"counts", counts}};
}

json cost_report_to_json(const CostReport& report) {
    json per_block = json::object();
    for (const auto& [block, cost] : report.per_block) {
        per_block[block] = cost;
    }
    json census = json::object();
    for (const auto& [kind, n] : report.gate_census) {
        census[std::string(gate_kind_name(kind))] = n;
    }
    json j{{"bit_order", "lsb0"},
           {"qubit_count", report.qubit_count},
           {"total_cost", report.total_cost},
           {"per_block", per_block},
           {"gate_census", census}};
    if (report.compact_qubit_count >= 0) {
        j["compact_qubit_count"] = report.compact_qubit_count;
    }
    return j;
}

static json range_to_json(WireRange r) {
    return json{{"start", r.start}, {"count", r.count}};
}

json layout_to_json(const RegisterLayout& layout) {
    return json{{"bit_order", "lsb0"},
                {"m_exp", layout.m_exp},
                {"n_exp", layout.n_exp},
                {"q", layout.q},
                {"width", layout.width()},
                {"compact_width", compact_qubit_count(layout.m_exp, layout.n_exp, layout.q)},
                {"registers",
                 json{{"color", range_to_json(layout.color)},
                      {"pos", range_to_json(layout.pos)},
                      {"frame", range_to_json(layout.frame)},
                      {"diff_prev", range_to_json(layout.diff_prev)},
                      {"diff_next", range_to_json(layout.diff_next)},
                      {"anc", range_to_json(layout.anc)},
                      {"cmp_out", range_to_json(layout.cmp_out)},
                      {"seg_out", range_to_json(layout.seg_out)}}}};
}

json segmentation_result_to_json(const SegmentationResult& result) {
    json j{{"bit_order", "lsb0"},
           {"result", video_to_json(result.result_video)},
           {"cost", cost_report_to_json(result.cost)},
           {"layout", layout_to_json(result.layout)}};
    if (result.histogram.has_value()) {
        j["histogram"] = histogram_to_json(*result.histogram, measurement_qubits(result.layout));
    }
    if (result.dense_check.has_value()) {
        j["dense_check"] = json{{"trajectories", result.dense_check->trajectories},
                                {"tv_distance", result.dense_check->tv_distance},
                                {"pass", result.dense_check->pass}};
    }
    return j;
}

void write_json(const json& j, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + file.string());
    }
    out << j.dump(2) << '\n';
}

}  // namespace qvseg
